import io
from contextlib import redirect_stdout

import pytest

from factorweight.cli import dispatch
from factorweight.report import WitnessDoc


def run_cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = dispatch(argv)
    return code, buf.getvalue()


@pytest.fixture
def k4_file(tmp_path):
    p = tmp_path / "k4.txt"
    p.write_text("n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    return str(p)


@pytest.fixture
def c6_file(tmp_path):
    p = tmp_path / "c6.txt"
    p.write_text("n 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n")
    return str(p)


def witness_block(report_text):
    return "\n".join(
        line[len("witness."):]
        for line in report_text.splitlines() if line.startswith("witness.")) + "\n"


def test_factor_pair_feasible(k4_file, tmp_path):
    out_path = tmp_path / "w.txt"
    code, out = run_cli(["factor", "--spec", "pair", "--aminus", "1",
                         "--aplus", "2", "--in", k4_file, "--out", str(out_path)])
    assert code == 0
    assert "verdict: feasible" in out
    assert "check.degrees-within-lists: pass" in out
    # the emitted file and the report's witness block match byte for byte
    assert out_path.read_text() == witness_block(out)


def test_factor_witness_reverifies_byte_identically(k4_file, tmp_path):
    out_path = tmp_path / "w.txt"
    _, factor_out = run_cli(["factor", "--spec", "pair", "--aminus", "1",
                             "--aplus", "2", "--in", k4_file, "--out", str(out_path)])
    code, check_out = run_cli(["check", "--witness", str(out_path), "--pred", "factor"])
    assert code == 0
    assert "verdict: verified" in check_out
    assert witness_block(check_out) == out_path.read_text()


def test_weight_group_roundtrip(k4_file, tmp_path):
    out_path = tmp_path / "w.txt"
    code, out = run_cli(["weight", "--group", "4", "--in", k4_file,
                         "--out", str(out_path)])
    assert code == 0
    code2, check_out = run_cli(["check", "--witness", str(out_path), "--pred", "vc"])
    assert code2 == 0
    assert witness_block(check_out) == out_path.read_text()


def test_weight_group_obstructed_exit(c6_file):
    code, out = run_cli(["weight", "--group", "2", "--in", c6_file])
    assert code == 1
    assert "verdict: obstructed" in out


def test_oracle_zero_count_exit(c6_file):
    code, out = run_cli(["oracle", "--k", "2", "--pred", "vc", "--in", c6_file])
    assert code == 1
    assert "note: count: 0" in out


def test_oracle_witness_roundtrip(k4_file, tmp_path):
    out_path = tmp_path / "w.txt"
    code, out = run_cli(["oracle", "--k", "3", "--pred", "vc", "--in", k4_file,
                         "--out", str(out_path)])
    assert code == 0
    code2, check_out = run_cli(["check", "--witness", str(out_path), "--pred", "vc"])
    assert code2 == 0
    assert witness_block(check_out) == out_path.read_text()


def test_usage_error_exit_code():
    code, _ = run_cli(["factor", "--spec", "pair"])
    assert code == 2


def test_unreadable_graph_is_usage_error(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 0\n")
    code, out = run_cli(["factor", "--spec", "pair", "--auto", "--in", str(bad)])
    assert code == 2
    assert "verdict: error" in out


def test_gen_deterministic():
    _, out1 = run_cli(["gen", "--kind", "random-planar", "--n", "10", "--seed", "4"])
    _, out2 = run_cli(["gen", "--kind", "random-planar", "--n", "10", "--seed", "4"])
    assert out1 == out2
    assert out1.startswith("n 10\n")


def test_gen_feeds_other_commands(tmp_path):
    _, text = run_cli(["gen", "--kind", "random-bipartite", "--a", "8", "--b", "8",
                       "--p", "0.7", "--delta", "6", "--seed", "5"])
    gpath = tmp_path / "g.txt"
    gpath.write_text(text)
    code, out = run_cli(["weight", "--avd2", "--in", str(gpath)])
    assert code == 0
    assert "check.neighbors-distinguished: pass" in out


def test_graph6_prefix_input(tmp_path):
    gpath = tmp_path / "g.txt"
    gpath.write_text("graph6:C~\n")  # complete graph on 4 vertices
    code, out = run_cli(["factor", "--spec", "pair", "--aminus", "1", "--aplus", "2",
                         "--in", str(gpath)])
    assert code == 0
    assert "input.vertices: 4" in out


def test_witness_doc_parse_render_roundtrip(k4_file, tmp_path):
    out_path = tmp_path / "w.txt"
    run_cli(["weight", "--group", "4", "--in", k4_file, "--out", str(out_path)])
    text = out_path.read_text()
    assert WitnessDoc.parse(text).render() == text


def test_check_rejects_tampered_witness(k4_file, tmp_path):
    out_path = tmp_path / "w.txt"
    run_cli(["factor", "--spec", "pair", "--aminus", "1", "--aplus", "2",
             "--in", k4_file, "--out", str(out_path)])
    # drop one factor edge so some degree leaves its list
    lines = out_path.read_text().splitlines()
    for i, line in enumerate(lines):
        if line.startswith("edges: ") and line != "edges: -":
            toks = line.split()
            lines[i] = " ".join(toks[:-1]) if len(toks) > 2 else "edges: -"
    (tmp_path / "bad.txt").write_text("\n".join(lines) + "\n")
    code, out = run_cli(["check", "--witness", str(tmp_path / "bad.txt"), "--pred", "factor"])
    assert code == 1
    assert "verdict: failed" in out
    assert "witness." not in out  # no witness echoed on failure


def test_avd2_without_any_route_is_unknown(tmp_path):
    gpath = tmp_path / "c4.txt"
    gpath.write_text("0 1\n1 2\n2 3\n0 3\n")  # regular, min degree 2: no route
    code, out = run_cli(["weight", "--avd2", "--in", str(gpath)])
    assert code == 1
    assert "verdict: unknown" in out
