"""Command-line interface: parsing, formats, exit codes, determinism."""

import json

import pytest

from threshold_spectra import ParseError
from threshold_spectra.cli import parse_graph_spec, run


# ---------------------------------------------------------------------------
# graph-spec parsing
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "spec, bits",
    [
        ("gen:10101", (1, 0, 1, 0, 1)),
        ("gen:0101", (1, 1, 0, 1)),  # canonicalized leading bit
        ("comp:G{3,3,1}", (1, 1, 1, 0, 0, 0, 1)),
        ("comp:G{6,1}", (1, 0, 0, 0, 0, 0, 1)),
        ("bzp:3:2,1", (1, 0, 1, 0, 1)),
        ("bzp:3:", (1, 1, 1)),
        ("bzp:3", (1, 1, 1)),
    ],
)
def test_parse_graph_spec(spec, bits):
    assert parse_graph_spec(spec).bits == bits


def test_parse_graph_spec_rejects_unknown_prefix():
    with pytest.raises(ParseError):
        parse_graph_spec("foo:10101")


def test_parse_graph_spec_positions():
    with pytest.raises(ParseError) as info:
        parse_graph_spec("gen:10102")
    assert info.value.position == 8
    with pytest.raises(ParseError) as info:
        parse_graph_spec("comp:G{1,}")
    assert info.value.position == 9


# ---------------------------------------------------------------------------
# exit codes
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv, code",
    [
        (["analyze", "gen:10101"], 0),
        (["analyze", "gen:10102"], 2),          # bad character
        (["analyze", "comp:G{1,"], 2),          # unterminated composition
        (["analyze", "gen:1001"], 1),           # c < 3: bounds do not apply
        (["analyze", "gen:10100"], 1),          # disconnected
        (["analyze", "bzp:3:5"], 1),            # b out of range
        (["walks", "gen:10100", "--kmax", "4"], 1),
        (["enumerate", "--n", "4", "--m", "2"], 1),   # empty census
        (["enumerate", "--n", "4", "--m", "99"], 1),  # m out of range
        (["frobnicate"], 2),
        ([], 2),
    ],
)
def test_exit_codes(argv, code, capsys):
    assert run(argv) == code
    err = capsys.readouterr().err
    if code == 1:
        assert err.startswith("error:")


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def test_analyze_human_output(capsys):
    assert run(["analyze", "gen:10101"]) == 0
    out = capsys.readouterr().out
    assert "graph        10101  (n=5, m=6, c=3, z=2)" in out
    assert "composition  G{1,1,1,1,1}" in out
    assert "rho" in out and "<=" in out
    assert "sandwich_ok  True" in out


def test_analyze_json_shape_and_determinism(capsys):
    assert run(["analyze", "gen:10101", "--json"]) == 0
    first = capsys.readouterr().out
    assert run(["analyze", "gen:10101", "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second  # byte-identical across runs
    payload = json.loads(first)
    assert payload["graph"]["generating"] == "10101"
    assert payload["sandwich_ok"] is True
    assert payload["rho"] == pytest.approx(2.685543932670793, abs=1e-9)
    assert set(payload["gaps"]) == {
        "lower_cubic",
        "lower_corollary",
        "lower_quadratic",
        "upper_cubic",
        "inequality_root",
    }


def test_analyze_csv_row(capsys):
    assert run(["analyze", "gen:10101", "--csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == (
        "generating,n,m,c,z,rho,lower_cubic,lower_corollary,"
        "lower_quadratic,upper_cubic,inequality_root,sandwich_ok"
    )
    fields = lines[1].split(",")
    assert fields[0] == "10101"
    assert fields[1:5] == ["5", "6", "3", "2"]
    assert float(fields[5]) == pytest.approx(2.685543932670793, abs=1e-9)
    assert fields[11] == "true"


def test_analyze_inapplicable_graph_fails_closed(capsys):
    # stars have c = 2; the analyze command reports the failure, not a
    # silently degraded row
    assert run(["analyze", "gen:10001"]) == 1
    assert "c >= 3" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# walks
# ---------------------------------------------------------------------------


def test_walks_csv_sections(capsys):
    assert run(["walks", "gen:10101", "--kmax", "12", "--pmax", "4", "--csv"]) == 0
    out = capsys.readouterr().out
    head, tail = out.strip().split("\n\n")
    klines = head.splitlines()
    assert klines[0] == "k,LW,LW_prime,LW_double_prime"
    assert len(klines) == 14  # header + k = 0..12
    assert klines[1] == "0,1,1,1"
    assert klines[4] == "3,32,32,32"
    plines = tail.splitlines()
    assert plines[0] == "p,F_p"
    assert len(plines) == 6  # header + p = 0..4
    assert plines[1] == "0,3"
    assert plines[2] == "1,5"


def test_walks_json_values(capsys):
    assert run(["walks", "gen:1101", "--kmax", "4", "--pmax", "2", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["lw"] == [1, 3, 9, 28, 88]
    assert payload["lw_prime"] == [1, 3, 9, 28, 88]
    assert payload["lw_double_prime"] == [1, 3, 9, 28, 88]
    assert payload["fp"] == [3, 1, 1]
    assert payload["graph"]["generating"] == "1101"


def test_walks_rejects_disconnected(capsys):
    assert run(["walks", "gen:1100"]) == 1
    assert capsys.readouterr().err.startswith("error:")


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------


def test_enumerate_json(capsys):
    assert run(["enumerate", "--n", "7", "--m", "9", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["n"] == 7 and payload["m"] == 9
    assert payload["census_size"] == 2
    assert payload["maximizers"] == ["G{3,3,1}"]
    assert len(payload["graphs"]) == 2
    flags = [row["is_max"] for row in payload["graphs"]]
    assert flags.count(True) == 1


def test_enumerate_csv_header_and_marking(capsys):
    assert run(["enumerate", "--n", "7", "--m", "9", "--csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == (
        "generating,c,z,m,rho,lower_cubic,lower_corollary,"
        "lower_quadratic,upper_cubic,inequality_root,is_max"
    )
    assert len(lines) == 3
    marks = [line.split(",")[-1] for line in lines[1:]]
    assert sorted(marks) == ["false", "true"]


def test_enumerate_human_marks_maximizer(capsys):
    assert run(["enumerate", "--n", "5", "--m", "5"]) == 0
    out = capsys.readouterr().out
    assert "*" in out


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def test_verify_json_is_clean_at_small_n(capsys):
    assert run(["verify", "--n-max", "5", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["n_min"] == 4 and payload["n_max"] == 5
    assert payload["mismatch_count"] == 0
    assert payload["rows"]
    for row in payload["rows"]:
        assert row["kind"] in {"asserted", "large-n", "conjecture"}
        assert row["ok"] in (True, False, None)
        if row["kind"] == "asserted":
            assert row["ok"] is True


def test_verify_human_summary(capsys):
    assert run(["verify", "--n-max", "5"]) == 0
    out = capsys.readouterr().out
    assert "0 mismatch(es)" in out


# ---------------------------------------------------------------------------
# output redirection
# ---------------------------------------------------------------------------


def test_output_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert run(["analyze", "gen:1101", "--json", "--output", str(target)]) == 0
    assert capsys.readouterr().out == ""
    payload = json.loads(target.read_text())
    assert payload["graph"]["generating"] == "1101"
