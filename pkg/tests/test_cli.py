"""Command-line surface: exit codes, JSON schemas, round-trips, determinism."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linksgould import cli
from linksgould.braid import BraidWord
from linksgould.exact_arith import HalfLaurent, MultiPoly
from linksgould.hecke_reps import derive_r2
from linksgould.lg_rmatrix import lg_invariant
from linksgould.markov_trace import tr4


def _capture(capsys, argv):
    code = cli.run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------------------
# exit codes

def test_compute_exits_zero(capsys):
    code, out, err = _capture(capsys, ["compute", "--braid", "[1,1,1]"])
    assert code == 0 and err == ""
    assert "LG([1,1,1] on 2 strands)" in out


@pytest.mark.parametrize("argv", [
    ["compute", "--braid", "1,1,1"],            # missing brackets
    ["compute", "--braid", "[1,x]"],            # bad letter
    ["compute", "--braid", "[1]", "--strands", "0"],
    ["compute", "--braid", "[1]", "--strands", "9"],   # beyond the engine bound
    ["dims", "--max", "0"],
    ["trace", "--braid", "[4]"],                # outside four strands
    ["trace", "--braid", "[1]", "--spec", "1,1,2"],    # repeated value
    ["trace", "--braid", "[1]", "--spec", "0,1,2"],    # zero value
    ["trace", "--braid", "[1]", "--spec", "1,2"],      # wrong arity
    ["nonsense"],                               # unknown subcommand
    ["verify", "nonsense"],                     # unknown suite
    ["derive", "r4"],                           # unknown relation
])
def test_usage_errors_exit_two(capsys, argv):
    code, _out, _err = _capture(capsys, argv)
    assert code == 2


# ---------------------------------------------------------------------------
# compute

def test_compute_json_round_trip(capsys):
    code, out, _ = _capture(capsys, ["compute", "--braid", "[1,-2,1,-2]", "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "compute"
    assert doc["strands"] == 3
    assert doc["braid"] == [1, -2, 1, -2]
    assert doc["components"] == 1
    value = lg_invariant(BraidWord(3, (1, -2, 1, -2)))
    assert cli.hl_from_terms(doc["value"]["doubled_terms"]) == value
    assert cli.parse_poly_text(doc["value"]["text"]) == value


def test_compute_infers_minimal_strands(capsys):
    # [1,1] needs 2 strands unless --strands widens it (split union then)
    _, out2, _ = _capture(capsys, ["compute", "--braid", "[1,1]", "--json"])
    assert json.loads(out2)["strands"] == 2
    _, out3, _ = _capture(capsys, ["compute", "--braid", "[1,1]", "--strands", "3",
                                   "--json"])
    doc3 = json.loads(out3)
    assert doc3["strands"] == 3
    assert doc3["value"]["text"] == "0"
    # Hopf link plus a split unknot
    assert doc3["components"] == 3


def test_compute_output_is_byte_deterministic(capsys):
    argv = ["compute", "--braid", "[1,1,1,2,2,2]", "--json"]
    _, first, _ = _capture(capsys, argv)
    _, second, _ = _capture(capsys, argv)
    assert first == second


# ---------------------------------------------------------------------------
# dims

def test_dims_table(capsys):
    code, out, _ = _capture(capsys, ["dims", "--max", "10", "--json"])
    assert code == 0
    rows = json.loads(out)["rows"]
    assert rows[0] == [1, 1, 1]
    assert rows[3] == [4, 175, 175]
    assert rows[5] == [6, 19404, 19404]
    assert all(d == f for _n, d, f in rows)
    code, human, _ = _capture(capsys, ["dims", "--max", "6"])
    assert code == 0 and "19404" in human


# ---------------------------------------------------------------------------
# trace

def test_trace_json_reports_ratio(capsys):
    code, out, _ = _capture(capsys, ["trace", "--braid", "[1,2,3]", "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["value"]["text"] == "(1) / (1)"


def test_trace_specialization(capsys):
    code, out, _ = _capture(capsys,
                            ["trace", "--braid", "[1,-2,1,-2,3]", "--spec", "2,3,5"])
    assert code == 0
    assert "1361/20" in out
    val = tr4(BraidWord(4, (1, -2, 1, -2, 3)))
    from fractions import Fraction
    assert val.specialize(Fraction(2), Fraction(3), Fraction(5)) == (Fraction(1361, 20),
                                                                     Fraction(0))


# ---------------------------------------------------------------------------
# derive

def test_derive_r2_json_round_trip(capsys):
    code, out, _ = _capture(capsys, ["derive", "r2", "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["relation"] == "r2" and doc["words"] == 17
    reduced = {tuple(t["word"]): t for t in doc["terms"]}
    for w, coeff in derive_r2():
        r = coeff.reduce()
        entry = reduced[w.letters]
        assert cli.mp_from_terms(entry["num_terms"]) == r.num
        assert cli.mp_from_terms(entry["den_terms"]) == r.den


# ---------------------------------------------------------------------------
# verify

def test_verify_fast_suite_json(capsys):
    code, out, _ = _capture(capsys, ["verify", "bratteli", "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert doc["suites"] == ["bratteli"]
    assert len(doc["checks"]) == 6
    assert all(c["ok"] for c in doc["checks"])
    assert {c["criterion"] for c in doc["checks"]} == {4}


def test_verify_human_output_lists_checks(capsys):
    code, out, _ = _capture(capsys, ["verify", "hecke"])
    assert code == 0
    assert "6/6 checks passed" in out
    assert out.count("PASS") == 6


def test_verify_output_is_byte_deterministic(capsys):
    argv = ["verify", "bratteli", "--json"]
    _, first, _ = _capture(capsys, argv)
    _, second, _ = _capture(capsys, argv)
    assert first == second


# ---------------------------------------------------------------------------
# serialization helpers

hl_dicts = st.dictionaries(
    st.tuples(st.integers(-8, 8), st.integers(-8, 8)),
    st.integers(-99, 99).filter(bool), max_size=8)

mp_dicts = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)),
    st.tuples(st.integers(-9, 9), st.integers(-9, 9)).filter(lambda uv: uv != (0, 0)),
    max_size=6)


@given(hl_dicts)
def test_halflaurent_terms_round_trip(d):
    p = HalfLaurent(d)
    assert cli.hl_from_terms(cli.hl_terms(p)) == p


@given(hl_dicts)
def test_render_parse_round_trip(d):
    p = HalfLaurent(d)
    assert cli.parse_poly_text(p.render()) == p


@given(mp_dicts)
def test_multipoly_terms_round_trip(d):
    p = MultiPoly(d)
    assert cli.mp_from_terms(cli.mp_terms(p)) == p


def test_parse_poly_text_rejects_garbage():
    with pytest.raises(cli.CliError):
        cli.parse_poly_text("t2^1 + 3")
