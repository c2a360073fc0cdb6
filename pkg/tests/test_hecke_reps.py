"""Irreducible representations, branching rules, derived relations, ranks."""

from collections import Counter

import pytest

from linksgould.braid import BraidWord
from linksgould.hecke_reps import (B0_3, B_3, H4_LABEL_ORDER, LG3_LABELS, IrrepLabel,
                                   as_braids, build_h3_irreps, build_h4_irreps,
                                   derive_r2, element_vanishes_symbolically,
                                   generator_inverse, lg4_irreps, mat_eq, mat_identity,
                                   mat_mul, rank_of_span, restriction_multiplicities,
                                   verify_b3_expansions, word_matrix)

H4_RENDERED = [
    "S_a", "S_c", "S_b", "T_bc", "T_ab", "T_ac", "V",
    "U_ba", "U_ac", "U_cb", "U_ca", "U_ab", "U_bc",
    "V_cab", "V_bca", "V_abc", "V_bac", "V_cba", "V_acb",
    "W_a", "W_c", "W_b", "X", "X'",
]
LG4_RENDERED = ["S_a", "S_c", "S_b", "U_ba", "U_ac", "U_ca", "U_ab",
                "V_cab", "V_bac", "W_a"]


def test_four_strand_inventory():
    models = build_h4_irreps()
    assert [m.label.render() for m in models] == H4_RENDERED
    assert Counter(m.dim for m in models) == {1: 3, 2: 3, 3: 7, 6: 6, 8: 3, 9: 2}
    assert sum(m.dim ** 2 for m in models) == 648
    assert all(m.ngens == 3 for m in models)


def test_three_strand_inventory():
    models = build_h3_irreps()
    assert sum(m.dim ** 2 for m in models) == 24
    assert len(models) == 7
    assert len(LG3_LABELS) == 6
    assert "T_bc" not in {l.render() for l in LG3_LABELS}


def test_label_rendering_and_param_order():
    assert IrrepLabel("T", ("a", "b")).render() == "T_ab"
    assert IrrepLabel("V3").render() == "V"
    assert IrrepLabel("Xprime").render() == "X'"
    assert IrrepLabel("V6", ("c", "a", "b")).render() == "V_cab"
    with pytest.raises(AssertionError):
        IrrepLabel("Q")


@pytest.mark.parametrize("render", ["U_ba", "W_a", "X", "X'"])
def test_braid_relations_in_sample_models(render):
    m = next(m for m in build_h4_irreps() if m.label.render() == render)
    assert mat_eq(word_matrix(m, (1, 2, 1)), word_matrix(m, (2, 1, 2)))
    assert mat_eq(word_matrix(m, (2, 3, 2)), word_matrix(m, (3, 2, 3)))
    assert mat_eq(word_matrix(m, (1, 3)), word_matrix(m, (3, 1)))


@pytest.mark.parametrize("render", ["T_ab", "V", "W_a"])
def test_generator_inverse_round_trips(render):
    m = next(m for m in build_h4_irreps() if m.label.render() == render)
    eye = mat_identity(m.dim)
    for i in (1, 2, 3):
        assert mat_eq(mat_mul(m.gen(i), generator_inverse(m.gen(i))), eye)
        assert mat_eq(word_matrix(m, (i, -i)), eye)
        assert mat_eq(word_matrix(m, (-i, i)), eye)


def _expected_restriction(label: IrrepLabel) -> Counter:
    S = lambda x: IrrepLabel("S", (x,))
    T = lambda x, y: IrrepLabel("T", tuple(sorted((x, y))))
    V = IrrepLabel("V3")
    k, p = label.kind, label.params
    if k in ("S", "T", "V3"):
        return Counter({label: 1})
    if k == "U":
        return Counter({S(p[0]): 1, T(p[0], p[1]): 1})
    if k == "V6":
        return Counter({S(p[0]): 1, T(p[0], p[1]): 1, V: 1})
    if k == "W":
        (y, z) = sorted(set("abc") - {p[0]})
        return Counter({S(p[0]): 1, T(p[0], y): 1, T(p[0], z): 1, V: 1})
    # X and X': all three two-dimensionals plus V
    return Counter({T("a", "b"): 1, T("a", "c"): 1, T("b", "c"): 1, V: 1})


def test_branching_rules_all_24():
    for m in build_h4_irreps():
        got = restriction_multiplicities(m)
        assert +got == _expected_restriction(m.label), m.label.render()


def test_quotient_inventories():
    res = {m.label: restriction_multiplicities(m) for m in build_h4_irreps()}
    t_bc = IrrepLabel("T", ("b", "c"))
    survivors = [lab for lab in H4_LABEL_ORDER if res[lab][t_bc] == 0]
    assert len(survivors) == 15
    assert sum(l.dim ** 2 for l in survivors) == 264
    lg4 = lg4_irreps()
    assert [l.render() for l in lg4] == LG4_RENDERED
    assert sum(l.dim ** 2 for l in lg4) == 175
    assert set(lg4) < set(survivors)
    assert 264 > 175


def test_rank_spot_checks_three_strands():
    assert len(B0_3) == 13
    assert rank_of_span(as_braids(B0_3, 3), LG3_LABELS) == 13
    assert len(B_3) == 20
    assert rank_of_span(as_braids(B_3, 3), LG3_LABELS) == 20


R2_WORDS = [(), (-2,), (-1,), (1,), (2,), (-2, -1), (-1, -2), (-1, 2), (1, -2),
            (1, 2), (2, -1), (2, 1), (-1, 2, -1), (-1, 2, 1), (1, -2, -1),
            (2, -1, 2), (-1, 2, -1, 2)]

R2_SPOT_COEFFS = {
    (): ("-b^2*c^2 - 2*a^1*b^1*c^2 - 2*a^1*b^2*c^1 - a^2*c^2 - 4*a^2*b^1*c^1"
         " - a^2*b^2 - 2*a^3*c^1 - 2*a^3*b^1 - a^4", "a^2*b^1*c^1"),
    (-2,): ("b^1*c^1 + a^1*c^1 + a^1*b^1 + a^2", "a^1"),
    (1,): ("b^1*c^1 + a^1*c^1 + a^1*b^1 + a^2", "a^1*b^1*c^1"),
}


def test_derived_two_strand_relation():
    e = derive_r2()
    assert [w.letters for w, _ in e] == R2_WORDS
    coeffs = {w.letters: c.reduce() for w, c in e}
    for word, (num, den) in R2_SPOT_COEFFS.items():
        r = coeffs[word]
        assert (r.num.render(), r.den.render()) == (num, den)
    # vanishes in exactly the quotient irreps
    for m in build_h3_irreps():
        expected = m.label in LG3_LABELS
        assert element_vanishes_symbolically(e, m) is expected, m.label.render()


def test_printed_expansions_verify():
    report = verify_b3_expansions()
    assert report["ok"] is True
    assert [entry["lhs"] for entry in report["identities"]] == ["s1^-1 s2 s1", "s1 s2 s1"]
    for entry in report["identities"]:
        assert entry["nonzero_in"] == ["T_bc"]
        assert set(entry["zero_in"]) == {l.render() for l in LG3_LABELS}
