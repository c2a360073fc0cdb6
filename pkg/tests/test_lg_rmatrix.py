"""Invariant values on named links and structural properties of the engine.

Expected polynomials were frozen from independent computations: the
Alexander-squared specialization at t1 = 1/t0, mirror-image behavior, and
connected-sum multiplicativity all pin the values from outside this module.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linksgould.braid import BraidWord
from linksgould.exact_arith import HalfLaurent
from linksgould.lg_rmatrix import MAX_STRANDS, StrandBoundError, lg_invariant, verify_gates

UNKNOT = BraidWord(1)
HOPF = BraidWord(2, (1, 1))
TREFOIL = BraidWord(2, (1, 1, 1))
TREFOIL_MIRROR = BraidWord(2, (-1, -1, -1))
FIG8 = BraidWord(3, (1, -2, 1, -2))
GRANNY = BraidWord(3, (1, 1, 1, 2, 2, 2))

# frozen values; exponents doubled, so (2,4) means t0^1 * t1^2
TREFOIL_TERMS = {(0, 0): 1, (0, 2): -1, (0, 4): 1, (2, 0): -1,
                 (2, 2): 2, (2, 4): -1, (4, 0): 1, (4, 2): -1}
FIG8_TERMS = {(-2, -2): 2, (-2, 0): -3, (-2, 2): 1, (0, -2): -3, (0, 0): 7,
              (0, 2): -3, (2, -2): 1, (2, 0): -3, (2, 2): 2}
HOPF_TERMS = {(0, 0): -1, (0, 2): 1, (2, 0): 1, (2, 2): -1}


def test_construction_gates():
    report = verify_gates()
    assert report == {"yang_baxter_inputs": 64, "cubic": True, "inverse": True, "ok": True}


def test_unknot_is_one():
    one = HalfLaurent.from_int(1)
    assert lg_invariant(UNKNOT) == one
    assert lg_invariant(BraidWord(2, (1,))) == one
    assert lg_invariant(BraidWord(3, (1, 2))) == one
    assert lg_invariant(BraidWord(3, (-1, 2))) == one


def test_split_links_vanish():
    assert lg_invariant(BraidWord(2)).is_zero()
    assert lg_invariant(BraidWord(3)).is_zero()
    # split union of unknot and Hopf link (generator 1 untouched)
    assert lg_invariant(BraidWord(3, (2, 2))).is_zero()


def test_frozen_named_values():
    assert lg_invariant(TREFOIL) == HalfLaurent(TREFOIL_TERMS)
    assert lg_invariant(FIG8) == HalfLaurent(FIG8_TERMS)
    assert lg_invariant(HOPF) == HalfLaurent(HOPF_TERMS)


def test_trefoil_render():
    assert lg_invariant(TREFOIL).render() == (
        "1 - t1^1 + t1^2 - t0^1 + 2*t0^1*t1^1 - t0^1*t1^2 + t0^2 - t0^2*t1^1")


def _specialize_t1_inverse(p: HalfLaurent) -> dict[int, int]:
    """Collapse t1 -> 1/t0: return {doubled t0 exponent: coefficient}."""
    out: dict[int, int] = {}
    for (d0, d1), c in p.terms.items():
        e = d0 - d1
        out[e] = out.get(e, 0) + c
        if out[e] == 0:
            del out[e]
    return out


@pytest.mark.parametrize("braid,alex", [
    # squared Alexander polynomials, as {doubled t0 exponent: coefficient}
    (TREFOIL, {-4: 1, -2: -2, 0: 3, 2: -2, 4: 1}),     # (t - 1 + 1/t)^2
    (FIG8, {-4: 1, -2: -6, 0: 11, 2: -6, 4: 1}),       # (t - 3 + 1/t)^2
    (HOPF, {-2: 1, 0: -2, 2: 1}),                      # (t^(1/2) - t^(-1/2))^2
])
def test_alexander_squared_specialization(braid, alex):
    assert _specialize_t1_inverse(lg_invariant(braid)) == alex


def test_connected_sum_is_multiplicative():
    assert lg_invariant(GRANNY) == lg_invariant(TREFOIL) * lg_invariant(TREFOIL)
    square = BraidWord(3, (1, 1, 1, -2, -2, -2))
    assert lg_invariant(square) == lg_invariant(TREFOIL) * lg_invariant(TREFOIL_MIRROR)


def _invert_variables(p: HalfLaurent) -> HalfLaurent:
    return HalfLaurent({(-d0, -d1): c for (d0, d1), c in p.terms.items()})


def test_mirror_image_inverts_variables():
    assert lg_invariant(TREFOIL_MIRROR) == _invert_variables(lg_invariant(TREFOIL))
    assert lg_invariant(BraidWord(2, (-1, -1))) == _invert_variables(lg_invariant(HOPF))


def test_figure_eight_is_amphichiral():
    v = lg_invariant(FIG8)
    assert _invert_variables(v) == v


def braid_words(max_n=4, max_len=5):
    return st.integers(2, max_n).flatmap(
        lambda n: st.lists(
            st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))),
            max_size=max_len,
        ).map(lambda ls: BraidWord(n, tuple(ls))))


@given(braid_words(), st.sampled_from((1, -1)))
@settings(max_examples=25, deadline=None)
def test_markov_moves_fix_the_invariant(w, sign):
    val = lg_invariant(w)
    # stabilization: append s_n^{+-1} on one more strand
    stab = BraidWord(w.n + 1, w.letters + (sign * w.n,))
    assert lg_invariant(stab) == val
    # conjugation by the first generator
    conj = BraidWord(w.n, (1,) + w.letters + (-1,))
    assert lg_invariant(conj) == val


@given(braid_words(max_n=4, max_len=4))
@settings(max_examples=25, deadline=None)
def test_inverse_word_gives_mirror_value(w):
    rev = BraidWord(w.n, tuple(-x for x in reversed(w.letters)))
    assert lg_invariant(rev) == _invert_variables(lg_invariant(w))


def test_strand_bound_enforced():
    with pytest.raises(StrandBoundError):
        lg_invariant(BraidWord(MAX_STRANDS + 1, (1,)))
