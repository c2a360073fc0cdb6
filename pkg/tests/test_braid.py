"""Braid word parsing, closure combinatorics, and Markov-move bookkeeping."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linksgould.braid import (BraidParseError, BraidWord, closure_components,
                              markov_perturb, parse_braid, permutation)


def braid_words(max_n=6, max_len=8):
    return st.integers(2, max_n).flatmap(
        lambda n: st.lists(
            st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))),
            max_size=max_len,
        ).map(lambda ls: BraidWord(n, tuple(ls))))


@given(braid_words())
def test_parse_render_round_trip(w):
    assert parse_braid(w.render(), w.n) == w


def test_parse_accepts_whitespace_and_empty():
    assert parse_braid(" [ 1 , -2 , 1 ] ", 3) == BraidWord(3, (1, -2, 1))
    assert parse_braid("[]", 4) == BraidWord(4, ())


@pytest.mark.parametrize("text,n", [
    ("1,-2,1", 3),          # missing brackets
    ("[1,x,2]", 3),         # non-integer letter
    ("[1,0,2]", 3),         # zero letter
    ("[1,3]", 3),           # letter out of range for the strand count
    ("[1 -2]", 3),          # missing comma
])
def test_parse_rejects_malformed(text, n):
    with pytest.raises(BraidParseError):
        parse_braid(text, n)


def test_letter_out_of_range_rejected_at_construction():
    with pytest.raises(AssertionError):
        BraidWord(3, (3,))
    with pytest.raises(AssertionError):
        BraidWord(2, (0,))


def test_writhe_counts_signs():
    assert BraidWord(3, (1, -2, 1, 1)).writhe() == 2
    assert BraidWord(2, ()).writhe() == 0


def test_permutation_and_components_basics():
    # identity braid closure on n strands is the n-component unlink
    assert closure_components(BraidWord(4)) == 4
    # a single generator merges two strands
    assert closure_components(BraidWord(2, (1,))) == 1
    assert permutation(BraidWord(3, (1, 2))) == [1, 2, 0]
    # trefoil and figure-eight closures are knots
    assert closure_components(BraidWord(2, (1, 1, 1))) == 1
    assert closure_components(BraidWord(3, (1, -2, 1, -2))) == 1
    # Hopf link has two components
    assert closure_components(BraidWord(2, (1, 1))) == 2


@given(braid_words(max_n=5, max_len=6), st.integers(0, 2**32 - 1),
       st.integers(0, 30))
def test_markov_perturb_preserves_closure_components(w, seed, steps):
    out = markov_perturb(w, seed, steps)
    assert closure_components(out) == closure_components(w)
    assert 1 <= out.n <= 8


@given(braid_words(max_n=5, max_len=6), st.integers(0, 2**32 - 1),
       st.integers(0, 12))
def test_markov_perturb_is_deterministic(w, seed, steps):
    assert markov_perturb(w, seed, steps) == markov_perturb(w, seed, steps)


@given(braid_words(max_n=5, max_len=6), st.integers(0, 2**32 - 1),
       st.integers(0, 12))
def test_markov_perturb_preserves_writhe_strand_parity(w, seed, steps):
    # (writhe + strands) mod 2 is fixed by every move: conjugation, braid
    # relations, and free cancellation keep both; (de)stabilization shifts
    # writhe and strand count by one each
    out = markov_perturb(w, seed, steps)
    assert (out.writhe() + out.n) % 2 == (w.writhe() + w.n) % 2
    assert all(1 <= abs(x) <= out.n - 1 for x in out.letters)
