"""Branching-graph path counts, the dimension conjecture, and node spectra."""

from fractions import Fraction
from math import comb, factorial

from hypothesis import given
from hypothesis import strategies as st

from linksgould.bratteli import (Weight, casimir_value, catalan, check_dim_conjecture,
                                 children, conjectured_dim, dim_lg, level_dims,
                                 noncrossing_pairs, parents)

# path counts re-derived by hand from the branching rule
# [a,k] -> [a-1,k+1], [a,k], [a,k+1], [a+1,k] (admissible members only)
LEVEL_3 = {(0, 0): 1, (0, 1): 3, (0, 2): 1, (1, 0): 2, (1, 1): 2, (2, 0): 1}
LEVEL_4 = {(0, 0): 1, (0, 1): 6, (0, 2): 6, (0, 3): 1, (1, 0): 3, (1, 1): 8,
           (1, 2): 3, (2, 0): 3, (2, 1): 3, (3, 0): 1}
LEVEL_5 = {(0, 0): 1, (0, 1): 10, (0, 2): 20, (0, 3): 10, (0, 4): 1,
           (1, 0): 4, (1, 1): 20, (1, 2): 20, (1, 3): 4,
           (2, 0): 6, (2, 1): 15, (2, 2): 6, (3, 0): 4, (3, 1): 4, (4, 0): 1}


def _as_pairs(level):
    return {(w.a, w.k): c for w, c in level.counts.items()}


def test_frozen_level_tables():
    assert _as_pairs(level_dims(3)) == LEVEL_3
    assert _as_pairs(level_dims(4)) == LEVEL_4
    assert _as_pairs(level_dims(5)) == LEVEL_5


def test_dimension_ladder():
    assert [dim_lg(n) for n in range(1, 7)] == [1, 3, 20, 175, 1764, 19404]


def test_admissibility_bounds():
    assert Weight.is_admissible(0, 0, 0)
    assert not Weight.is_admissible(1, 0, 0)
    assert Weight.is_admissible(2, 1, 4)
    assert not Weight.is_admissible(2, 2, 4)   # k <= r-a-1 fails
    assert not Weight.is_admissible(4, 0, 4)   # a <= r-1 fails


weights = st.integers(1, 8).flatmap(
    lambda r: st.integers(0, r - 1).flatmap(
        lambda a: st.integers(0, r - a - 1).map(lambda k: Weight(a, k, r))))


@given(weights)
def test_children_parents_duality(w):
    for ch in children(w):
        assert w in parents(ch)
    assert w.r == 0 or all(w in children(p) for p in parents(w))


@given(weights)
def test_children_count_three_or_four(w):
    kids = children(w)
    assert len(kids) in (3, 4)
    assert len(set(kids)) == len(kids)


def test_factorial_formula_matches_path_counts_to_50():
    rows = check_dim_conjecture(50)
    assert len(rows) == 50
    assert all(ok for (_, _, _, ok) in rows)
    n, d, f, _ = rows[49]
    assert n == 50 and d == f
    assert f == factorial(100) * factorial(101) // (factorial(50) * factorial(51)) ** 2


def test_conjectured_dim_closed_forms_agree():
    for n in range(1, 30):
        assert conjectured_dim(n) == catalan(n) ** 2 * (2 * n + 1)
        assert catalan(n) == comb(2 * n, n) // (n + 1)


def test_noncrossing_path_pairs_give_the_same_ladder():
    for n in range(1, 13):
        assert noncrossing_pairs(n) == dim_lg(n + 1)


def test_lawrence_krammer_node_dimension():
    # the [0,n-2]_n path count equals n(n-1)/2
    for n in range(2, 13):
        counts = _as_pairs(level_dims(n))
        assert counts[(0, n - 2)] == n * (n - 1) // 2


def test_casimir_values():
    alpha = Fraction(1, 2)
    # -2(r*alpha+k)(r*alpha+k+a+1)
    assert casimir_value(Weight(0, 0, 0), alpha) == 0
    assert casimir_value(Weight(0, 0, 1), alpha) == -2 * Fraction(1, 2) * Fraction(3, 2)
    assert casimir_value(Weight(1, 0, 2), alpha) == -2 * 1 * 3
    assert casimir_value(Weight(0, 1, 2), alpha) == -2 * 2 * 3
    assert casimir_value(Weight(2, 1, 4), alpha) == -2 * 3 * 6


@given(weights, st.fractions(min_value=-3, max_value=3))
def test_casimir_separates_along_an_edge_generically(w, alpha):
    # distinct children of one parent get distinct Casimir scalars away from
    # finitely many alpha; at a random rational alpha collisions are allowed
    # but the scalar itself must be well-defined and exact
    vals = [casimir_value(ch, alpha) for ch in children(w)]
    assert all(isinstance(v, Fraction) for v in vals)
