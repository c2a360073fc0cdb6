"""Ring axioms and normalization properties of the exact coefficient domains."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from linksgould.exact_arith import (HL_ONE, HalfLaurent, LGScalar, MP_A, MP_B, MP_C, MP_J,
                                    MP_ONE, MultiPoly, RatFunc, integral_part, jmul,
                                    multipoly_at_minus1_t0_t1, poly_divexact, poly_gcd)

hl_dicts = st.dictionaries(
    st.tuples(st.integers(-6, 6), st.integers(-6, 6)),
    st.integers(-9, 9), max_size=6)

mp_dicts = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
    st.tuples(st.integers(-5, 5), st.integers(-5, 5)), max_size=5)


@given(hl_dicts, hl_dicts, hl_dicts)
def test_halflaurent_ring_axioms(d1, d2, d3):
    p, q, r = HalfLaurent(d1), HalfLaurent(d2), HalfLaurent(d3)
    assert p + q == q + p
    assert (p + q) - q == p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * HL_ONE == p
    assert (-(-p)) == p


@given(hl_dicts)
def test_halflaurent_zero_terms_dropped(d):
    p = HalfLaurent(d)
    assert all(c != 0 for c in p.terms.values())
    assert (p - p).is_zero()


@given(mp_dicts, mp_dicts, mp_dicts)
def test_multipoly_ring_axioms(d1, d2, d3):
    p, q, r = MultiPoly(d1), MultiPoly(d2), MultiPoly(d3)
    assert p + q == q + p
    assert (p + q) - q == p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * MP_ONE == p


def test_cube_root_relation():
    assert (MP_J * MP_J + MP_J + MP_ONE).is_zero()
    # the coefficient pair product agrees with (u + v j) multiplication
    assert jmul((0, 1), (0, 1)) == (-1, -1)
    assert jmul((2, 3), (5, -1)) == (2 * 5 + 3, 3 * 5 - 2 - (-3))


@given(mp_dicts, mp_dicts,
       st.tuples(st.integers(2, 30), st.integers(2, 30), st.integers(2, 30)))
def test_multipoly_specialize_is_a_homomorphism(d1, d2, pt):
    p, q = MultiPoly(d1), MultiPoly(d2)
    a0, b0, c0 = pt
    pu, pv = p.specialize(a0, b0, c0)
    qu, qv = q.specialize(a0, b0, c0)
    su, sv = (p + q).specialize(a0, b0, c0)
    assert (su, sv) == (pu + qu, pv + qv)
    mu, mv = (p * q).specialize(a0, b0, c0)
    # (pu + pv j)(qu + qv j) with j^2 = -1 - j
    assert (mu, mv) == (pu * qu - pv * qv, pu * qv + pv * qu - pv * qv)


def _nonzero_mp(d):
    p = MultiPoly(d)
    return p if not p.is_zero() else MP_ONE


@given(mp_dicts, mp_dicts)
@settings(max_examples=40, deadline=None)
def test_gcd_divides_both_inputs(d1, d2):
    p, q = _nonzero_mp(d1), _nonzero_mp(d2)
    g = poly_gcd(p, q)
    assert poly_divexact(p, g) is not None
    assert poly_divexact(q, g) is not None


@given(mp_dicts, mp_dicts)
@settings(max_examples=30, deadline=None)
def test_product_cancellation_reduces(d1, d2):
    p, q = _nonzero_mp(d1), _nonzero_mp(d2)
    r = RatFunc(p * q, p).reduce()
    assert r == RatFunc(q)


def test_gcd_keeps_content_across_missing_variables():
    # the gcd may omit a variable that both inputs contain; the part of the
    # gcd living in deeper variables must survive the evaluation lift
    p = (MP_B - MP_C) * (MP_B * MP_C - MP_A * MP_A)
    q = (MP_A + MP_B) * (MP_A - MP_C)
    g = poly_gcd(p * q, p)
    assert poly_divexact(g, p) is not None and poly_divexact(p, g) is not None
    r = RatFunc(p * q, p * (MP_B - MP_C)).reduce()
    assert r == RatFunc(q, MP_B - MP_C)


def test_gcd_of_coprime_polynomials_is_constant():
    g = poly_gcd(MP_A * MP_B + MP_ONE, MP_A + MP_C)
    assert g == MP_ONE


@given(mp_dicts, mp_dicts, mp_dicts)
@settings(max_examples=40, deadline=None)
def test_ratfunc_field_axioms(d1, d2, d3):
    x = RatFunc(MultiPoly(d1), _nonzero_mp(d2))
    y = RatFunc(MultiPoly(d3), _nonzero_mp(d1))
    assert x + y == y + x
    assert (x + y) - y == x
    assert x * y == y * x
    if not y.is_zero():
        assert (x / y) * y == x


@given(mp_dicts, st.tuples(st.integers(2, 40), st.integers(2, 40), st.integers(2, 40)))
def test_ratfunc_specialize_matches_poly_specialize(d, pt):
    p = MultiPoly(d)
    x = RatFunc(p)
    assert x.specialize(*pt) == p.specialize(*pt)


def test_laurent_bridge_on_monomials():
    # a -> -1, b -> t0, c -> t1 on j-free polynomials, None when j survives
    p = MP_A * MP_B * MP_B * MP_C
    out = multipoly_at_minus1_t0_t1(p)
    assert out == HalfLaurent({(4, 2): -1})
    assert multipoly_at_minus1_t0_t1(MP_J) is None
    mixed = MP_A + MP_J * MP_B
    assert multipoly_at_minus1_t0_t1(mixed) is None
    # the j-parts may cancel after substitution even if present per-term
    assert multipoly_at_minus1_t0_t1(MP_J * MP_B - MP_J * MP_B) == HalfLaurent.zero()


def test_integral_part_gates():
    y_free = LGScalar(HalfLaurent({(2, 0): 1}))
    assert integral_part(y_free) == HalfLaurent({(2, 0): 1})
    half_exp = LGScalar(HalfLaurent({(1, 0): 1}))
    assert integral_part(half_exp) is None
    with_y = LGScalar(HalfLaurent.zero(), HalfLaurent({(0, 0): 1}))
    assert integral_part(with_y) is None


def test_lgscalar_y_square_contraction():
    # Y^2 = (t0 - 1)(1 - t1), so (Y)^2 must land in the Laurent part
    y = LGScalar(HalfLaurent.zero(), HL_ONE)
    sq = y * y
    want = HalfLaurent({(2, 0): 1, (2, 2): -1, (0, 0): -1, (0, 2): 1})
    assert sq.p1.is_zero() and sq.p0 == want
