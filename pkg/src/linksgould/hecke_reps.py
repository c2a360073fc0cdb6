"""Irreducible matrix models of the four-strand cubic Hecke algebra.

The algebra is the quotient of the group algebra of the braid group B_4
(over Q(j)(a,b,c), j a primitive third root of unity) by the cubic relation
(s_i - a)(s_i - b)(s_i - c) = 0.  It is semisimple of dimension 648 with 24
irreducible representations; six explicit prototypes generate all of them
under permutations of the eigenvalue parameters {a,b,c}, plus a twist
j -> j^2 for the second nine-dimensional one.

On top of the models this module derives the two extra relations that cut
the algebra down to the Links-Gould quotients: the quadratic relation r2
supported on three strands (nullspace of the evaluation map into the
irreps that survive in the quotient) and the cubic-level relations F+-
supported on four strands, plus exact rank computations for the spanning
word families that pin the quotient dimensions 20 and 175.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

import numpy as np

from . import bratteli
from ._linalg import (
    ModRowSpace,
    crt_pair,
    rational_reconstruct,
    rref_mod,
    sample_unity_prime,
    solve_jpair_system,
    solve_mod_p,
)
from .braid import BraidWord
from .exact_arith import (
    MP_A,
    MP_B,
    MP_C,
    MP_J,
    MP_ONE,
    MP_ZERO,
    MultiPoly,
    RatFunc,
    RF_ONE,
    RF_ZERO,
    poly_divexact,
    poly_gcd,
)

# ---------------------------------------------------------------------------
# labels


@dataclass(frozen=True)
class IrrepLabel:
    """Name of an irreducible representation: a kind plus its parameter
    decoration (ordered subscripts drawn from {a,b,c})."""

    kind: str                 # S, T, U, V3, V6, W, X, Xprime
    params: tuple[str, ...] = ()

    def __post_init__(self):
        assert self.kind in _KIND_DIMS, self.kind
        assert all(p in "abc" for p in self.params)

    @property
    def dim(self) -> int:
        return _KIND_DIMS[self.kind]

    def render(self) -> str:
        if self.kind == "V3":
            return "V"
        if self.kind == "X":
            return "X"
        if self.kind == "Xprime":
            return "X'"
        if self.kind in ("S", "W"):
            return f"{self.kind}_{self.params[0]}"
        return f"{'V' if self.kind == 'V6' else self.kind}_{''.join(self.params)}"

    def __repr__(self) -> str:
        return f"IrrepLabel({self.render()})"


_KIND_DIMS = {"S": 1, "T": 2, "U": 3, "V3": 3, "V6": 6, "W": 8, "X": 9, "Xprime": 9}


def _lab(kind: str, *params: str) -> IrrepLabel:
    return IrrepLabel(kind, tuple(params))


# fixed enumeration order of the 24 irreducibles (the order they are listed
# in the standard character-table software for this algebra)
H4_LABEL_ORDER: tuple[IrrepLabel, ...] = (
    _lab("S", "a"), _lab("S", "c"), _lab("S", "b"),
    _lab("T", "b", "c"), _lab("T", "a", "b"), _lab("T", "a", "c"),
    _lab("V3"),
    _lab("U", "b", "a"), _lab("U", "a", "c"), _lab("U", "c", "b"),
    _lab("U", "c", "a"), _lab("U", "a", "b"), _lab("U", "b", "c"),
    _lab("V6", "c", "a", "b"), _lab("V6", "b", "c", "a"), _lab("V6", "a", "b", "c"),
    _lab("V6", "b", "a", "c"), _lab("V6", "c", "b", "a"), _lab("V6", "a", "c", "b"),
    _lab("W", "a"), _lab("W", "c"), _lab("W", "b"),
    _lab("X"), _lab("Xprime"),
)

# the seven irreducibles of the three-strand algebra and the six that
# survive in its Links-Gould quotient (everything except T_bc)
H3_LABEL_ORDER: tuple[IrrepLabel, ...] = (
    _lab("S", "a"), _lab("S", "b"), _lab("S", "c"),
    _lab("T", "a", "b"), _lab("T", "a", "c"), _lab("T", "b", "c"),
    _lab("V3"),
)
LG3_LABELS: tuple[IrrepLabel, ...] = tuple(
    l for l in H3_LABEL_ORDER if l != _lab("T", "b", "c")
)


# ---------------------------------------------------------------------------
# prototype matrices (polynomial entries)

_a, _b, _c = MP_A, MP_B, MP_C
_j = MP_J
_j2 = _j * _j
_one = MP_ONE
_z = MP_ZERO


def _n(k: int) -> MultiPoly:
    return MultiPoly.from_int(k)


_T_PROTO = (  # T_bc
    ((_b, _z), (_b * _c, _c)),
    ((_c, -_one), (_z, _b)),
    ((_b, _z), (_b * _c, _c)),
)

_V3_PROTO = (
    ((_c, _z, _z), (_a * _c + _b * _b, _b, _z), (_b, _one, _a)),
    ((_a, -_one, _b), (_z, _b, -(_a * _c) - _b * _b), (_z, _z, _c)),
    ((_c, _z, _z), (_a * _c + _b * _b, _b, _z), (_b, _one, _a)),
)

_U_PROTO = (  # U_ab
    ((_b, _z, _z), (_z, _a, _z), (_a, _z, _a)),
    ((_a, _b - _a, -_b), (_z, _b, -_b), (_z, _z, _a)),
    ((_a, _z, _z), (_z, _a, _z), (-_a, _n(2) * _a, _b)),
)

_V6_PROTO = (  # V_abc
    (
        (_a, _z, _z, _z, _z, _z),
        (_a * _c + _b * _b, _b, _z, _z, _z, _z),
        (_b, _one, _c, _z, _z, _z),
        (_z, _z, _z, _a, _z, _z),
        (_z, _z, _z, _z, _a, _z),
        (_z, _z, _z, _one, _z, _b),
    ),
    (
        (_c, -_one, _b, -_one, -_b, _a),
        (_z, _b, -(_a * _c) - _b * _b, _z, _z, -(_a * _b)),
        (_z, _z, _a, _z, _z, _z),
        (_z, _z, _z, _b, _a * _c + _b * _b, -(_a * _b)),
        (_z, _z, _z, _z, _a, _z),
        (_z, _z, _z, _z, _z, _a),
    ),
    (
        (_a, _z, _z, _z, _z, _z),
        (_z, _a, _z, _z, _z, _z),
        (_z, _z, _a, _z, _z, _z),
        (_a * _c + _b * _b, _z, _z, _b, _z, _z),
        (-_b, _z, _z, -_one, _c, _z),
        (_z, _one, _z, _z, _z, _b),
    ),
)

_W_PROTO = (  # W_a
    (
        (_b, _z, _z, _z, _z, _z, _z, _z),
        (_one, _c, _z, _z, _z, _z, _z, _z),
        (_c, _a * _b + _c * _c, _a, _z, _z, _z, _z, _z),
        (_z, _z, _z, _b, _z, _z, _z, _z),
        (-_one, -_c, _z, _b, _a, _z, _z, _z),
        (_z, _z, _z, _z, _z, _c, _z, _z),
        (_z, _z, _z, _b, _z, -_one, _a, _z),
        (_z, _z, _z, _z, _z, _b - _c, _z, _a),
    ),
    (
        (_a, -(_a * _b) - _c * _c, _c, _z, _z, _z, _z, _z),
        (_z, _c, -_one, _z, _z, _z, _z, _z),
        (_z, _z, _b, _z, _z, _z, _z, _z),
        (_z, -_a, _z, _a, -_a, _z, _z, _z),
        (_z, _z, _z, _z, _b, _z, _z, _z),
        (_z, _z, -_a, _z, -(_a * _c), _a, _a * _c, _z),
        (_z, _z, -_one, _z, _b - _c, _z, _c, _z),
        (_z, _z, -_c, _z, _b * _c - _c * _c, _z, _a * _b + _c * _c, _a),
    ),
    (
        (_a, _z, _z, _b * _c - _c * _c, _z, _z, _z, _z),
        (_z, _a, _z, _c, _z, -_one, _z, _z),
        (_z, _z, _a, _z, _z, _b - _c, _a * _c + _c * _c, -_c),
        (_z, _z, _z, _c, _z, _z, _z, _z),
        (_z, _z, _z, _z, _a, _one, -_a, _z),
        (_z, _z, _z, _z, _z, _b, _z, _z),
        (_z, _z, _z, _z, _z, _z, _c, -_one),
        (_z, _z, _z, _z, _z, _z, _z, _b),
    ),
)

_X_PROTO = (
    (
        (_c, _z, _z, _z, _z, _z, _z, _z, _z),
        (_a * _c + _b * _b, _b, _z, _z, _z, _z, -(_j2 * _b * _c), _z, _z),
        (_b, _one, _a, _z, _z, _z, _c, _z, _z),
        (_z, _z, _z, _a, _z, _z, -_c, _j * _c, _a + _j2 * _b),
        (_j2 * _a - _b, _z, _z, _z, _b, _z, _z, _z, _z),
        (_j2 * _a, _z, _z, _z, _b, _a, _z, _z, _z),
        (_z, _z, _z, _z, _z, _z, _c, _z, _z),
        (_z, _z, _z, _z, _z, _z, _z, _c, _z),
        (_z, _z, _z, _z, _z, _z, _z, _j2 * _c, _b),
    ),
    (
        (_a, -_one, _b, -(_j * _b), _z, _z, _z, _z, _b),
        (_z, _b, -(_a * _c) - _b * _b, -(_a * _c) + _j * _b * _b, _z, _z, _z, _z,
         -(_a * _c) - _b * _b),
        (_z, _z, _c, _z, _z, _z, _z, _z, _z),
        (_z, _z, _z, _c, _z, _z, _z, _z, _z),
        (_z, _z, _a, _a, _a, -_a, _z, _z, _z),
        (_z, _z, _j * _b, _z, _z, _b, _z, _z, _z),
        (_z, _z, _z, _a, _z, _z, _a, _a, _a),
        (_z, _z, _z, _z, _z, _z, _z, _b, -(_j * _b)),
        (_z, _z, _z, _z, _z, _z, _z, _z, _c),
    ),
    (
        (_c, _z, _z, _z, _z, _z, _z, _z, _z),
        (_a * _c + _b * _b, _b, _z, _z, -(_j2 * _b * _c), _z, _z, _z, _z),
        (_z, _z, _b, _z, _z, -(_j2 * _c), _z, _z, _z),
        (_z, _z, _a + _j2 * _b, _a, -_c, -(_j * _c), _z, _z, _z),
        (_z, _z, _z, _z, _c, _z, _z, _z, _z),
        (_z, _z, _z, _z, _z, _c, _z, _z, _z),
        (_j2 * _a - _b, _z, _z, _z, _z, _z, _b, _z, _z),
        (-(_j2 * _a), _z, _z, _z, _z, _z, -_b, _a, _z),
        (_b, _one, _z, _z, _c, _z, _z, _z, _a),
    ),
)

# renaming recipes: parameter substitution applied to the family prototype,
# written as {source var: target var}
_RENAMES: dict[IrrepLabel, dict[str, str]] = {
    _lab("T", "b", "c"): {},
    _lab("T", "a", "b"): {"a": "c", "b": "a", "c": "b"},
    _lab("T", "a", "c"): {"a": "b", "b": "a", "c": "c"},
    _lab("U", "a", "b"): {},
    _lab("U", "b", "a"): {"a": "b", "b": "a", "c": "c"},
    _lab("U", "a", "c"): {"a": "a", "b": "c", "c": "b"},
    _lab("U", "c", "b"): {"a": "c", "b": "b", "c": "a"},
    _lab("U", "c", "a"): {"a": "c", "b": "a", "c": "b"},
    _lab("U", "b", "c"): {"a": "b", "b": "c", "c": "a"},
    _lab("V6", "a", "b", "c"): {},
    _lab("V6", "c", "a", "b"): {"a": "c", "b": "a", "c": "b"},
    _lab("V6", "b", "c", "a"): {"a": "b", "b": "c", "c": "a"},
    _lab("V6", "b", "a", "c"): {"a": "b", "b": "a", "c": "c"},
    _lab("V6", "c", "b", "a"): {"a": "c", "b": "b", "c": "a"},
    _lab("V6", "a", "c", "b"): {"a": "a", "b": "c", "c": "b"},
    _lab("W", "a"): {},
    _lab("W", "c"): {"a": "c", "b": "a", "c": "b"},
    _lab("W", "b"): {"a": "b", "b": "c", "c": "a"},
}

_PROTOS = {"T": _T_PROTO, "U": _U_PROTO, "V3": _V3_PROTO, "V6": _V6_PROTO,
           "W": _W_PROTO, "X": _X_PROTO}


# ---------------------------------------------------------------------------
# models and matrix helpers

Matrix = tuple[tuple[RatFunc, ...], ...]


@dataclass(eq=False)
class IrrepModel:
    """One irreducible representation: images of the braid generators as
    square matrices over Q(j)(a,b,c).  Immutable after construction; the
    private dicts only memoize derived data."""

    label: IrrepLabel
    dim: int
    mats: tuple[Matrix, ...]
    _inv: dict = field(default_factory=dict, repr=False)
    _words: dict = field(default_factory=dict, repr=False)
    _poly_words: dict = field(default_factory=dict, repr=False)

    @property
    def ngens(self) -> int:
        return len(self.mats)

    def gen(self, i: int) -> Matrix:
        return self.mats[i - 1]

    def gen_inv(self, i: int) -> Matrix:
        if i not in self._inv:
            self._inv[i] = generator_inverse(self.mats[i - 1])
        return self._inv[i]


def mat_identity(d: int) -> Matrix:
    return tuple(tuple(RF_ONE if i == k else RF_ZERO for k in range(d))
                 for i in range(d))


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    d = len(A)
    m = len(B[0])
    inner = range(len(B))
    out = []
    for i in range(d):
        Ai = A[i]
        row = []
        for k in range(m):
            acc = RF_ZERO
            for t in inner:
                x = Ai[t]
                y = B[t][k]
                if x.is_zero() or y.is_zero():
                    continue
                acc = acc + x * y
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(s: RatFunc, A: Matrix) -> Matrix:
    return tuple(tuple(s * x if not x.is_zero() else RF_ZERO for x in row)
                 for row in A)


def mat_is_zero(A: Matrix) -> bool:
    return all(x.is_zero() for row in A for x in row)


def mat_eq(A: Matrix, B: Matrix) -> bool:
    return all(x == y for ra, rb in zip(A, B) for x, y in zip(ra, rb))


def _wrap(rows: Sequence[Sequence[MultiPoly]]) -> Matrix:
    return tuple(tuple(RatFunc(p) for p in row) for row in rows)


def _rename_poly(p: MultiPoly, ren: dict[str, str]) -> MultiPoly:
    if not ren:
        return p
    idx = {"a": 0, "b": 1, "c": 2}
    perm = [0, 1, 2]
    for src, dst in ren.items():
        perm[idx[src]] = idx[dst]
    for v in "abc":
        if v not in ren:
            perm[idx[v]] = idx[v]
    return p.permute_vars(tuple(perm))


def _cubic_residual(M: Matrix) -> Matrix:
    d = len(M)
    eye = mat_identity(d)
    out = mat_sub(M, mat_scale(RatFunc(_a), eye))
    out = mat_mul(out, mat_sub(M, mat_scale(RatFunc(_b), eye)))
    out = mat_mul(out, mat_sub(M, mat_scale(RatFunc(_c), eye)))
    return out


def generator_inverse(M: Matrix) -> Matrix:
    """Inverse of a generator image, computed from the cubic relation:
    M^-1 = (M^2 - (a+b+c) M + (ab+ac+bc) Id) / (abc).  Verified."""
    d = len(M)
    eye = mat_identity(d)
    e1 = RatFunc(_a + _b + _c)
    e2 = RatFunc(_a * _b + _a * _c + _b * _c)
    num = mat_add(mat_sub(mat_mul(M, M), mat_scale(e1, M)), mat_scale(e2, eye))
    inv_abc = RatFunc(MP_ONE, _a * _b * _c)
    out = mat_scale(inv_abc, num)
    assert mat_eq(mat_mul(M, out), eye), "generator inverse failed verification"
    return out


def _check_model(m: IrrepModel) -> None:
    for M in m.mats:
        assert mat_is_zero(_cubic_residual(M)), f"cubic relation fails in {m.label.render()}"
    M1, M2 = m.mats[0], m.mats[1]
    assert mat_eq(mat_mul(mat_mul(M1, M2), M1), mat_mul(mat_mul(M2, M1), M2)), \
        f"braid relation s1 s2 s1 fails in {m.label.render()}"
    if m.ngens == 3:
        M3 = m.mats[2]
        assert mat_eq(mat_mul(mat_mul(M2, M3), M2), mat_mul(mat_mul(M3, M2), M3)), \
            f"braid relation s2 s3 s2 fails in {m.label.render()}"
        assert mat_eq(mat_mul(M1, M3), mat_mul(M3, M1)), \
            f"commutation s1 s3 fails in {m.label.render()}"


def _build_model(label: IrrepLabel, ngens: int) -> IrrepModel:
    if label.kind == "S":
        x = RatFunc(MultiPoly.var(label.params[0]))
        mats = tuple(((x,),) for _ in range(ngens))
        return IrrepModel(label, 1, mats)
    if label.kind == "Xprime":
        mats = tuple(
            _wrap(tuple(tuple(p.j_conjugate() for p in row) for row in M))
            for M in _X_PROTO[:ngens]
        )
        return IrrepModel(label, 9, mats)
    proto = _PROTOS[label.kind]
    ren = _RENAMES.get(label, {})
    mats = tuple(
        _wrap(tuple(tuple(_rename_poly(p, ren) for p in row) for row in M))
        for M in proto[:ngens]
    )
    return IrrepModel(label, label.dim, mats)


_CHAR_WORDS4 = (
    (), (1,), (2,), (3,), (1, 2), (2, 3), (1, 3), (1, 2, 3),
    (1, 1), (2, 2), (3, 3), (1, 2, 2), (1, 1, 2, 3), (1, 2, 3, 3),
)

_H4_CACHE: list[IrrepModel] | None = None
_H3_CACHE: list[IrrepModel] | None = None


def build_h4_irreps() -> list[IrrepModel]:
    """All 24 irreducible representations, in the fixed enumeration order.
    Construction re-verifies the braid and cubic relations symbolically,
    pairwise non-isomorphism, and the dimension count sum(dim^2) = 648."""
    global _H4_CACHE
    if _H4_CACHE is not None:
        return _H4_CACHE
    models = [_build_model(lab, 3) for lab in H4_LABEL_ORDER]
    assert sum(m.dim * m.dim for m in models) == 648
    for m in models:
        _check_model(m)
    # distinct character vectors at one specialization point
    pt = (5, 7, 11)
    chars = []
    for m in models:
        ev = _PointEval(m, pt)
        chars.append(tuple(ev.trace(w) for w in _CHAR_WORDS4))
    assert len(set(chars)) == 24, "two models have identical characters"
    _H4_CACHE = models
    return models


def build_h3_irreps() -> list[IrrepModel]:
    """The 7 irreducible representations of the three-strand algebra, as
    (s1, s2) pairs, in H3_LABEL_ORDER."""
    global _H3_CACHE
    if _H3_CACHE is not None:
        return _H3_CACHE
    models = [_build_model(lab, 2) for lab in H3_LABEL_ORDER]
    assert sum(m.dim * m.dim for m in models) == 24
    for m in models:
        _check_model(m)
    _H3_CACHE = models
    return models


def _model_by_label(label: IrrepLabel, models: Sequence[IrrepModel]) -> IrrepModel:
    for m in models:
        if m.label == label:
            return m
    raise KeyError(label.render())


# ---------------------------------------------------------------------------
# algebra elements and symbolic evaluation


@dataclass(frozen=True)
class AlgebraElement:
    """Finite linear combination of braid words with RatFunc coefficients.
    Zero coefficients are dropped on construction."""

    terms: tuple[tuple[BraidWord, RatFunc], ...]

    @staticmethod
    def build(pairs: Iterable[tuple[BraidWord, RatFunc]]) -> "AlgebraElement":
        acc: dict[BraidWord, RatFunc] = {}
        for w, coeff in pairs:
            cur = acc.get(w)
            acc[w] = coeff if cur is None else cur + coeff
        cleaned = tuple(
            (w, c) for w, c in sorted(acc.items(), key=lambda t: (len(t[0].letters), t[0].letters))
            if not c.is_zero()
        )
        return AlgebraElement(cleaned)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def to_json_obj(self) -> list[dict]:
        out = []
        for w, c in self.terms:
            r = c.reduce()
            out.append({
                "word": w.render(),
                "coeff": {"num": r.num.render(), "den": r.den.render()},
            })
        return out


def word_matrix(m: IrrepModel, letters: tuple[int, ...]) -> Matrix:
    """Image of a braid word in the model, built left to right with prefix
    caching; negative letters go through the cubic-relation inverse."""
    cached = m._words.get(letters)
    if cached is not None:
        return cached
    if not letters:
        out = mat_identity(m.dim)
    else:
        head = word_matrix(m, letters[:-1])
        last = letters[-1]
        assert 1 <= abs(last) <= m.ngens, "letter outside the model's strand range"
        g = m.gen(last) if last > 0 else m.gen_inv(-last)
        out = mat_mul(head, g)
    m._words[letters] = out
    return out


def evaluate_element(e: AlgebraElement, m: IrrepModel) -> Matrix:
    """Linear extension of word evaluation."""
    acc = tuple(tuple(RF_ZERO for _ in range(m.dim)) for _ in range(m.dim))
    for w, coeff in e.terms:
        acc = mat_add(acc, mat_scale(coeff, word_matrix(m, w.letters)))
    return acc


# polynomial form: image of a word as (polynomial matrix, k) meaning P/(abc)^k
PolyMatrix = tuple[tuple[MultiPoly, ...], ...]


def _poly_gens(m: IrrepModel) -> tuple[list[PolyMatrix], list[PolyMatrix]]:
    gens = []
    invnums = []
    e1 = _a + _b + _c
    e2 = _a * _b + _a * _c + _b * _c
    for M in m.mats:
        P = tuple(tuple(x.num for x in row) for row in M)
        for row in M:
            for x in row:
                assert x.den == MP_ONE
        gens.append(P)
        d = len(P)
        sq = _pmat_mul(P, P)
        num = tuple(
            tuple(
                sq[i][k] - e1 * P[i][k] + (e2 if i == k else MP_ZERO)
                for k in range(d)
            )
            for i in range(d)
        )
        invnums.append(num)
    return gens, invnums


def _pmat_mul(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    d = len(A)
    m = len(B[0])
    out = []
    for i in range(d):
        Ai = A[i]
        row = []
        for k in range(m):
            acc = MP_ZERO
            for t in range(len(B)):
                x = Ai[t]
                if x.is_zero():
                    continue
                y = B[t][k]
                if y.is_zero():
                    continue
                acc = acc + x * y
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def poly_word_matrix(m: IrrepModel, letters: tuple[int, ...]) -> tuple[PolyMatrix, int]:
    """Image of a word as a polynomial matrix P with ρ(word) = P/(abc)^k,
    k the number of negative letters."""
    cached = m._poly_words.get(letters)
    if cached is not None:
        return cached
    if not letters:
        d = m.dim
        out = (tuple(tuple(MP_ONE if i == k else MP_ZERO for k in range(d))
                     for i in range(d)), 0)
    else:
        if "gens" not in m._poly_words:
            m._poly_words["gens"] = _poly_gens(m)
        gens, invnums = m._poly_words["gens"]
        head, neg = poly_word_matrix(m, letters[:-1])
        last = letters[-1]
        if last > 0:
            out = (_pmat_mul(head, gens[last - 1]), neg)
        else:
            out = (_pmat_mul(head, invnums[-last - 1]), neg + 1)
    m._poly_words[letters] = out
    return out


_ABC = _a * _b * _c


def _rf_monomial_den(r: RatFunc) -> tuple[int, tuple[int, int, int]]:
    """(positive content, exponent key) of a monomial denominator."""
    assert len(r.den.terms) == 1, "denominator is not a monomial"
    (key, (u, v)), = r.den.terms.items()
    assert v == 0 and u > 0
    return u, key


def _mp_monomial_scale(p: MultiPoly, factor: int, key: tuple[int, int, int]) -> MultiPoly:
    out = MultiPoly.__new__(MultiPoly)
    out.terms = {
        (k[0] + key[0], k[1] + key[1], k[2] + key[2]): (u * factor, v * factor)
        for k, (u, v) in p.terms.items()
    }
    return out


def element_vanishes_symbolically(e: AlgebraElement, m: IrrepModel) -> bool:
    """Exact test of evaluate_element(e, m) == 0, organized over a common
    monomial denominator so the accumulation stays polynomial.  Requires all
    coefficient denominators to be monomials."""
    parts = []
    for w, coeff in e.terms:
        r = coeff.reduce()
        cont, key = _rf_monomial_den(r)
        P, k = poly_word_matrix(m, w.letters)
        parts.append((r.num, cont, (key[0] + k, key[1] + k, key[2] + k), P))
    if not parts:
        return True
    big = tuple(max(pt[2][i] for pt in parts) for i in range(3))
    content_lcm = lcm(*[pt[1] for pt in parts])
    d = m.dim
    acc: list[list[MultiPoly]] = [[MP_ZERO] * d for _ in range(d)]
    for num, cont, key, P in parts:
        shift = (big[0] - key[0], big[1] - key[1], big[2] - key[2])
        scaled_num = _mp_monomial_scale(num, content_lcm // cont, shift)
        for i in range(d):
            Pi = P[i]
            for k in range(d):
                if Pi[k].is_zero():
                    continue
                acc[i][k] = acc[i][k] + scaled_num * Pi[k]
    return all(x.is_zero() for row in acc for x in row)


# ---------------------------------------------------------------------------
# exact evaluation at integer parameter points (j kept symbolic as a pair)

IPair = tuple[int, int]


def _ip_mul(x: IPair, y: IPair) -> IPair:
    u1, v1 = x
    u2, v2 = y
    return (u1 * u2 - v1 * v2, u1 * v2 + u2 * v1 - v1 * v2)


def _mp_at_point(p: MultiPoly, a0: int, b0: int, c0: int) -> IPair:
    u = 0
    v = 0
    for (i, j, k), (pu, pv) in p.terms.items():
        mono = a0 ** i * b0 ** j * c0 ** k
        u += pu * mono
        v += pv * mono
    return (u, v)


class _PointEval:
    """Word evaluation in one model at an integer (a,b,c) point; values are
    integer-pair matrices M with ρ(word) = M/(abc)^neg."""

    def __init__(self, m: IrrepModel, point: tuple[int, int, int]):
        self.dim = m.dim
        a0, b0, c0 = point
        self.abc = a0 * b0 * c0
        self.gens = []
        self.invnums = []
        e1 = a0 + b0 + c0
        e2 = a0 * b0 + a0 * c0 + b0 * c0
        for M in m.mats:
            G = [[_mp_at_point(x.num, a0, b0, c0) for x in row] for row in M]
            self.gens.append(G)
            sq = self._mul(G, G)
            N = [
                [
                    (
                        sq[i][k][0] - e1 * G[i][k][0] + (e2 if i == k else 0),
                        sq[i][k][1] - e1 * G[i][k][1],
                    )
                    for k in range(m.dim)
                ]
                for i in range(m.dim)
            ]
            self.invnums.append(N)
        self.cache: dict[tuple[int, ...], tuple[list[list[IPair]], int]] = {
            (): ([[(1, 0) if i == k else (0, 0) for k in range(m.dim)]
                  for i in range(m.dim)], 0)
        }

    @staticmethod
    def _mul(A: list[list[IPair]], B: list[list[IPair]]) -> list[list[IPair]]:
        d = len(A)
        m = len(B[0])
        out = []
        for i in range(d):
            Ai = A[i]
            row = []
            for k in range(m):
                u = 0
                v = 0
                for t in range(len(B)):
                    x = Ai[t]
                    if x[0] == 0 and x[1] == 0:
                        continue
                    y = B[t][k]
                    if y[0] == 0 and y[1] == 0:
                        continue
                    u += x[0] * y[0] - x[1] * y[1]
                    v += x[0] * y[1] + y[0] * x[1] - x[1] * y[1]
                row.append((u, v))
            out.append(row)
        return out

    def word(self, letters: tuple[int, ...]) -> tuple[list[list[IPair]], int]:
        cached = self.cache.get(letters)
        if cached is not None:
            return cached
        head, neg = self.word(letters[:-1])
        last = letters[-1]
        if last > 0:
            out = (self._mul(head, self.gens[last - 1]), neg)
        else:
            out = (self._mul(head, self.invnums[-last - 1]), neg + 1)
        self.cache[letters] = out
        return out

    def trace(self, letters: tuple[int, ...]) -> tuple[Fraction, Fraction]:
        M, neg = self.word(letters)
        u = sum(M[i][i][0] for i in range(self.dim))
        v = sum(M[i][i][1] for i in range(self.dim))
        den = self.abc ** neg
        return (Fraction(u, den), Fraction(v, den))


def _element_at_point(e: AlgebraElement, m: IrrepModel,
                      point: tuple[int, int, int]) -> list[list[tuple[Fraction, Fraction]]]:
    ev = _PointEval(m, point)
    d = m.dim
    acc = [[(Fraction(0), Fraction(0))] * d for _ in range(d)]
    for w, coeff in e.terms:
        cu, cv = coeff.specialize(point[0], point[1], point[2])
        M, neg = ev.word(w.letters)
        den = Fraction(1, ev.abc ** neg)
        for i in range(d):
            for k in range(d):
                mu, mv = M[i][k]
                if mu == 0 and mv == 0:
                    continue
                xu = Fraction(mu) * den
                xv = Fraction(mv) * den
                # (cu + cv j)(xu + xv j)
                au, av = acc[i][k]
                acc[i][k] = (au + cu * xu - cv * xv,
                             av + cu * xv + cv * xu - cv * xv)
    return acc


def _element_nonzero_at_some_point(e: AlgebraElement, m: IrrepModel,
                                   rng: random.Random, tries: int = 3) -> bool:
    for _ in range(tries):
        pt = _random_point(rng)
        try:
            M = _element_at_point(e, m, pt)
        except ZeroDivisionError:
            continue
        if any(x != (0, 0) for row in M for x in row):
            return True
    return False


def _random_point(rng: random.Random) -> tuple[int, int, int]:
    while True:
        a0, b0, c0 = rng.sample(range(2, 98), 3)
        if b0 * a0 * a0 == c0 ** 3 or c0 * a0 * a0 == b0 ** 3:
            continue
        if a0 * b0 * b0 == c0 ** 3 or a0 * c0 * c0 == b0 ** 3:
            continue
        return (a0, b0, c0)


def relation_vanishing_pattern(e: AlgebraElement, *, seed: int = 0,
                               points: int = 2) -> dict[str, bool]:
    """Map each four-strand irrep name to whether e evaluates to the zero
    matrix there, decided at `points` random specializations.  A model counts
    as vanishing only if it is zero at every sampled point; nonzero models
    are nonzero at the first point already with overwhelming probability, so
    this is a cheap independent cross-check of a derived relation."""
    rng = random.Random(repr(("vanish-pattern", seed)))
    pts: list[tuple[int, int, int]] = []
    while len(pts) < points:
        pt = _random_point(rng)
        try:
            # screen out points on a coefficient-denominator hypersurface
            for _w, coeff in e.terms:
                coeff.specialize(*pt)
        except ZeroDivisionError:
            continue
        pts.append(pt)
    out: dict[str, bool] = {}
    for m in build_h4_irreps():
        vanishes = True
        for pt in pts:
            M = _element_at_point(e, m, pt)
            if any(x != (0, 0) for row in M for x in row):
                vanishes = False
                break
        out[m.label.render()] = vanishes
    return out


# ---------------------------------------------------------------------------
# word families on three and four strands

B0_3: tuple[tuple[int, ...], ...] = (
    (), (1,), (-1,), (2,), (-2,),
    (1, 2), (1, -2), (-1, 2), (-1, -2),
    (2, 1), (2, -1), (-2, 1), (-2, -1),
)

BOX12: tuple[tuple[int, ...], ...] = (
    (-1, -2, -1), (-1, -2, 1), (-1, 2, -1),
    (1, -2, -1), (1, -2, 1), (1, 2, -1),
    (-2, 1, -2),
)

B_3: tuple[tuple[int, ...], ...] = B0_3 + BOX12


def _shift(word: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(l + 1 if l > 0 else l - 1 for l in word)


BOX23: tuple[tuple[int, ...], ...] = tuple(_shift(w) for w in BOX12)


def _signed(shape: tuple[int, ...]) -> list[tuple[int, ...]]:
    out = []
    for signs in itertools.product((1, -1), repeat=len(shape)):
        out.append(tuple(s * l for s, l in zip(signs, shape)))
    return out


def _build_b4_families():
    b0 = [()]
    b0 += [(l,) for l in (1, -1, 2, -2, 3, -3)]
    for shape in ((1, 2), (1, 3), (2, 1), (2, 3), (3, 2)):
        b0 += _signed(shape)
    b1 = []
    for shape in ((1, 2, 3), (1, 3, 2), (3, 2, 1), (2, 1, 3)):
        b1 += _signed(shape)
    b1 += list(BOX12) + list(BOX23)
    b2 = []
    b2 += _signed((2, 1, 3, 2))
    for eps in (1, -1):
        b2 += [(eps * 3,) + w for w in BOX12]
        b2 += [w + (eps * 3,) for w in BOX12]
        b2 += [(eps * 1,) + w for w in BOX23]
        b2 += [w + (eps * 1,) for w in BOX23]
    a3u = [(1, -3, 2, -3), (-1, -3, 2, -3)]
    a3d = [(-3, 2, -3, 1), (-3, 2, -3, -1)]
    b3 = [w for w in b0 + b1 + b2 if w not in a3u + a3d]
    b3d = b3 + a3d
    removed = {(-1, -2, -3, -2), (1, -2, -3, -2)}
    b4 = tuple(w for w in b3d if w not in removed)
    return tuple(b0), tuple(b1), tuple(b2), tuple(b3), tuple(b3d), b4


B0_4, B1_4, B2_4, B3_4, B3D_4, B4_4 = _build_b4_families()

U_WORD: tuple[int, ...] = (-3, 2, -3)


def span_family_words() -> list[tuple[int, ...]]:
    """{b1 s3^r b2 : b1, b2 in B_3, r in {-1,0,1}} on four strands."""
    out = []
    for b1 in B_3:
        for r in (-1, 0, 1):
            mid = () if r == 0 else (3 * r,)
            for b2 in B_3:
                out.append(b1 + mid + b2)
    return out


def as_braids(words: Iterable[tuple[int, ...]], n: int) -> list[BraidWord]:
    return [BraidWord(n, w) for w in words]


# ---------------------------------------------------------------------------
# generic rank via specialization and modular reduction


def _evaluation_rows(words: Sequence[BraidWord], models: Sequence[IrrepModel],
                     point: tuple[int, int, int]) -> list[list[IPair]]:
    """One row per word: the stacked matrix coordinates across the models,
    as exact integer pairs (scaled per word by (abc)^neg, which does not
    affect any rank or membership question)."""
    evals = [_PointEval(m, point) for m in models]
    rows = []
    for w in words:
        row: list[IPair] = []
        for ev in evals:
            M, _neg = ev.word(w.letters)
            for r in M:
                row.extend(r)
        rows.append(row)
    return rows


def _rank_at_point(words: Sequence[BraidWord], models: Sequence[IrrepModel],
                   point: tuple[int, int, int], p: int, z: int) -> int:
    rows = _evaluation_rows(words, models, point)
    space = ModRowSpace(len(rows[0]), p)
    space.insert_rows([[(u + v * z) % p for (u, v) in row] for row in rows])
    return space.rank


def rank_of_span(words: Sequence[BraidWord], labels: Sequence[IrrepLabel],
                 *, seed: int = 0, agreements: int = 3, budget: int = 9) -> int:
    """Generic rank of the word evaluations across the listed irreps.

    Each trial draws a random integer parameter point and a random prime
    carrying a cube root of unity, evaluates every word exactly, and takes
    the rank of the stacked coordinate matrix mod p.  A specialized or
    reduced rank can only drop below the generic one, never exceed it, so
    the maximal value seen `agreements` times is reported; when that value
    equals the word count or the coordinate count it is exact outright."""
    h4 = build_h4_irreps()
    h3 = build_h3_irreps()
    nstrands = max(w.n for w in words)
    pool = h3 if nstrands <= 3 else h4
    models = [_model_by_label(lab, pool) for lab in labels]
    rng = random.Random(repr(("rank", seed, len(words),
                              tuple(l.render() for l in labels))))
    values: list[int] = []
    for _ in range(budget):
        pt = _random_point(rng)
        p, z = sample_unity_prime(rng)
        values.append(_rank_at_point(words, models, pt, p, z))
        best = max(values)
        if values.count(best) >= agreements:
            return best
    raise RuntimeError(f"specialization ranks did not stabilize: {values}")


# ---------------------------------------------------------------------------
# restriction multiplicities

_H3_CHAR_WORDS = (
    (), (1,), (2,), (1, 2), (1, 1), (2, 2), (1, 1, 2), (1, 2, 2),
    (1, 1, 2, 2), (1, 2, 1, 2), (1, 1, 2, 1, 2), (1, 2, 1, 2, 1, 2),
)


def restriction_multiplicities(m: IrrepModel, *, seed: int = 0) -> Counter:
    """Decomposition of the restriction to the subalgebra generated by
    (s1, s2) into three-strand irreducibles, via exact character solves at
    two random specializations (they must agree)."""
    h3 = build_h3_irreps()
    rng = random.Random(repr(("restrict", m.label.render(), seed)))
    found: list[tuple[int, ...]] = []
    for _attempt in range(14):
        if len(found) == 2:
            break
        pt = _random_point(rng)
        try:
            mat = []
            target = _PointEval(m, pt)
            col_evs = [_PointEval(h, pt) for h in h3]
            rhs = []
            for w in _H3_CHAR_WORDS:
                mat.append([ev.trace(w) for ev in col_evs])
                rhs.append(target.trace(w))
        except ZeroDivisionError:
            continue
        sol = solve_jpair_system(mat, rhs)
        if sol is None:
            continue
        ok = all(v == 0 and u.denominator == 1 and u >= 0 for (u, v) in sol)
        if not ok:
            continue
        found.append(tuple(int(u) for (u, _v) in sol))
    if len(found) < 2 or found[0] != found[1]:
        raise RuntimeError(
            f"restriction multiplicities unstable for {m.label.render()}: {found}")
    return Counter({h3[i].label: n for i, n in enumerate(found[0]) if n})


def _h2_multiplicities(m: IrrepModel, *, seed: int = 0) -> Counter:
    """Eigenvalue multiplicities of m(s1) among {a, b, c}: the restriction
    of a three-strand irrep to the two-strand subalgebra."""
    rng = random.Random(repr(("h2", m.label.render(), seed)))
    found: list[tuple[int, ...]] = []
    for _attempt in range(10):
        if len(found) == 2:
            break
        pt = _random_point(rng)
        ev = _PointEval(m, pt)
        mat = []
        rhs = []
        for k in range(3):
            w = (1,) * k
            mat.append([(Fraction(x ** k), Fraction(0)) for x in pt])
            rhs.append(ev.trace(w))
        sol = solve_jpair_system(mat, rhs)
        if sol is None:
            continue
        if not all(v == 0 and u.denominator == 1 and u >= 0 for (u, v) in sol):
            continue
        found.append(tuple(int(u) for (u, _v) in sol))
    if len(found) < 2 or found[0] != found[1]:
        raise RuntimeError(f"s1 eigenvalue multiplicities unstable: {found}")
    names = [_lab("S", "a"), _lab("S", "b"), _lab("S", "c")]
    return Counter({names[i]: n for i, n in enumerate(found[0]) if n})


# ---------------------------------------------------------------------------
# the ten four-strand quotient irreps

_T_BC = _lab("T", "b", "c")
_LG4_CACHE: list[IrrepLabel] | None = None


def lg4_irreps() -> list[IrrepLabel]:
    """The irreducibles of the four-strand Links-Gould quotient, computed:
    first the labels whose restriction avoids T_bc (the quadratic-relation
    quotient, total squared dimension 264), then the subset singled out by a
    consistent level-by-level matching against the branching diagram (total
    squared dimension 175).  Returned in enumeration order."""
    global _LG4_CACHE
    if _LG4_CACHE is not None:
        return list(_LG4_CACHE)
    h4 = build_h4_irreps()
    res4 = {m.label: restriction_multiplicities(m) for m in h4}
    survivors = [lab for lab in H4_LABEL_ORDER if res4[lab][_T_BC] == 0]
    assert sum(lab.dim ** 2 for lab in survivors) == 264, \
        "quadratic-relation quotient dimension mismatch"

    h3 = build_h3_irreps()
    res3 = {m.label: _h2_multiplicities(m) for m in h3
            if m.label in LG3_LABELS}

    def verts(r: int) -> list:
        lv = bratteli.level_dims(r)
        return sorted(lv.counts, key=lambda w: (w.a, w.k)), lv.counts

    v2, _ = verts(2)
    v3, d3 = verts(3)
    v4, d4 = verts(4)
    s_labels = [_lab("S", "a"), _lab("S", "b"), _lab("S", "c")]

    solutions: list[frozenset[IrrepLabel]] = []
    for sigma_perm in itertools.permutations(s_labels):
        sigma = dict(zip(v2, sigma_perm))
        # assign the six level-3 nodes to the six quotient irreps
        cands3 = {
            v: [lab for lab in LG3_LABELS
                if lab.dim == d3[v]
                and res3[lab] == Counter(sigma[p] for p in bratteli.parents(v))]
            for v in v3
        }

        def extend(vs, cands, partial, out):
            if not vs:
                out.append(dict(partial))
                return
            v = vs[0]
            for lab in cands[v]:
                if lab in partial.values():
                    continue
                partial[v] = lab
                extend(vs[1:], cands, partial, out)
                del partial[v]

        taus: list[dict] = []
        extend(v3, cands3, {}, taus)
        for tau in taus:
            cands4 = {
                v: [lab for lab in survivors
                    if lab.dim == d4[v]
                    and res4[lab] == Counter(tau[p] for p in bratteli.parents(v))]
                for v in v4
            }
            rhos: list[dict] = []
            extend(v4, cands4, {}, rhos)
            for rho in rhos:
                solutions.append(frozenset(rho.values()))

    assert solutions, "no branching-consistent assignment found"
    assert len(set(solutions)) == 1, \
        f"branching assignment does not pin a unique label set: {set(solutions)}"
    picked = solutions[0]
    assert sum(lab.dim ** 2 for lab in picked) == 175
    _LG4_CACHE = [lab for lab in H4_LABEL_ORDER if lab in picked]
    return list(_LG4_CACHE)


# ---------------------------------------------------------------------------
# the quadratic relation r2

H3_SPAN_WORDS: tuple[tuple[int, ...], ...] = tuple(
    [(), (1,), (-1,)]
    + [x + (2,) + y for x in ((), (1,), (-1,)) for y in ((), (1,), (-1,))]
    + [x + (-2,) + y for x in ((), (1,), (-1,)) for y in ((), (1,), (-1,))]
    + [(2, -1, 2), (1, 2, -1, 2), (-1, 2, -1, 2)]
)

_R2_BASIS_CACHE: list[AlgebraElement] | None = None
_DISCOVERY_PRIMES = (1000000007, 998244353, 754974721, 469762049, 167772161)


def _monomials_upto(d: int) -> list[tuple[int, int, int]]:
    return [(i, j, k)
            for i in range(d + 1)
            for j in range(d + 1 - i)
            for k in range(d + 1 - i - j)]


def _lift_primitive(residues: Sequence[int], prime: int) -> list[int]:
    """Lift residues of a rational vector (in a fixed normalization) to the
    primitive integer vector it is proportional to, via entrywise rational
    reconstruction."""
    fracs = []
    for x in residues:
        rc = rational_reconstruct(x % prime, prime)
        if rc is None:
            raise RuntimeError("rational lift failed; modulus too small")
        fracs.append(Fraction(rc[0], rc[1]))
    denlcm = 1
    for fr in fracs:
        denlcm = lcm(denlcm, fr.denominator)
    ints = [int(fr * denlcm) for fr in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _fit_ratfunc(pts: Sequence[tuple[int, int, int]], vals: Sequence[int],
                 prime: int, dmax: int = 8) -> RatFunc:
    """Smallest-total-degree rational function N/D whose residues match vals
    at pts.  The fit only has to be unambiguous; the caller certifies the
    lifted result exactly."""
    for d in range(dmax + 1):
        monos = _monomials_upto(d)
        nm = len(monos)
        if 2 * nm + 8 > len(pts):
            break
        rows = np.empty((len(pts), 2 * nm), dtype=np.int64)
        for r, (pt, val) in enumerate(zip(pts, vals)):
            pows = [[pow(x, e, prime) for e in range(d + 1)] for x in pt]
            for ci, (i, j, k) in enumerate(monos):
                mono = pows[0][i] * pows[1][j] % prime * pows[2][k] % prime
                rows[r, ci] = mono
                rows[r, nm + ci] = (-val) * mono % prime
        piv, red = rref_mod(rows, prime)
        if len(piv) == 2 * nm:
            continue
        free = [c for c in range(2 * nm) if c not in piv]
        if len(free) != 1:
            raise RuntimeError(f"rational fit ambiguous at degree {d}")
        w = [0] * (2 * nm)
        w[free[0]] = 1
        for i, c in enumerate(piv):
            w[c] = (-int(red[i, free[0]])) % prime
        ints = _lift_primitive(w, prime)
        dterms = {m: (x, 0) for m, x in zip(monos, ints[nm:]) if x}
        if not dterms:
            continue
        nterms = {m: (x, 0) for m, x in zip(monos, ints[:nm]) if x}
        num = MultiPoly.__new__(MultiPoly)
        num.terms = nterms
        den = MultiPoly.__new__(MultiPoly)
        den.terms = dterms
        return RatFunc(num, den)
    raise RuntimeError("no rational function of bounded degree fits the data")


def _poly_lcm(polys: Sequence[MultiPoly]) -> MultiPoly:
    out = MP_ONE
    for p in polys:
        g = poly_gcd(out, p)
        quot = poly_divexact(p, g)
        assert quot is not None
        out = out * quot
    return out


def _cleared(element: AlgebraElement) -> AlgebraElement:
    """The element scaled by the lcm of its coefficient denominators: every
    coefficient becomes a polynomial, making the symbolic vanishing check
    run over a common monomial denominator.  Scaling by a nonzero
    polynomial changes no vanishing or nonvanishing conclusion."""
    reduced = [(w, c.reduce()) for w, c in element]
    lead = _poly_lcm([c.den for _w, c in reduced])
    pairs = []
    for w, c in reduced:
        mult = poly_divexact(lead, c.den)
        assert mult is not None
        pairs.append((w, RatFunc(c.num * mult)))
    return AlgebraElement.build(pairs)


def r2_nullspace_basis() -> list[AlgebraElement]:
    """Exact basis of the nullspace of the evaluation map from the fixed
    24-word spanning set of the three-strand algebra into its six quotient
    irreps: one vector per free column of the reduced row echelon form,
    normalized to coordinate 1 at its free column and 0 at the others.

    The pivot structure is read modulo a prime (modular independence of the
    20 pivot columns transfers exactly; the four exhibited vectors certify
    the dependences), each coefficient is fitted as a small-degree rational
    function from many modular samples, and every vector is then certified
    symbolically: zero in all six quotient irreps, nonzero in the excluded
    one, supported only on its free column and earlier pivots."""
    global _R2_BASIS_CACHE
    if _R2_BASIS_CACHE is not None:
        return list(_R2_BASIS_CACHE)
    h3 = build_h3_irreps()
    lg3 = [_model_by_label(lab, h3) for lab in LG3_LABELS]
    words = H3_SPAN_WORDS
    q = _DISCOVERY_PRIMES[0]
    rng = random.Random("r2-discovery")

    def reduced_at(pt, prime):
        evs = [_ModEval(m, pt, prime) for m in lg3]
        cols = [np.concatenate([ev.word(w).ravel() for ev in evs])
                for w in words]
        return rref_mod(np.stack(cols, axis=1), prime)

    def rand_pt(prime):
        while True:
            pt = tuple(rng.randrange(2, prime - 2) for _ in range(3))
            if len(set(pt)) == 3:
                return pt

    piv_cols, _red = reduced_at(rand_pt(q), q)
    if len(piv_cols) != 20:
        raise RuntimeError(f"evaluation rank {len(piv_cols)} != 20")
    free_cols = [c for c in range(len(words)) if c not in piv_cols]
    if len(free_cols) != 4:
        raise RuntimeError(f"nullspace dimension {len(free_cols)} != 4")

    # residues of the four echelon nullspace vectors at many points
    pts: list[tuple[int, int, int]] = []
    samples: list[list[list[int]]] = []  # [point][word column][vector]
    while len(pts) < 520:
        pt = rand_pt(q)
        piv, red = reduced_at(pt, q)
        if piv != piv_cols:
            continue
        vs = [[0] * 4 for _ in range(len(words))]
        for fi, f in enumerate(free_cols):
            vs[f][fi] = 1
            for i, c in enumerate(piv_cols):
                vs[c][fi] = (-int(red[i, f])) % q
        pts.append(pt)
        samples.append(vs)

    basis: list[AlgebraElement] = []
    for fi, f in enumerate(free_cols):
        pairs = [(BraidWord(3, words[f]), RF_ONE)]
        for c in piv_cols:
            vals = [s[c][fi] for s in samples]
            if all(x == 0 for x in vals):
                continue
            if c > f:
                raise RuntimeError("echelon vector reaches past its free column")
            pairs.append((BraidWord(3, words[c]), _fit_ratfunc(pts, vals, q)))
        element = AlgebraElement.build(pairs)
        cleared = _cleared(element)
        for m in h3:
            vanishes = element_vanishes_symbolically(cleared, m)
            if m.label == _T_BC:
                if vanishes:
                    raise RuntimeError("nullspace vector collapses the excluded irrep")
            elif not vanishes:
                raise RuntimeError(
                    f"nullspace vector fails to vanish in {m.label.render()}")
        basis.append(element)
    _R2_BASIS_CACHE = basis
    return list(basis)


def derive_r2() -> AlgebraElement:
    """The quadratic relation of the three-strand quotient: the canonical
    nullspace vector attached to the last free column of the echelon form
    (unit coefficient on that word)."""
    return r2_nullspace_basis()[-1]


# ---------------------------------------------------------------------------
# the cubic-level relations F+- on four strands

_R3_CACHE: dict[str, AlgebraElement] = {}


def _mp_eval_mod(p: MultiPoly, a0: int, b0: int, c0: int, q: int) -> int:
    acc = 0
    for (i, j, k), (u, v) in p.terms.items():
        assert v == 0
        acc = (acc + u * pow(a0, i, q) % q * pow(b0, j, q) % q * pow(c0, k, q)) % q
    return acc


class _ModEval:
    """Word evaluation mod q at an integer point, j-free models only."""

    def __init__(self, m: IrrepModel, point: tuple[int, int, int], q: int):
        a0, b0, c0 = point
        self.q = q
        self.abc_inv = pow(a0 * b0 * c0 % q, q - 2, q)
        self.gens = []
        self.invs = []
        e1 = (a0 + b0 + c0) % q
        e2 = (a0 * b0 + a0 * c0 + b0 * c0) % q
        d = m.dim
        eye = np.eye(d, dtype=np.int64)
        for M in m.mats:
            G = np.array(
                [[_mp_eval_mod(x.num, a0, b0, c0, q) for x in row] for row in M],
                dtype=np.int64)
            self.gens.append(G)
            N = (G @ G % q - e1 * G + e2 * eye) % q
            self.invs.append(N * self.abc_inv % q)
        self.cache: dict[tuple[int, ...], np.ndarray] = {(): eye.copy()}

    def word(self, letters: tuple[int, ...]) -> np.ndarray:
        cached = self.cache.get(letters)
        if cached is not None:
            return cached
        head = self.word(letters[:-1])
        last = letters[-1]
        g = self.gens[last - 1] if last > 0 else self.invs[-last - 1]
        out = head @ g % self.q
        self.cache[letters] = out
        return out


def _r3_targets(sign: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    s1 = (1,) if sign == "+" else (-1,)
    return s1 + U_WORD, U_WORD + s1


def _r3_solve_at(models: Sequence[IrrepModel], point: tuple[int, int, int],
                 q: int) -> Optional[np.ndarray]:
    """Solve for both signs at once: columns of the result are the basis
    coefficients of s1^+ u - u s1^+ and s1^- u - u s1^-."""
    cols = []
    rhs = []
    evs = [_ModEval(m, point, q) for m in models]
    for w in B4_4:
        col = np.concatenate([ev.word(w).ravel() for ev in evs])
        cols.append(col)
    a_mat = np.stack(cols, axis=1)
    for sign in ("+", "-"):
        w1, w2 = _r3_targets(sign)
        t = np.concatenate([(ev.word(w1) - ev.word(w2)).ravel() % q for ev in evs])
        rhs.append(t)
    b_mat = np.stack(rhs, axis=1)
    return solve_mod_p(a_mat, b_mat, q)


def _uni_rat_shape(items: Sequence[tuple[int, int]], prime: int,
                   dmax: int = 20) -> tuple[int, int]:
    """Minimal (numerator degree, denominator degree) of a univariate
    rational function through the sample points, scanned in order of total
    degree; the fit matrix must have a one-dimensional nullspace."""
    npts = len(items)
    for tot in range(2 * dmax + 1):
        for dn in range(min(tot, dmax) + 1):
            dd = tot - dn
            if dd > dmax or dn + dd + 2 > npts - 6:
                continue
            rows = np.empty((npts, dn + dd + 2), dtype=np.int64)
            for r, (x, v) in enumerate(items):
                px = [pow(x, e, prime) for e in range(max(dn, dd) + 1)]
                for e in range(dn + 1):
                    rows[r, e] = px[e]
                for e in range(dd + 1):
                    rows[r, dn + 1 + e] = (-v) * px[e] % prime
            piv, _red = rref_mod(rows, prime)
            if rows.shape[1] - len(piv) == 1:
                return dn, dd
    raise RuntimeError("no univariate rational fit within the degree cap")


@dataclass
class _RatFit:
    """A one-dimensional modular fit of one rational-function coefficient:
    the surviving monomials of numerator (block 0) and denominator (block 1),
    their residues, and the anchor position whose entry is normalized to 1
    so fits at different primes describe the same rational vector."""
    positions: list[tuple[int, tuple[int, int, int]]]
    vec: list[int]
    anchor: int


def _r3_fit_key(pts: Sequence[tuple[int, int, int]], pool: dict, w: int,
                sgn: int, shape: tuple[int, int], prime: int):
    """Fit one basis coefficient as numerator/denominator of the given total
    degrees from the shared sample pool.  Returns a _RatFit, or the fit
    nullity (0: ansatz too small, >1: too large) so the caller can adjust."""
    monos_n = _monomials_upto(shape[0])
    monos_d = _monomials_upto(shape[1])
    ncols = len(monos_n) + len(monos_d)
    use = pts[: ncols + 24]
    if len(use) < ncols + 24:
        raise RuntimeError("sample pool exhausted")
    dmax = max(shape)
    rows = np.empty((len(use), ncols), dtype=np.int64)
    for r, pt in enumerate(use):
        val = int(pool[pt][w, sgn]) % prime
        pows = [[pow(x, e, prime) for e in range(dmax + 1)] for x in pt]
        for ci, (i, j, k) in enumerate(monos_n):
            rows[r, ci] = pows[0][i] * pows[1][j] % prime * pows[2][k] % prime
        for ci, (i, j, k) in enumerate(monos_d):
            mono = pows[0][i] * pows[1][j] % prime * pows[2][k] % prime
            rows[r, len(monos_n) + ci] = (-val) * mono % prime
    piv, red = rref_mod(rows, prime)
    free = [c for c in range(ncols) if c not in piv]
    if len(free) != 1:
        return len(free)
    vec = [0] * ncols
    vec[free[0]] = 1
    for i, c in enumerate(piv):
        vec[c] = (-int(red[i, free[0]])) % prime
    positions: list[tuple[int, tuple[int, int, int]]] = []
    kept: list[int] = []
    anchor = -1
    for ci in range(ncols):
        if not vec[ci]:
            continue
        blk, mono = (0, monos_n[ci]) if ci < len(monos_n) \
            else (1, monos_d[ci - len(monos_n)])
        if ci == free[0]:
            anchor = len(positions)
        positions.append((blk, mono))
        kept.append(vec[ci])
    return _RatFit(positions, kept, anchor)


def _r3_fit_restricted(pts: Sequence[tuple[int, int, int]], pool: dict,
                       w: int, sgn: int, fit: _RatFit, prime: int) -> list[int]:
    """Re-fit the coefficient at another prime, restricted to the monomial
    support already discovered, normalized at the same anchor entry."""
    ncols = len(fit.positions)
    use = pts[: ncols + 16]
    if len(use) < ncols + 16:
        raise RuntimeError("sample pool exhausted")
    rows = np.empty((len(use), ncols), dtype=np.int64)
    for r, pt in enumerate(use):
        val = int(pool[pt][w, sgn]) % prime
        for ci, (blk, (i, j, k)) in enumerate(fit.positions):
            mono = pow(pt[0], i, prime) * pow(pt[1], j, prime) % prime \
                * pow(pt[2], k, prime) % prime
            rows[r, ci] = mono if blk == 0 else (-val) * mono % prime
    piv, red = rref_mod(rows, prime)
    free = [c for c in range(ncols) if c not in piv]
    if len(free) != 1:
        raise RuntimeError("restricted fit lost uniqueness at a new prime")
    vec = [0] * ncols
    vec[free[0]] = 1
    for i, c in enumerate(piv):
        vec[c] = (-int(red[i, free[0]])) % prime
    av = vec[fit.anchor]
    if av == 0:
        raise RuntimeError("anchor entry vanished at a new prime")
    inv = pow(av, prime - 2, prime)
    return [x * inv % prime for x in vec]


def _ratfunc_from_positions(positions: Sequence[tuple[int, tuple[int, int, int]]],
                            ints: Sequence[int]) -> RatFunc:
    nterms = {m: (x, 0) for (blk, m), x in zip(positions, ints) if blk == 0 and x}
    dterms = {m: (x, 0) for (blk, m), x in zip(positions, ints) if blk == 1 and x}
    if not nterms or not dterms:
        raise RuntimeError("lift produced an empty numerator or denominator")
    num = MultiPoly.__new__(MultiPoly)
    num.terms = nterms
    den = MultiPoly.__new__(MultiPoly)
    den.terms = dterms
    return RatFunc(num, den)


def _discover_r3() -> dict[str, list[Optional[RatFunc]]]:
    """Modular discovery of the basis expansions for both signs.  Every
    nonzero coefficient is fitted as a small rational function: total degrees
    estimated along two generic affine lines, a minimal-shape fit at the
    first prime, a support-restricted confirmation at a second prime, CRT
    plus rational reconstruction, then fresh-point verification at a further
    prime, widening with more primes when an integer coefficient overflows.
    The caller certifies the result exactly, so this stage only has to be
    reproducible, not self-evidently correct."""
    labels = lg4_irreps()
    h4 = build_h4_irreps()
    models = [_model_by_label(lab, h4) for lab in labels]
    rng = random.Random("r3-discovery")
    primes = _DISCOVERY_PRIMES
    p0 = primes[0]
    nb = len(B4_4)

    pools: dict[int, dict] = {}

    def ensure_pool(prime: int, npts: int) -> list:
        pool = pools.setdefault(prime, {})
        guard = 0
        while len(pool) < npts:
            guard += 1
            if guard > 30 * npts + 300:
                raise RuntimeError("too many singular sample points")
            pt = tuple(rng.randrange(2, prime - 2) for _ in range(3))
            if pt in pool:
                continue
            sol = _r3_solve_at(models, pt, prime)
            if sol is not None:
                pool[pt] = sol
        return list(pool)

    pts0 = ensure_pool(p0, 3)
    pool0 = pools[p0]
    support = sorted({(w, sgn)
                      for pt in pts0
                      for w in range(nb) for sgn in range(2)
                      if int(pool0[pt][w, sgn]) % p0})

    shapes: dict[tuple[int, int], tuple[int, int]] = {}
    for _line in range(2):
        base = [rng.randrange(2, p0 - 2) for _ in range(3)]
        step = [rng.randrange(2, p0 - 2) for _ in range(3)]
        samples = []
        t = 1
        while len(samples) < 48:
            t += 1
            pt = tuple((base[k] + step[k] * t) % p0 for k in range(3))
            if min(pt) < 2:
                continue
            sol = _r3_solve_at(models, pt, p0)
            if sol is not None:
                samples.append((t, sol))
        for key in support:
            w, sgn = key
            items = [(t, int(s[w, sgn]) % p0) for t, s in samples]
            dn, dd = _uni_rat_shape(items, p0)
            old = shapes.get(key, (0, 0))
            shapes[key] = (max(old[0], dn), max(old[1], dd))

    def cols_for(shape: tuple[int, int]) -> int:
        return len(_monomials_upto(shape[0])) + len(_monomials_upto(shape[1]))

    fits: dict[tuple[int, int], _RatFit] = {}
    for key in support:
        shape = shapes[key]
        for _adjust in range(6):
            pts0 = ensure_pool(p0, cols_for(shape) + 24)
            res = _r3_fit_key(pts0, pool0, key[0], key[1], shape, p0)
            if isinstance(res, _RatFit):
                fits[key] = res
                break
            if res == 0:
                shape = (shape[0] + 1, shape[1] + 1)
            else:
                drop = res - 1
                shape = (max(0, shape[0] - drop), max(0, shape[1] - drop))
        else:
            raise RuntimeError(f"no unambiguous rational fit for {key}")

    p1 = primes[1]
    maxsupp = max(len(f.positions) for f in fits.values())
    pts1 = ensure_pool(p1, maxsupp + 16)
    pool1 = pools[p1]
    residues: dict[tuple[int, int], list[int]] = {}
    modulus: dict[tuple[int, int], int] = {}
    lifted: dict[tuple[int, int], Optional[RatFunc]] = {}

    def lift(key: tuple[int, int]) -> None:
        try:
            lifted[key] = _ratfunc_from_positions(
                fits[key].positions,
                _lift_primitive(residues[key], modulus[key]))
        except RuntimeError:
            lifted[key] = None

    for key, f in fits.items():
        v1 = _r3_fit_restricted(pts1, pool1, key[0], key[1], f, p1)
        residues[key] = [crt_pair(x0, p0, x1, p1)[0]
                         for x0, x1 in zip(f.vec, v1)]
        modulus[key] = p0 * p1
        lift(key)

    pending = set(fits)
    level = 2
    while pending:
        if level >= len(primes):
            raise RuntimeError("coefficients failed cross-prime verification")
        pv = primes[level]
        vpts = ensure_pool(pv, 8)
        poolv = pools[pv]
        still = set()
        for key in pending:
            rf = lifted[key]
            if rf is None:
                still.add(key)
                continue
            for pt in vpts[:8]:
                val = int(poolv[pt][key[0], key[1]]) % pv
                dv = _mp_eval_mod(rf.den, pt[0], pt[1], pt[2], pv)
                nv = _mp_eval_mod(rf.num, pt[0], pt[1], pt[2], pv)
                if dv == 0:
                    continue
                if (nv - val * dv) % pv:
                    still.add(key)
                    break
        if not still:
            break
        wpts = ensure_pool(pv, maxsupp + 24)
        poolw = pools[pv]
        for key in still:
            vw = _r3_fit_restricted(wpts, poolw, key[0], key[1], fits[key], pv)
            residues[key] = [crt_pair(x, modulus[key], y, pv)[0]
                             for x, y in zip(residues[key], vw)]
            modulus[key] *= pv
            lift(key)
        pending = still
        level += 1

    out: dict[str, list[Optional[RatFunc]]] = {"+": [None] * nb,
                                               "-": [None] * nb}
    for (w, sgn), rf in lifted.items():
        out["+" if sgn == 0 else "-"][w] = rf
    return out


def derive_r3(sign: str) -> AlgebraElement:
    """The four-strand relation F^sign = s1^sign u - u s1^sign - L^sign with
    u = s3^-1 s2 s3^-1 and L^sign the unique basis-word combination that
    evaluates to zero in all ten quotient irreps.  The expansion is found by
    modular rational-function fitting, then certified exactly: symbolic
    vanishing in the ten quotient irreps, nonzero in the fourteen others,
    uniqueness from the full column rank of the basis."""
    assert sign in ("+", "-")
    if sign in _R3_CACHE:
        return _R3_CACHE[sign]
    coeff_data = _discover_r3()
    h4 = build_h4_irreps()
    labels10 = lg4_irreps()
    models10 = [_model_by_label(lab, h4) for lab in labels10]

    # uniqueness: the 141 basis words evaluate to independent vectors (the
    # modular rank hits the row count, which certifies it exactly)
    rng_u = random.Random("r3-uniqueness")
    p_u, z_u = sample_unity_prime(rng_u)
    uniq_rank = _rank_at_point(as_braids(B4_4, 4), models10,
                               _random_point(rng_u), p_u, z_u)
    if uniq_rank != len(B4_4):
        raise RuntimeError(f"basis evaluation rank {uniq_rank} != {len(B4_4)}")

    for s in ("+", "-"):
        if s in _R3_CACHE:
            continue
        w1, w2 = _r3_targets(s)
        pairs: list[tuple[BraidWord, RatFunc]] = [
            (BraidWord(4, w1), RF_ONE),
            (BraidWord(4, w2), -RF_ONE),
        ]
        for w, rf in zip(B4_4, coeff_data[s]):
            if rf is None:
                continue
            pairs.append((BraidWord(4, w), -rf))
        element = AlgebraElement.build(pairs)

        cleared = _cleared(element)
        for m in models10:
            if not element_vanishes_symbolically(cleared, m):
                raise RuntimeError(
                    f"relation fails to vanish symbolically in {m.label.render()}")
        rng = random.Random(repr(("r3-nonzero", s)))
        for m in h4:
            if m.label in labels10:
                continue
            if not _element_nonzero_at_some_point(element, m, rng):
                raise RuntimeError(
                    f"relation unexpectedly vanishes in {m.label.render()}")
        _R3_CACHE[s] = element
    return _R3_CACHE[sign]


# ---------------------------------------------------------------------------
# printed three-strand expansions and the bimodule spot check


def _b3_expansion_elements() -> tuple[AlgebraElement, AlgebraElement]:
    a = RatFunc(_a)
    one = RF_ONE
    ainv = RatFunc(MP_ONE, _a)
    a2 = a * a
    a3 = a2 * a
    a4 = a3 * a
    b = RatFunc(_b)
    c = RatFunc(_c)
    first = AlgebraElement.build([
        (BraidWord(3, (-1, 2, 1)), one),
        (BraidWord(3, (1, 2)), ainv),
        (BraidWord(3, (1, -2)), -a),
        (BraidWord(3, (-1, 2)), -a),
        (BraidWord(3, (-1, -2)), a3),
        (BraidWord(3, (2, 1)), -ainv),
        (BraidWord(3, (2, -1)), a),
        (BraidWord(3, (-2, 1)), a),
        (BraidWord(3, (-2, -1)), -a3),
        (BraidWord(3, (-1, -2, 1)), -a2),
        (BraidWord(3, (1, -2, -1)), a2),
        (BraidWord(3, (1, 2, -1)), -one),
    ])
    second = AlgebraElement.build([
        (BraidWord(3, (1, 2, 1)), one),
        (BraidWord(3, (2,)), a * b + a * c + b * c + a2),
        (BraidWord(3, (-2,)), -(a2 * b * c + a3 * b + a3 * c + a4)),
        (BraidWord(3, (1, 2)), -(a + b + c)),
        (BraidWord(3, (1, -2)), a2 * b + a2 * c + a3),
        (BraidWord(3, (-1, 2)), -(a * b * c)),
        (BraidWord(3, (-1, -2)), a3 * b * c),
        (BraidWord(3, (2, 1)), -a),
        (BraidWord(3, (2, -1)), -(a * b * c + a2 * b + a2 * c)),
        (BraidWord(3, (-2, 1)), a3),
        (BraidWord(3, (-2, -1)), a3 * b * c + a4 * b + a4 * c),
        (BraidWord(3, (-1, -2, -1)), -(a4 * b * c)),
        (BraidWord(3, (-1, 2, -1)), a2 * b * c),
        (BraidWord(3, (1, -2, -1)), -(a3 * b + a3 * c)),
        (BraidWord(3, (1, -2, 1)), -a2),
        (BraidWord(3, (1, 2, -1)), a * b + a * c),
    ])
    return first, second


def verify_b3_expansions() -> dict:
    """Check the two printed rewriting identities of the three-strand
    quotient: each residual vanishes in every quotient irrep and is nonzero
    in the excluded irrep T_bc."""
    h3 = build_h3_irreps()
    report: dict = {"identities": []}
    for name, element in zip(("s1^-1 s2 s1", "s1 s2 s1"), _b3_expansion_elements()):
        zero_in = []
        nonzero_in = []
        for m in h3:
            if element_vanishes_symbolically(element, m):
                zero_in.append(m.label.render())
            else:
                nonzero_in.append(m.label.render())
        entry = {"lhs": name, "zero_in": zero_in, "nonzero_in": nonzero_in}
        report["identities"].append(entry)
        expected_zero = {lab.render() for lab in LG3_LABELS}
        if set(zero_in) != expected_zero or nonzero_in != [_T_BC.render()]:
            raise RuntimeError(f"expansion of {name} failed: {entry}")
    report["ok"] = True
    return report


def verify_bimodule_membership(max_len: int = 5, sample_size: int = 20,
                               seed: int = 0) -> dict:
    """Check the two-sided decomposition at four strands: the family
    {b1 s3^r b2} together with {w u : w in {e, s1, s1^-1}} evaluates with
    rank 175 across the ten quotient irreps.  That equals the coordinate
    count (so the modular rank is exact), and since 175 is the whole
    quotient's dimension, membership of every word follows; a seeded sample
    of words of length <= max_len is still reduced against the row space to
    exercise the evaluation path end to end."""
    labels = lg4_irreps()
    h4 = build_h4_irreps()
    models = [_model_by_label(lab, h4) for lab in labels]
    rng = random.Random(repr(("bimodule", seed)))
    point = _random_point(rng)
    p, z = sample_unity_prime(rng)
    family = span_family_words() + [w + U_WORD for w in ((), (1,), (-1,))]
    rows = _evaluation_rows(as_braids(family, 4), models, point)
    space = ModRowSpace(len(rows[0]), p)
    space.insert_rows([[(u + v * z) % p for (u, v) in row] for row in rows])
    if space.rank != 175:
        raise RuntimeError(f"span family rank {space.rank} != 175")

    letters = [1, -1, 2, -2, 3, -3]
    words = [(), (1,), (-1,), (2,), (-2,), (3,), (-3,)]
    words += [(x, y) for x in letters for y in letters][:12]
    while len(words) < 7 + 12 + sample_size:
        ln = rng.randint(3, max_len)
        words.append(tuple(rng.choice(letters) for _ in range(ln)))
    checked = 0
    for w in words:
        row = _evaluation_rows([BraidWord(4, w)], models, point)[0]
        if not space.contains([(u + v * z) % p for (u, v) in row]):
            raise RuntimeError(f"word {w} escaped the span")
        checked += 1
    return {"rank": space.rank, "words_checked": checked, "ok": True}
