"""The Links-Gould invariant engine.

A fixed 16x16 R-matrix on V tensor V (dim V = 4) generates braid group
representations; closing all strands but the first against the twist
mu = (t0^-1, -t1, -t0^-1, t1) yields a scalar multiple of the identity,
and that scalar is the two-variable invariant LG(closure; t0, t1).

The printed source for the matrix has a few typographically broken rows;
the transcription below is symmetric and is pinned down by four exact
construction gates (Yang-Baxter, the cubic identity, invertibility, and
the unknot/unlink values), which run on first use.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braid import BraidWord
from .exact_arith import (
    HL_RT0,
    HL_RT0T1,
    HL_RT1,
    HL_T0,
    HL_T0_INV,
    HL_T1,
    HL_T1_INV,
    HalfLaurent,
    LGScalar,
    LG_ONE,
    integral_part,
)

MAX_STRANDS = 8


def _hl(terms: dict) -> HalfLaurent:
    return HalfLaurent(terms)


def _sc(p0: dict | None = None, p1: dict | None = None) -> LGScalar:
    return LGScalar(HalfLaurent(p0 or {}), HalfLaurent(p1 or {}))


# Nonzero entries of R, 1-indexed (row, col) with slot pairs flattened as
# 4(x-1)+y; the matrix is symmetric.  Exponents are doubled half-integers.
_R_ENTRIES: dict[tuple[int, int], LGScalar] = {
    (1, 1): _sc({(2, 0): 1}),                              # t0
    (2, 5): _sc({(1, 0): 1}),                              # sqrt(t0)
    (3, 9): _sc({(1, 0): 1}),
    (4, 13): _sc({(0, 0): 1}),                             # 1
    (5, 2): _sc({(1, 0): 1}),
    (5, 5): _sc({(2, 0): 1, (0, 0): -1}),                  # t0 - 1
    (6, 6): _sc({(0, 0): -1}),                             # -1
    (7, 7): _sc({(2, 2): 1, (0, 0): -1}),                  # t0*t1 - 1
    (7, 10): _sc({(1, 1): -1}),                            # -sqrt(t0*t1)
    (7, 13): _sc(None, {(1, 1): -1}),                      # -sqrt(t0*t1)*Y
    (8, 14): _sc({(0, 1): 1}),                             # sqrt(t1)
    (9, 3): _sc({(1, 0): 1}),
    (9, 9): _sc({(2, 0): 1, (0, 0): -1}),
    (10, 7): _sc({(1, 1): -1}),
    (10, 13): _sc(None, {(0, 0): 1}),                      # Y
    (11, 11): _sc({(0, 0): -1}),
    (12, 15): _sc({(0, 1): 1}),
    (13, 4): _sc({(0, 0): 1}),
    (13, 7): _sc(None, {(1, 1): -1}),
    (13, 10): _sc(None, {(0, 0): 1}),
    (13, 13): _sc({(2, 0): 1, (0, 2): 1, (2, 2): -1, (0, 0): -1}),  # Y^2
    (14, 8): _sc({(0, 1): 1}),
    (14, 14): _sc({(0, 2): 1, (0, 0): -1}),               # t1 - 1
    (15, 12): _sc({(0, 1): 1}),
    (15, 15): _sc({(0, 2): 1, (0, 0): -1}),
    (16, 16): _sc({(0, 2): 1}),                            # t1
}


Matrix16 = dict[tuple[int, int], LGScalar]  # 0-indexed sparse 16x16


def _entries_to_matrix(entries: dict[tuple[int, int], LGScalar]) -> Matrix16:
    return {(r - 1, c - 1): v for (r, c), v in entries.items() if v}


def _mat_mul(m1: Matrix16, m2: Matrix16) -> Matrix16:
    by_row: dict[int, list[tuple[int, LGScalar]]] = {}
    for (r, c), v in m2.items():
        by_row.setdefault(r, []).append((c, v))
    out: Matrix16 = {}
    for (r, k), v in m1.items():
        for c, w in by_row.get(k, ()):
            key = (r, c)
            s = out.get(key)
            s = v * w if s is None else s + v * w
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def _mat_add(m1: Matrix16, m2: Matrix16) -> Matrix16:
    out = dict(m1)
    for k, v in m2.items():
        s = out.get(k)
        s = v if s is None else s + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _mat_scale(m: Matrix16, s: LGScalar) -> Matrix16:
    return {k: v * s for k, v in m.items() if v * s}


def _identity16(scale: LGScalar = LG_ONE) -> Matrix16:
    return {(i, i): scale for i in range(16)}


def rmatrix_inverse(r_mat: Matrix16) -> Matrix16:
    """-(R^2 + (1-t0-t1) R + (t0 t1 - t0 - t1) Id) / (t0 t1); the division is
    exact multiplication by the Laurent monomial (t0 t1)^-1."""
    r2 = _mat_mul(r_mat, r_mat)
    lin = _sc({(0, 0): 1, (2, 0): -1, (0, 2): -1})         # 1 - t0 - t1
    const = _sc({(2, 2): 1, (2, 0): -1, (0, 2): -1})       # t0 t1 - t0 - t1
    acc = _mat_add(r2, _mat_scale(r_mat, lin))
    acc = _mat_add(acc, _identity16(const))
    inv_mono = _sc({(-2, -2): -1})                         # -(t0 t1)^-1
    return _mat_scale(acc, inv_mono)


def _check_yang_baxter(r_mat: Matrix16) -> None:
    # braid-form YBE on V^3: (R x Id)(Id x R)(R x Id) = (Id x R)(R x Id)(Id x R)
    cols = _columns(r_mat)

    def apply_first(state: dict) -> dict:
        out: dict = {}
        for (x, y, z), amp in state.items():
            for row, v in cols[4 * x + y]:
                i, j = divmod(row, 4)
                key = (i, j, z)
                s = out.get(key)
                s = amp * v if s is None else s + amp * v
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return out

    def apply_second(state: dict) -> dict:
        out: dict = {}
        for (x, y, z), amp in state.items():
            for row, v in cols[4 * y + z]:
                i, j = divmod(row, 4)
                key = (x, i, j)
                s = out.get(key)
                s = amp * v if s is None else s + amp * v
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return out

    for x in range(4):
        for y in range(4):
            for z in range(4):
                start = {(x, y, z): LG_ONE}
                lhs = apply_first(apply_second(apply_first(start)))
                rhs = apply_second(apply_first(apply_second(start)))
                assert lhs == rhs, f"Yang-Baxter residual at basis input {(x, y, z)}"


def _check_cubic(r_mat: Matrix16) -> None:
    # (R + 1)(R - t0)(R - t1) = 0
    m_p1 = _mat_add(r_mat, _identity16())
    m_t0 = _mat_add(r_mat, _identity16(_sc({(2, 0): -1})))
    m_t1 = _mat_add(r_mat, _identity16(_sc({(0, 2): -1})))
    prod = _mat_mul(_mat_mul(m_p1, m_t0), m_t1)
    assert not prod, "cubic identity (R+1)(R-t0)(R-t1) = 0 fails"


def _columns(r_mat: Matrix16) -> list[tuple[tuple[int, LGScalar], ...]]:
    cols: list[list[tuple[int, LGScalar]]] = [[] for _ in range(16)]
    for (r, c), v in r_mat.items():
        cols[c].append((r, v))
    return [tuple(c) for c in cols]


@dataclass(frozen=True)
class RMatrixData:
    R: Matrix16
    Rinv: Matrix16
    mu: tuple[LGScalar, LGScalar, LGScalar, LGScalar]
    # column-major views used by the tensor engine
    rcols: tuple
    rinvcols: tuple


@lru_cache(maxsize=1)
def build_rmatrix() -> RMatrixData:
    """Construct and gate-check the R-matrix data; fails loudly on any defect."""
    r_mat = _entries_to_matrix(_R_ENTRIES)
    # transcription sanity: the matrix is symmetric
    for (r, c), v in r_mat.items():
        assert r_mat.get((c, r)) == v, f"R not symmetric at {(r, c)}"
    _check_yang_baxter(r_mat)
    _check_cubic(r_mat)
    rinv = rmatrix_inverse(r_mat)
    prod = _mat_mul(r_mat, rinv)
    assert prod == _identity16(), "R * Rinv != Id"
    mu = (
        LGScalar(HL_T0_INV),
        LGScalar(-HL_T1),
        LGScalar(-HL_T0_INV),
        LGScalar(HL_T1),
    )
    return RMatrixData(r_mat, rinv, mu, _columns(r_mat), _columns(rinv))


@dataclass(frozen=True)
class StateVector:
    """Sparse element of V^n: index tuples (0-based, entries 0..3) -> amplitude."""
    n: int
    entries: dict[tuple[int, ...], LGScalar]


def apply_letter(state: StateVector, letter: int) -> StateVector:
    """Apply R (letter > 0) or Rinv (letter < 0) to tensor slots |letter|-1, |letter|."""
    assert letter != 0 and abs(letter) < state.n, f"letter {letter} out of range"
    data = build_rmatrix()
    cols = data.rcols if letter > 0 else data.rinvcols
    p = abs(letter) - 1
    out: dict[tuple[int, ...], LGScalar] = {}
    for tup, amp in state.entries.items():
        for row, v in cols[4 * tup[p] + tup[p + 1]]:
            i, j = divmod(row, 4)
            key = tup[:p] + (i, j) + tup[p + 2:]
            s = out.get(key)
            s = amp * v if s is None else s + amp * v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return StateVector(state.n, out)


class StrandBoundError(ValueError):
    pass


class InvariantContractError(AssertionError):
    """The scalar-identity or integrality contract failed: transcription bug."""


def lg_invariant(w: BraidWord) -> HalfLaurent:
    """The Links-Gould invariant of the closure of w, in Z[t0^-+1, t1^-+1].

    Column-by-column partial trace: for each basis tuple, apply the braid
    action, read the diagonal coefficient, weight the trailing n-1 slots by
    mu, and sum.  The four sums (one per value of the first slot) must agree
    and the common value must be an integral Laurent polynomial.
    """
    if w.n > MAX_STRANDS:
        raise StrandBoundError(f"strand count {w.n} exceeds bound {MAX_STRANDS}")
    data = build_rmatrix()
    mu = data.mu
    letters = w.letters
    totals: list[LGScalar] = []
    for i1 in range(4):
        acc = LGScalar.from_int(0)
        stack = [(i1,)]
        # iterate over all 4^(n-1) trailing tuples
        def rec(prefix: tuple[int, ...], weight: LGScalar):
            nonlocal acc
            if len(prefix) == w.n:
                state = StateVector(w.n, {prefix: LG_ONE})
                for x in letters:
                    state = apply_letter(state, x)
                diag = state.entries.get(prefix)
                if diag is not None:
                    acc = acc + diag * weight
                return
            for jx in range(4):
                rec(prefix + (jx,), weight * mu[jx])
        rec((i1,), LG_ONE)
        totals.append(acc)
    for t in totals[1:]:
        if t != totals[0]:
            raise InvariantContractError(
                f"partial trace is not a scalar multiple of the identity on {w.render()}")
    value = totals[0]
    integral = integral_part(value)
    if integral is None:
        raise InvariantContractError(
            f"invariant of {w.render()} is not integral: {value.render()}")
    return integral


def verify_gates() -> dict:
    """Re-run the three construction gates explicitly and report them:
    Yang-Baxter on all 64 basis inputs, the cubic eigenvalue identity,
    and R * Rinv = Id.  All comparisons are exact."""
    data = build_rmatrix()
    _check_yang_baxter(data.R)
    _check_cubic(data.R)
    if _mat_mul(data.R, data.Rinv) != _identity16():
        raise AssertionError("R * Rinv != Id")
    return {"yang_baxter_inputs": 64, "cubic": True, "inverse": True, "ok": True}
