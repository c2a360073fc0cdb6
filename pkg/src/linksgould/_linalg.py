"""Internal exact and modular linear algebra helpers.

Scalars over Q(j) (j^2 + j + 1 = 0) are pairs (u, v) of Fractions meaning
u + v*j; the field operations never approximate j.  Small dense systems use
straight Gaussian elimination over the pair field.  Rank computations and
the interpolation-based relation discovery run modulo word-sized primes
chosen with a cube root of unity, so j embeds as an integer residue.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

import numpy as np

JPair = tuple[Fraction, Fraction]

JP_ZERO: JPair = (Fraction(0), Fraction(0))
JP_ONE: JPair = (Fraction(1), Fraction(0))


def jp_is_zero(x: JPair) -> bool:
    return x[0] == 0 and x[1] == 0


def jp_add(x: JPair, y: JPair) -> JPair:
    return (x[0] + y[0], x[1] + y[1])


def jp_sub(x: JPair, y: JPair) -> JPair:
    return (x[0] - y[0], x[1] - y[1])


def jp_mul(x: JPair, y: JPair) -> JPair:
    u1, v1 = x
    u2, v2 = y
    return (u1 * u2 - v1 * v2, u1 * v2 + u2 * v1 - v1 * v2)


def jp_inv(x: JPair) -> JPair:
    u, v = x
    nrm = u * u - u * v + v * v
    if nrm == 0:
        raise ZeroDivisionError("inverse of zero in Q(j)")
    # (u + v j)^-1 = (u - v - v j) / (u^2 - uv + v^2)
    return ((u - v) / nrm, -v / nrm)


def jp_div(x: JPair, y: JPair) -> JPair:
    return jp_mul(x, jp_inv(y))


def solve_jpair_system(mat: Sequence[Sequence[JPair]],
                       rhs: Sequence[JPair]) -> Optional[list[JPair]]:
    """Solve mat * x = rhs exactly over Q(j).

    Accepts rectangular systems; returns None when inconsistent or when the
    solution is not unique (rank below the number of unknowns).
    """
    m = len(mat)
    if m == 0:
        return []
    n = len(mat[0])
    aug = [[*row, rhs[i]] for i, row in enumerate(mat)]
    piv_rows: list[int] = []
    r = 0
    for col in range(n):
        sel = None
        for i in range(r, m):
            if not jp_is_zero(aug[i][col]):
                sel = i
                break
        if sel is None:
            continue
        aug[r], aug[sel] = aug[sel], aug[r]
        inv = jp_inv(aug[r][col])
        aug[r] = [jp_mul(inv, x) for x in aug[r]]
        for i in range(m):
            if i != r and not jp_is_zero(aug[i][col]):
                f = aug[i][col]
                aug[i] = [jp_sub(x, jp_mul(f, y)) for x, y in zip(aug[i], aug[r])]
        piv_rows.append(col)
        r += 1
        if r == m:
            break
    if len(piv_rows) < n:
        return None
    for i in range(r, m):
        if not jp_is_zero(aug[i][n]):
            return None
    x = [JP_ZERO] * n
    for i, col in enumerate(piv_rows):
        x[col] = aug[i][n]
    return x


# ---------------------------------------------------------------------------
# modular row spaces for rank computations

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with a fixed base set; deterministic far beyond the
    word-sized moduli used here."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sample_unity_prime(rng: random.Random) -> tuple[int, int]:
    """Random prime p = 1 (mod 3) near 2^30, together with a primitive cube
    root of unity z mod p (so z^2 + z + 1 = 0).  p^2 fits in int64."""
    while True:
        p = rng.randrange(1 << 29, 1 << 30) | 1
        if p % 3 != 1 or not is_probable_prime(p):
            continue
        for g in range(2, 64):
            z = pow(g, (p - 1) // 3, p)
            if z != 1:
                assert (z * z + z + 1) % p == 0
                return p, z
        raise AssertionError("no cube root of unity found")


class ModRowSpace:
    """Row space over F_p with Gauss-Jordan kept in reduced form; vectorized
    batch inserts, incremental rank and membership queries."""

    def __init__(self, width: int, p: int):
        self.width = width
        self.p = p
        self.rows = np.zeros((0, width), dtype=np.int64)
        self.piv_cols: list[int] = []

    def _reduce(self, block: np.ndarray) -> np.ndarray:
        p = self.p
        for i, col in enumerate(self.piv_cols):
            f = block[:, col].copy()
            if np.any(f):
                block = (block - np.outer(f, self.rows[i])) % p
        return block

    def insert_rows(self, rows: Sequence[Sequence[int]]) -> int:
        """Append rows (arbitrary integers, reduced mod p); returns the rank
        gained."""
        p = self.p
        block = np.array([[int(x) % p for x in row] for row in rows],
                         dtype=np.int64)
        block = self._reduce(block)
        gained = 0
        for i in range(block.shape[0]):
            nz = np.nonzero(block[i])[0]
            if nz.size == 0:
                continue
            col = int(nz[0])
            row = block[i] * pow(int(block[i, col]), p - 2, p) % p
            if self.rows.shape[0]:
                f = self.rows[:, col].copy()
                if np.any(f):
                    self.rows = (self.rows - np.outer(f, row)) % p
            rest = block[i + 1:]
            if rest.shape[0]:
                f = rest[:, col].copy()
                if np.any(f):
                    block[i + 1:] = (rest - np.outer(f, row)) % p
            self.rows = np.vstack([self.rows, row.reshape(1, -1)])
            self.piv_cols.append(col)
            gained += 1
        return gained

    def contains(self, row: Sequence[int]) -> bool:
        """True when row lies in the current row span mod p."""
        block = np.array([[int(x) % self.p for x in row]], dtype=np.int64)
        return not np.any(self._reduce(block))

    @property
    def rank(self) -> int:
        return len(self.piv_cols)


# ---------------------------------------------------------------------------
# modular kit (discovery only; every discovered identity is certified exactly)

def rref_mod(a_mat: np.ndarray, p: int) -> tuple[list[int], np.ndarray]:
    """Reduced row echelon form over F_p: (pivot columns, reduced matrix).
    p^2 must fit in int64."""
    a = np.asarray(a_mat, dtype=np.int64) % p
    m, _n = a.shape
    r = 0
    piv: list[int] = []
    for col in range(a.shape[1]):
        if r == m:
            break
        nz = np.nonzero(a[r:, col])[0]
        if nz.size == 0:
            continue
        sel = r + int(nz[0])
        if sel != r:
            a[[r, sel]] = a[[sel, r]]
        a[r] = a[r] * pow(int(a[r, col]), p - 2, p) % p
        f = a[:, col].copy()
        f[r] = 0
        a = (a - np.outer(f, a[r])) % p
        piv.append(col)
        r += 1
    return piv, a


def solve_mod_p(a_mat: np.ndarray, b: np.ndarray, p: int) -> Optional[np.ndarray]:
    """Unique solution of a_mat x = b over F_p, or None if the system is
    singular/inconsistent.  a_mat may have more rows than columns; b may have
    several right-hand-side columns.  p^2 must fit in int64 (p below ~3e9)
    so the outer-product updates cannot overflow."""
    a = np.asarray(a_mat, dtype=np.int64) % p
    rhs = np.asarray(b, dtype=np.int64) % p
    one_d = rhs.ndim == 1
    if one_d:
        rhs = rhs.reshape(-1, 1)
    m, n = a.shape
    aug = np.concatenate([a, rhs], axis=1)
    r = 0
    piv_cols = []
    for col in range(n):
        nz = np.nonzero(aug[r:, col])[0]
        if nz.size == 0:
            continue
        sel = r + int(nz[0])
        if sel != r:
            aug[[r, sel]] = aug[[sel, r]]
        inv = pow(int(aug[r, col]), p - 2, p)
        aug[r] = (aug[r] * inv) % p
        f = aug[:, col].copy()
        f[r] = 0
        aug = (aug - np.outer(f, aug[r])) % p
        piv_cols.append(col)
        r += 1
        if r == m:
            break
    if len(piv_cols) < n:
        return None
    if r < m and np.any(aug[r:, n:]):
        return None
    x = np.zeros((n, rhs.shape[1]), dtype=np.int64)
    for i, col in enumerate(piv_cols):
        x[col] = aug[i, n:]
    return x[:, 0] if one_d else x


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    """Combine residues: value mod m1*m2."""
    g, x, _ = _ext_gcd(m1, m2)
    assert g == 1
    lift = (r1 + (r2 - r1) * x % m2 * m1) % (m1 * m2)
    return lift, m1 * m2


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def rational_reconstruct(r: int, m: int) -> Optional[tuple[int, int]]:
    """u/v with r*v = u (mod m), |u|, v <= sqrt(m/2); None if none exists."""
    r %= m
    if r == 0:
        return (0, 1)
    bound = int((m // 2) ** 0.5)
    old_r, cur_r = m, r
    old_t, cur_t = 0, 1
    while cur_r > bound:
        q = old_r // cur_r
        old_r, cur_r = cur_r, old_r - q * cur_r
        old_t, cur_t = cur_t, old_t - q * cur_t
    if abs(cur_t) > bound or cur_t == 0:
        return None
    if cur_t < 0:
        cur_r, cur_t = -cur_r, -cur_t
    if gcd(abs(cur_r), cur_t) != 1:
        return None
    return (cur_r, cur_t)
