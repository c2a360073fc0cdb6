"""Branching-graph combinatorics for the generic tower LG_n.

Nodes at level r are weights [a,k]_r with 0 <= a <= r-1 and
0 <= k <= r-a-1 (level 0 holds only [0,0]_0).  Tensoring by the defining
module sends [a,k]_r to the admissible members of

    [a-1,k+1]_{r+1}, [a,k]_{r+1}, [a,k+1]_{r+1}, [a+1,k]_{r+1}

and path counts from the root give module dimensions; the sum of squared
path counts at level n is dim LG_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial


@dataclass(frozen=True)
class Weight:
    a: int
    k: int
    r: int

    def __post_init__(self):
        assert self.is_admissible(self.a, self.k, self.r), \
            f"[{self.a},{self.k}]_{self.r} is not admissible"

    @staticmethod
    def is_admissible(a: int, k: int, r: int) -> bool:
        if r == 0:
            return a == 0 and k == 0
        return 0 <= a <= r - 1 and 0 <= k <= r - a - 1


@dataclass(frozen=True)
class BratteliLevel:
    r: int
    counts: dict[Weight, int]


def children(w: Weight) -> list[Weight]:
    """The 3 or 4 admissible children of w at level r+1."""
    r1 = w.r + 1
    cand = [(w.a - 1, w.k + 1), (w.a, w.k), (w.a, w.k + 1), (w.a + 1, w.k)]
    out = []
    for a, k in cand:
        if a < 0:
            continue
        if Weight.is_admissible(a, k, r1):
            out.append(Weight(a, k, r1))
    return out


def level_dims(r: int) -> BratteliLevel:
    """Path counts from the root [0,0]_0 to every level-r node."""
    assert r >= 0
    counts = {Weight(0, 0, 0): 1}
    for level in range(r):
        nxt: dict[Weight, int] = {}
        for w, c in counts.items():
            for ch in children(w):
                nxt[ch] = nxt.get(ch, 0) + c
        counts = nxt
    return BratteliLevel(r, counts)


def parents(w: Weight) -> list[Weight]:
    """Level r-1 nodes having w among their children."""
    assert w.r >= 1
    out = []
    r0 = w.r - 1
    for a in range(max(0, w.a - 1), w.a + 2):
        for k in range(max(0, w.k - 1), w.k + 1):
            if Weight.is_admissible(a, k, r0) and w in children(Weight(a, k, r0)):
                out.append(Weight(a, k, r0))
    return out


def dim_lg(n: int) -> int:
    """Sum of squared path counts at level n."""
    assert n >= 1
    lvl = level_dims(n)
    return sum(c * c for c in lvl.counts.values())


def conjectured_dim(n: int) -> int:
    """(2n)!(2n+1)!/(n!(n+1)!)^2 for dim LG_{n+1}."""
    return factorial(2 * n) * factorial(2 * n + 1) // (factorial(n) * factorial(n + 1)) ** 2


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def check_dim_conjecture(N: int) -> list[tuple[int, int, int, bool]]:
    """For n <= N: (n, dim_lg(n+1), formula value, match) with the Catalan form
    C_n^2 (2n+1) asserted equal along the way.  Exact big-integer arithmetic."""
    assert N >= 1
    out = []
    counts = level_dims(1).counts
    for n in range(1, N + 1):
        # extend one level at a time instead of recomputing from the root
        nxt: dict[Weight, int] = {}
        for w, c in counts.items():
            for ch in children(w):
                nxt[ch] = nxt.get(ch, 0) + c
        counts = nxt
        d = sum(c * c for c in counts.values())
        f = conjectured_dim(n)
        assert f == catalan(n) ** 2 * (2 * n + 1)
        out.append((n, d, f, d == f))
    return out


def noncrossing_pairs(n: int) -> int:
    """Pairs of monotone lattice paths corner to corner of an (n+1)-vertex
    square (n unit steps each way) that never cross; counted by dynamic
    programming, independent of the factorial formula."""
    assert n >= 1
    # state after t steps: (d1, d2) = number of down-steps of each path,
    # path 1 weakly above path 2 (d1 <= d2)
    states = {(0, 0): 1}
    for t in range(2 * n):
        nxt: dict[tuple[int, int], int] = {}
        for (d1, d2), cnt in states.items():
            for m1 in (0, 1):
                e1 = d1 + m1
                x1 = t + 1 - e1
                if e1 > n or x1 > n:
                    continue
                for m2 in (0, 1):
                    e2 = d2 + m2
                    x2 = t + 1 - e2
                    if e2 > n or x2 > n:
                        continue
                    if e1 > e2:
                        continue
                    key = (e1, e2)
                    nxt[key] = nxt.get(key, 0) + cnt
        states = nxt
    return states.get((n, n), 0)


def casimir_value(w: Weight, alpha: Fraction) -> Fraction:
    """Scalar of the Casimir element on [a,k]_r: -2(r*alpha+k)(r*alpha+k+a+1)."""
    alpha = Fraction(alpha)
    t = w.r * alpha + w.k
    return -2 * t * (t + w.a + 1)
