"""Braid words: representation, parsing, closure combinatorics, Markov moves.

A braid word on n strands is a sequence of nonzero signed integers i with
1 <= |i| <= n-1; letter i > 0 is the Artin generator s_i, letter -i its
inverse.  The empty word is the identity braid.
"""

from __future__ import annotations

import random
from dataclasses import dataclass


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        assert self.n >= 1
        for x in self.letters:
            assert x != 0 and 1 <= abs(x) <= self.n - 1, \
                f"letter {x} out of range for {self.n} strands"

    def writhe(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def render(self) -> str:
        return "[" + ",".join(str(x) for x in self.letters) + "]"


class BraidParseError(ValueError):
    pass


def parse_braid(text: str, n: int) -> BraidWord:
    """Parse `[i1,i2,...]` into a validated BraidWord on n strands."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise BraidParseError(f"braid word must be bracketed like [1,-2,1]: {text!r}")
    body = s[1:-1].strip()
    letters: list[int] = []
    if body:
        for tok in body.split(","):
            tok = tok.strip()
            try:
                x = int(tok)
            except ValueError:
                raise BraidParseError(f"bad braid letter {tok!r} in {text!r}") from None
            if x == 0:
                raise BraidParseError("braid letters are nonzero signed indices")
            if abs(x) > n - 1:
                raise BraidParseError(
                    f"letter {x} out of range for {n} strands (need |i| <= {n - 1})")
            letters.append(x)
    return BraidWord(n, tuple(letters))


def permutation(w: BraidWord) -> list[int]:
    """Underlying permutation of {0..n-1}: strand at bottom position p ends at perm[p]."""
    perm = list(range(w.n))
    for x in w.letters:
        i = abs(x) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return perm


def closure_components(w: BraidWord) -> int:
    """Number of link components of the braid closure = cycles of the permutation."""
    perm = permutation(w)
    seen = [False] * w.n
    cycles = 0
    for start in range(w.n):
        if seen[start]:
            continue
        cycles += 1
        p = start
        while not seen[p]:
            seen[p] = True
            p = perm[p]
    return cycles


def _conjugate(w: BraidWord, rng: random.Random) -> BraidWord:
    if w.n < 2:
        return w
    g = rng.randrange(1, w.n) * rng.choice((1, -1))
    return BraidWord(w.n, (g,) + w.letters + (-g,))


def _stabilize(w: BraidWord, rng: random.Random) -> BraidWord:
    sign = rng.choice((1, -1))
    return BraidWord(w.n + 1, w.letters + (sign * w.n,))


def _destabilize(w: BraidWord) -> BraidWord | None:
    # only when the last letter is +-(n-1) and index n-1 occurs exactly once
    if w.n < 2 or not w.letters:
        return None
    top = w.n - 1
    if abs(w.letters[-1]) != top:
        return None
    if sum(1 for x in w.letters if abs(x) == top) != 1:
        return None
    return BraidWord(w.n - 1, w.letters[:-1])


def _free_cancel(w: BraidWord) -> BraidWord | None:
    for i in range(len(w.letters) - 1):
        if w.letters[i] == -w.letters[i + 1]:
            return BraidWord(w.n, w.letters[:i] + w.letters[i + 2:])
    return None


def _braid_relation(w: BraidWord, rng: random.Random) -> BraidWord | None:
    # in-place rewrites that leave the braid element unchanged:
    # far commutation s_i s_k = s_k s_i (|i-k| >= 2) and the positive/negative
    # Yang-Baxter triple s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
    ls = w.letters
    spots: list[tuple[str, int]] = []
    for i in range(len(ls) - 1):
        if abs(abs(ls[i]) - abs(ls[i + 1])) >= 2:
            spots.append(("comm", i))
    for i in range(len(ls) - 2):
        x, y, z = ls[i], ls[i + 1], ls[i + 2]
        if x == z and abs(abs(x) - abs(y)) == 1 and (x > 0) == (y > 0):
            spots.append(("yb", i))
    if not spots:
        return None
    kind, i = spots[rng.randrange(len(spots))]
    if kind == "comm":
        new = ls[:i] + (ls[i + 1], ls[i]) + ls[i + 2:]
    else:
        new = ls[:i] + (ls[i + 1], ls[i], ls[i + 1]) + ls[i + 3:]
    return BraidWord(w.n, new)


def markov_perturb(w: BraidWord, seed: int, steps: int) -> BraidWord:
    """A seeded random walk through Markov moves; the closure link is unchanged.

    Moves: conjugation by a generator, stabilization (append s_n^{+-1} on n+1
    strands), destabilization when the last letter allows it, braid relations,
    and free cancellation.  Deterministic for fixed (w, seed, steps).  Strand
    count is kept within the engine bound of 8, and stabilization is biased
    down once the word grows past 6 strands.
    """
    rng = random.Random((seed, w.n, w.letters, steps).__repr__())
    cur = w
    for _ in range(steps):
        moves = ["conj", "conj", "rel", "rel", "cancel"]
        if cur.n < 8:
            weight = 2 if cur.n <= max(6, w.n) else 1
            moves += ["stab"] * weight
        if _destabilize(cur) is not None:
            moves += ["destab", "destab"]
        m = rng.choice(moves)
        if m == "conj":
            cur = _conjugate(cur, rng)
        elif m == "stab":
            cur = _stabilize(cur, rng)
        elif m == "destab":
            nxt = _destabilize(cur)
            if nxt is not None:
                cur = nxt
        elif m == "rel":
            nxt = _braid_relation(cur, rng)
            if nxt is not None:
                cur = nxt
        elif m == "cancel":
            nxt = _free_cancel(cur)
            if nxt is not None:
                cur = nxt
    return cur
