"""Exact arithmetic for the two coefficient domains used across the package.

Two rings appear everywhere:

* ``HalfLaurent`` / ``LGScalar``: the Laurent ring Z[t0^{+-1/2}, t1^{+-1/2}]
  extended by an element Y with Y^2 = (t0-1)(1-t1).  This is where the
  16x16 R-matrix lives.  Half-integer exponents are stored doubled so all
  bookkeeping stays in plain integers.

* ``MultiPoly`` / ``RatFunc``: polynomials in a, b, c over Z[j]/(j^2+j+1)
  (coefficients stored as integer pairs u + v*j) and their fraction field.
  This is where the cubic Hecke algebra representations and the Markov
  trace live.  j is never evaluated numerically; linear algebra over Q(j)
  uses the same pair representation with rationals.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Mapping, Optional


# ---------------------------------------------------------------------------
# plain-dict Laurent helpers (keys: doubled exponent pairs, values: ints)

def _hl_add(d1: dict, d2: dict) -> dict:
    if not d1:
        return dict(d2)
    if not d2:
        return dict(d1)
    out = dict(d1)
    for k, c in d2.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _hl_mul(d1: dict, d2: dict) -> dict:
    if not d1 or not d2:
        return {}
    if len(d2) < len(d1):
        d1, d2 = d2, d1
    out: dict = {}
    for (e0, e1), c in d1.items():
        for (f0, f1), d in d2.items():
            k = (e0 + f0, e1 + f1)
            s = out.get(k, 0) + c * d
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def _hl_neg(d: dict) -> dict:
    return {k: -c for k, c in d.items()}


def _exp_str(doubled: int) -> str:
    return str(doubled // 2) if doubled % 2 == 0 else f"{doubled}/2"


def _join_signed(parts: list[tuple[int, str]]) -> str:
    # parts: (sign, body without sign); bodies joined with " + " / " - "
    out = []
    for i, (sign, body) in enumerate(parts):
        if i == 0:
            out.append(("-" if sign < 0 else "") + body)
        else:
            out.append((" - " if sign < 0 else " + ") + body)
    return "".join(out)


class HalfLaurent:
    """Element of Z[t0^{+-1/2}, t1^{+-1/2}]; exponents stored doubled."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms: dict = {k: c for k, c in (terms or {}).items() if c}

    # constructors
    @staticmethod
    def zero() -> "HalfLaurent":
        return HalfLaurent()

    @staticmethod
    def from_int(n: int) -> "HalfLaurent":
        return HalfLaurent({(0, 0): n})

    @staticmethod
    def term(coeff: int, e0_doubled: int, e1_doubled: int) -> "HalfLaurent":
        return HalfLaurent({(e0_doubled, e1_doubled): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, o: "HalfLaurent") -> "HalfLaurent":
        r = HalfLaurent.__new__(HalfLaurent)
        r.terms = _hl_add(self.terms, o.terms)
        return r

    def __sub__(self, o: "HalfLaurent") -> "HalfLaurent":
        return self + (-o)

    def __neg__(self) -> "HalfLaurent":
        r = HalfLaurent.__new__(HalfLaurent)
        r.terms = _hl_neg(self.terms)
        return r

    def __mul__(self, o: "HalfLaurent") -> "HalfLaurent":
        r = HalfLaurent.__new__(HalfLaurent)
        r.terms = _hl_mul(self.terms, o.terms)
        return r

    def __eq__(self, o: object) -> bool:
        return isinstance(o, HalfLaurent) and self.terms == o.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def all_integer_exponents(self) -> bool:
        return all(e0 % 2 == 0 and e1 % 2 == 0 for e0, e1 in self.terms)

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (e0, e1) in sorted(self.terms):
            c = self.terms[(e0, e1)]
            mono = []
            if e0:
                mono.append(f"t0^{_exp_str(e0)}")
            if e1:
                mono.append(f"t1^{_exp_str(e1)}")
            m = "*".join(mono)
            a = abs(c)
            if not m:
                body = str(a)
            elif a == 1:
                body = m
            else:
                body = f"{a}*{m}"
            parts.append((1 if c > 0 else -1, body))
        return _join_signed(parts)

    def __repr__(self) -> str:
        return f"HalfLaurent({self.render()})"


# frequently used constants
HL_ONE = HalfLaurent.from_int(1)
HL_T0 = HalfLaurent.term(1, 2, 0)
HL_T1 = HalfLaurent.term(1, 0, 2)
HL_RT0 = HalfLaurent.term(1, 1, 0)      # t0^(1/2)
HL_RT1 = HalfLaurent.term(1, 0, 1)      # t1^(1/2)
HL_RT0T1 = HalfLaurent.term(1, 1, 1)    # (t0*t1)^(1/2)
HL_T0_INV = HalfLaurent.term(1, -2, 0)
HL_T1_INV = HalfLaurent.term(1, 0, -2)

# Y^2 = (t0-1)(1-t1) = t0 + t1 - t0*t1 - 1
_Y2 = {(2, 0): 1, (0, 2): 1, (2, 2): -1, (0, 0): -1}


class LGScalar:
    """p0 + p1*Y with p0, p1 in HalfLaurent and Y^2 = (t0-1)(1-t1)."""

    __slots__ = ("p0", "p1")

    def __init__(self, p0: HalfLaurent | None = None, p1: HalfLaurent | None = None):
        self.p0 = p0 if p0 is not None else HalfLaurent.zero()
        self.p1 = p1 if p1 is not None else HalfLaurent.zero()

    @staticmethod
    def from_int(n: int) -> "LGScalar":
        return LGScalar(HalfLaurent.from_int(n))

    @staticmethod
    def from_laurent(p: HalfLaurent) -> "LGScalar":
        return LGScalar(p)

    @staticmethod
    def y() -> "LGScalar":
        return LGScalar(HalfLaurent.zero(), HL_ONE)

    def is_zero(self) -> bool:
        return self.p0.is_zero() and self.p1.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, o: "LGScalar") -> "LGScalar":
        return LGScalar(self.p0 + o.p0, self.p1 + o.p1)

    def __sub__(self, o: "LGScalar") -> "LGScalar":
        return LGScalar(self.p0 - o.p0, self.p1 - o.p1)

    def __neg__(self) -> "LGScalar":
        return LGScalar(-self.p0, -self.p1)

    def __mul__(self, o: "LGScalar") -> "LGScalar":
        a0, a1, b0, b1 = self.p0.terms, self.p1.terms, o.p0.terms, o.p1.terms
        p0 = _hl_mul(a0, b0)
        if a1 and b1:
            p0 = _hl_add(p0, _hl_mul(_hl_mul(a1, b1), _Y2))
        p1 = _hl_add(_hl_mul(a0, b1), _hl_mul(a1, b0))
        r0 = HalfLaurent.__new__(HalfLaurent)
        r0.terms = p0
        r1 = HalfLaurent.__new__(HalfLaurent)
        r1.terms = p1
        return LGScalar(r0, r1)

    def __eq__(self, o: object) -> bool:
        return isinstance(o, LGScalar) and self.p0 == o.p0 and self.p1 == o.p1

    def __hash__(self) -> int:
        return hash((self.p0, self.p1))

    def render(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for (e0, e1) in sorted(self.p0.terms):
            c = self.p0.terms[(e0, e1)]
            mono = []
            if e0:
                mono.append(f"t0^{_exp_str(e0)}")
            if e1:
                mono.append(f"t1^{_exp_str(e1)}")
            m = "*".join(mono)
            a = abs(c)
            body = str(a) if not m else (m if a == 1 else f"{a}*{m}")
            parts.append((1 if c > 0 else -1, body))
        for (e0, e1) in sorted(self.p1.terms):
            c = self.p1.terms[(e0, e1)]
            mono = []
            if e0:
                mono.append(f"t0^{_exp_str(e0)}")
            if e1:
                mono.append(f"t1^{_exp_str(e1)}")
            mono.append("Y")
            m = "*".join(mono)
            a = abs(c)
            body = m if a == 1 else f"{a}*{m}"
            parts.append((1 if c > 0 else -1, body))
        return _join_signed(parts)

    def __repr__(self) -> str:
        return f"LGScalar({self.render()})"


LG_ZERO = LGScalar.from_int(0)
LG_ONE = LGScalar.from_int(1)


def lg_arith(kind: str, x: LGScalar, y: LGScalar | None = None) -> LGScalar:
    """Ring operations on LGScalar: add, sub, mul, neg."""
    if kind == "add":
        return x + y
    if kind == "sub":
        return x - y
    if kind == "mul":
        return x * y
    if kind == "neg":
        return -x
    raise ValueError(f"unknown LGScalar operation {kind!r}")


def integral_part(x: LGScalar) -> Optional[HalfLaurent]:
    """The element as a Laurent polynomial in Z[t0^{+-1},t1^{+-1}], if it is one.

    Present iff the Y-part vanishes and every exponent is integral; the
    returned HalfLaurent then has even doubled exponents throughout.
    """
    if not x.p1.is_zero():
        return None
    if not x.p0.all_integer_exponents():
        return None
    return x.p0


# ---------------------------------------------------------------------------
# coefficients u + v*j with j^2 = -1 - j

def jmul(p: tuple[int, int], q: tuple[int, int]) -> tuple[int, int]:
    u1, v1 = p
    u2, v2 = q
    return (u1 * u2 - v1 * v2, u1 * v2 + u2 * v1 - v1 * v2)


def _jpair_str(u: int, v: int) -> str:
    if v == 0:
        return str(u)
    return f"({u}{'+' if v >= 0 else '-'}{abs(v)}*j)"


class MultiPoly:
    """Polynomial in a, b, c over Z[j]/(j^2+j+1); coefficients are (u, v) pairs."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int, int], tuple[int, int]] | None = None):
        self.terms: dict = {k: uv for k, uv in (terms or {}).items() if uv != (0, 0)}

    @staticmethod
    def zero() -> "MultiPoly":
        return MultiPoly()

    @staticmethod
    def from_int(n: int) -> "MultiPoly":
        return MultiPoly({(0, 0, 0): (n, 0)})

    @staticmethod
    def var(name: str) -> "MultiPoly":
        i = {"a": 0, "b": 1, "c": 2}[name]
        e = [0, 0, 0]
        e[i] = 1
        return MultiPoly({tuple(e): (1, 0)})

    @staticmethod
    def j() -> "MultiPoly":
        return MultiPoly({(0, 0, 0): (0, 1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_j_free(self) -> bool:
        return all(v == 0 for (_, v) in self.terms.values())

    def __add__(self, o: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for k, (u, v) in o.terms.items():
            cu, cv = out.get(k, (0, 0))
            s = (cu + u, cv + v)
            if s == (0, 0):
                out.pop(k, None)
            else:
                out[k] = s
        r = MultiPoly.__new__(MultiPoly)
        r.terms = out
        return r

    def __sub__(self, o: "MultiPoly") -> "MultiPoly":
        return self + (-o)

    def __neg__(self) -> "MultiPoly":
        r = MultiPoly.__new__(MultiPoly)
        r.terms = {k: (-u, -v) for k, (u, v) in self.terms.items()}
        return r

    def __mul__(self, o: "MultiPoly") -> "MultiPoly":
        if not self.terms or not o.terms:
            return MultiPoly.zero()
        t1, t2 = self.terms, o.terms
        if len(t2) < len(t1):
            t1, t2 = t2, t1
        out: dict = {}
        for (e0, e1, e2), (u1, v1) in t1.items():
            jfree = v1 == 0
            for (f0, f1, f2), (u2, v2) in t2.items():
                k = (e0 + f0, e1 + f1, e2 + f2)
                if jfree and v2 == 0:
                    pu, pv = u1 * u2, 0
                else:
                    pu, pv = u1 * u2 - v1 * v2, u1 * v2 + u2 * v1 - v1 * v2
                cu, cv = out.get(k, (0, 0))
                s = (cu + pu, cv + pv)
                if s == (0, 0):
                    out.pop(k, None)
                else:
                    out[k] = s
        r = MultiPoly.__new__(MultiPoly)
        r.terms = out
        return r

    def __pow__(self, n: int) -> "MultiPoly":
        assert n >= 0
        r = MultiPoly.from_int(1)
        for _ in range(n):
            r = r * self
        return r

    def __eq__(self, o: object) -> bool:
        return isinstance(o, MultiPoly) and self.terms == o.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def permute_vars(self, perm: tuple[int, int, int]) -> "MultiPoly":
        """Rename variables: exponent of variable i moves to position perm[i]."""
        out: dict = {}
        for (e0, e1, e2), uv in self.terms.items():
            k = [0, 0, 0]
            k[perm[0]] += e0
            k[perm[1]] += e1
            k[perm[2]] += e2
            out[tuple(k)] = uv
        r = MultiPoly.__new__(MultiPoly)
        r.terms = out
        return r

    def j_conjugate(self) -> "MultiPoly":
        """Apply j -> j^2 = -1-j to every coefficient."""
        r = MultiPoly.__new__(MultiPoly)
        r.terms = {k: (u - v, -v) for k, (u, v) in self.terms.items()}
        return r

    def content(self) -> int:
        g = 0
        for (u, v) in self.terms.values():
            g = gcd(g, gcd(abs(u), abs(v)))
        return g

    def divide_int(self, n: int) -> "MultiPoly":
        assert n != 0
        out = {}
        for k, (u, v) in self.terms.items():
            assert u % n == 0 and v % n == 0, "non-exact integer division"
            out[k] = (u // n, v // n)
        r = MultiPoly.__new__(MultiPoly)
        r.terms = out
        return r

    def leading_key(self) -> tuple[int, int, int]:
        return max(self.terms)

    def total_degree(self) -> int:
        return max((sum(k) for k in self.terms), default=0)

    def specialize(self, a0: Fraction, b0: Fraction, c0: Fraction) -> tuple[Fraction, Fraction]:
        u_acc = Fraction(0)
        v_acc = Fraction(0)
        for (e0, e1, e2), (u, v) in self.terms.items():
            m = (Fraction(a0) ** e0) * (Fraction(b0) ** e1) * (Fraction(c0) ** e2)
            u_acc += u * m
            v_acc += v * m
        return (u_acc, v_acc)

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            u, v = self.terms[k]
            mono = []
            for name, e in zip(("a", "b", "c"), k):
                if e:
                    mono.append(f"{name}^{e}")
            m = "*".join(mono)
            if v == 0:
                a = abs(u)
                body = str(a) if not m else (m if a == 1 else f"{a}*{m}")
                parts.append((1 if u > 0 else -1, body))
            else:
                cs = _jpair_str(u, v)
                parts.append((1, cs if not m else f"{cs}*{m}"))
        return _join_signed(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self.render()})"


MP_ZERO = MultiPoly.zero()
MP_ONE = MultiPoly.from_int(1)
MP_A = MultiPoly.var("a")
MP_B = MultiPoly.var("b")
MP_C = MultiPoly.var("c")
MP_J = MultiPoly.j()


def poly_divexact(p: MultiPoly, d: MultiPoly) -> Optional[MultiPoly]:
    """Exact quotient p/d, or None when d does not divide p.

    The divisor must be j-free; the dividend may carry j-parts (they are
    divided coefficientwise, which is exact whenever p = q*d for some q).
    """
    assert not d.is_zero()
    assert d.is_j_free()
    if p.is_zero():
        return MultiPoly.zero()
    dk = d.leading_key()
    dc = d.terms[dk][0]
    rem = dict(p.terms)
    quot: dict = {}
    dk0, dk1, dk2 = dk
    while rem:
        lk = max(rem)
        e0, e1, e2 = lk
        if e0 < dk0 or e1 < dk1 or e2 < dk2:
            return None
        u, v = rem[lk]
        if u % dc or v % dc:
            return None
        q = (u // dc, v // dc)
        qk = (e0 - dk0, e1 - dk1, e2 - dk2)
        quot[qk] = q
        qu, qv = q
        for (f0, f1, f2), (du, dv) in d.terms.items():
            k = (qk[0] + f0, qk[1] + f1, qk[2] + f2)
            cu, cv = rem.get(k, (0, 0))
            if dv == 0 and qv == 0:
                s = (cu - qu * du, cv)
            else:
                pu = qu * du - qv * dv
                pv = qu * dv + du * qv - qv * dv
                s = (cu - pu, cv - pv)
            if s == (0, 0):
                rem.pop(k, None)
            else:
                rem[k] = s
    r = MultiPoly.__new__(MultiPoly)
    r.terms = quot
    return r


def _eval_last_var(p: MultiPoly, which: int, xi: int) -> MultiPoly:
    acc: dict = {}
    for k, (u, v) in p.terms.items():
        e = k[which]
        kk = list(k)
        kk[which] = 0
        kk = tuple(kk)
        m = xi ** e
        cu, cv = acc.get(kk, (0, 0))
        acc[kk] = (cu + u * m, cv + v * m)
    out = MultiPoly.__new__(MultiPoly)
    out.terms = {k: uv for k, uv in acc.items() if uv != (0, 0)}
    return out


def _smod(n: int, m: int) -> int:
    r = n % m
    if r > m // 2:
        r -= m
    return r


def _gcdheu(p: MultiPoly, q: MultiPoly, depth: int = 0) -> Optional[MultiPoly]:
    # heuristic gcd over Z[a,b,c] for j-free polynomials; None on failure
    vars_present = [i for i in range(3)
                    if any(k[i] for k in p.terms) or any(k[i] for k in q.terms)]
    if not vars_present:
        pu = p.terms.get((0, 0, 0), (0, 0))[0]
        qu = q.terms.get((0, 0, 0), (0, 0))[0]
        return MultiPoly.from_int(gcd(abs(pu), abs(qu)))
    x = vars_present[-1]
    norm = 0
    for (u, _) in list(p.terms.values()) + list(q.terms.values()):
        norm = max(norm, abs(u))
    xi = 2 * norm + 29
    for _ in range(5):
        gp = _eval_last_var(p, x, xi)
        gq = _eval_last_var(q, x, xi)
        g_eval = _gcdheu(gp, gq, depth + 1)
        if g_eval is not None:
            # rebuild a polynomial in x from balanced base-xi digits
            digits = []
            e = g_eval
            while not e.is_zero():
                dig = {}
                nxt = {}
                for k, (u, v) in e.terms.items():
                    du = _smod(u, xi)
                    if du:
                        dig[k] = (du, 0)
                    ru = (u - du) // xi
                    if ru:
                        nxt[k] = (ru, 0)
                digits.append(MultiPoly(dig))
                e = MultiPoly(nxt)
                if len(digits) > 400:
                    break
            else:
                g = MultiPoly.zero()
                for i, dmp in enumerate(digits):
                    shift = {}
                    for k, uv in dmp.terms.items():
                        kk = list(k)
                        kk[x] += i
                        shift[tuple(kk)] = uv
                    g = g + MultiPoly(shift)
                # keep the integer content: when the gcd omits the deeper
                # variables, the reconstruction at this level reads their
                # contribution out of the content, so normalizing it away
                # here would collapse the lift to a constant
                if not g.is_zero() and poly_divexact(p, g) is not None \
                        and poly_divexact(q, g) is not None:
                    return g
        xi = xi * 3 + 17
    return None


def poly_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """A (possibly trivial) common divisor of p and q over Z[a,b,c].

    Heuristic: returns the true gcd in the common case, and is always a
    verified exact divisor of both inputs.  Falls back to the integer
    content for j-carrying input or heuristic failure.
    """
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    cp, cq = p.content(), q.content()
    cg = gcd(cp, cq)
    if not (p.is_j_free() and q.is_j_free()):
        return MultiPoly.from_int(cg)
    pp = p.divide_int(cp) if cp > 1 else p
    qq = q.divide_int(cq) if cq > 1 else q
    g = _gcdheu(pp, qq)
    if g is None:
        return MultiPoly.from_int(cg)
    lu, lv = g.terms[g.leading_key()]
    if lu < 0 or (lu == 0 and lv < 0):
        g = -g
    return g * MultiPoly.from_int(cg) if cg > 1 else g


class RatFunc:
    """num/den over MultiPoly.  Normalized by content and denominator sign only;
    equality is decided by cross-multiplication, so partial cancellation never
    changes semantics."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MP_ONE
        if den.is_zero():
            raise ZeroDivisionError("RatFunc with zero denominator")
        if num.is_zero():
            self.num = MP_ZERO
            self.den = MP_ONE
            return
        cn, cd = num.content(), den.content()
        g = gcd(cn, cd)
        if g > 1:
            num = num.divide_int(g)
            den = den.divide_int(g)
        lu, lv = den.terms[den.leading_key()]
        if lu < 0 or (lu == 0 and lv < 0):
            num = -num
            den = -den
        self.num = num
        self.den = den

    @staticmethod
    def from_int(n: int) -> "RatFunc":
        return RatFunc(MultiPoly.from_int(n))

    @staticmethod
    def from_poly(p: MultiPoly) -> "RatFunc":
        return RatFunc(p)

    @staticmethod
    def var(name: str) -> "RatFunc":
        return RatFunc(MultiPoly.var(name))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, o: "RatFunc") -> "RatFunc":
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o: "RatFunc") -> "RatFunc":
        if self.den == o.den:
            return RatFunc(self.num - o.num, self.den)
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __neg__(self) -> "RatFunc":
        r = RatFunc.__new__(RatFunc)
        r.num = -self.num
        r.den = self.den
        return r

    def __mul__(self, o: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * o.num, self.den * o.den)

    def __truediv__(self, o: "RatFunc") -> "RatFunc":
        if o.is_zero():
            raise ZeroDivisionError("RatFunc division by zero")
        return RatFunc(self.num * o.den, self.den * o.num)

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("RatFunc inverse of zero")
        return RatFunc(self.den, self.num)

    def __eq__(self, o: object) -> bool:
        if not isinstance(o, RatFunc):
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self) -> int:
        # hash-compatible with cross-multiplication equality only for
        # identically-normalized values; reduce() before hashing if needed
        r = self.reduce()
        return hash((r.num, r.den))

    def reduce(self) -> "RatFunc":
        """Optional full cancellation by a verified common polynomial divisor."""
        if self.num.is_zero() or self.den == MP_ONE:
            return self
        if len(self.den.terms) == 1:
            # monomial denominator: strip shared variable powers and content
            (dk, (du, dv)), = self.den.terms.items()
            if dv == 0:
                ks = self.num.terms.keys()
                s = tuple(min(min(k[i] for k in ks), dk[i]) for i in range(3))
                g = gcd(self.num.content(), abs(du))
                if s == (0, 0, 0) and g <= 1:
                    return self
                nt = {(k[0] - s[0], k[1] - s[1], k[2] - s[2]): (u // g, v // g)
                      for k, (u, v) in self.num.terms.items()}
                n = MultiPoly.__new__(MultiPoly)
                n.terms = nt
                d = MultiPoly.__new__(MultiPoly)
                d.terms = {(dk[0] - s[0], dk[1] - s[1], dk[2] - s[2]): (du // g, 0)}
                return RatFunc(n, d)
        g = poly_gcd(self.num, self.den)
        if g.total_degree() == 0 and g.content() in (0, 1):
            return self
        n = poly_divexact(self.num, g)
        d = poly_divexact(self.den, g)
        if n is None or d is None:
            return self
        return RatFunc(n, d)

    def specialize(self, a0, b0, c0) -> tuple[Fraction, Fraction]:
        du, dv = self.den.specialize(a0, b0, c0)
        if du == 0 and dv == 0:
            raise ZeroDivisionError(f"denominator vanishes at ({a0},{b0},{c0})")
        nu, nv = self.num.specialize(a0, b0, c0)
        # divide (nu + nv j) by (du + dv j): multiply by the conjugate du + dv j^2;
        # with j^2 = -1-j the product is (nu du - nu dv + nv dv) + (nv du - nu dv) j
        # over the norm du^2 - du dv + dv^2
        nrm = du * du - du * dv + dv * dv
        ru = nu * du - nu * dv + nv * dv
        rv = nv * du - nu * dv
        return (ru / nrm, rv / nrm)

    def render(self) -> str:
        if self.den == MP_ONE:
            return self.num.render()
        return f"({self.num.render()})/({self.den.render()})"

    def __repr__(self) -> str:
        return f"RatFunc({self.render()})"


RF_ZERO = RatFunc.from_int(0)
RF_ONE = RatFunc.from_int(1)
RF_A = RatFunc.var("a")
RF_B = RatFunc.var("b")
RF_C = RatFunc.var("c")


def rf_arith(kind: str, x: RatFunc, y: RatFunc | None = None) -> RatFunc:
    """Field operations on RatFunc: add, sub, mul, div, neg."""
    if kind == "add":
        return x + y
    if kind == "sub":
        return x - y
    if kind == "mul":
        return x * y
    if kind == "div":
        return x / y
    if kind == "neg":
        return -x
    raise ValueError(f"unknown RatFunc operation {kind!r}")


def rf_specialize(x: RatFunc, a0, b0, c0) -> tuple[Fraction, Fraction]:
    """Exact value of x at rational (a0, b0, c0) as a pair (u, v) meaning u + v*j."""
    return x.specialize(Fraction(a0), Fraction(b0), Fraction(c0))


def multipoly_at_minus1_t0_t1(p: MultiPoly) -> Optional[HalfLaurent]:
    """Substitute (a, b, c) -> (-1, t0, t1).  None when a j-part survives."""
    out: dict = {}
    for (e0, e1, e2), (u, v) in p.terms.items():
        if v != 0:
            return None
        c = u if e0 % 2 == 0 else -u
        k = (2 * e1, 2 * e2)
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return HalfLaurent(out)
