"""Exact scalar arithmetic over cyclotomic Laurent-polynomial fraction fields.

Every coefficient in this package is an element of the fraction field of
``Z[1/r][q, q^-1]`` extended by a primitive r-th root of unity; that is, a
quotient ``num/den`` of Laurent polynomials in ``q`` whose coefficients lie
in the cyclotomic field ``Q(zeta_r)``.  All arithmetic is exact.

Canonical forms
---------------
* ``CycloNum``: a vector of ``phi(r)`` rationals, the residue of a polynomial
  in ``zeta_r`` modulo the r-th cyclotomic polynomial.  Equality is
  coefficientwise (after embedding into a common field when conductors
  differ; conductors only ever grow, via ``zeta_r -> zeta_m^(m/r)``).
* ``LaurentPoly``: finitely supported map exponent -> CycloNum, no zero
  coefficients stored.
* ``Scalar``: reduced pair ``num/den`` where gcd(num, den) is a unit, the
  denominator is an honest polynomial with nonzero constant term, and is
  monic.  Two equal scalars have identical canonical forms.

>>> q = Scalar.q()
>>> (q - q.inv()) * (q + q.inv()) == q**2 - q.inv()**2
True
>>> Scalar.q().inv() == Scalar.q_power(-1)
True
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import PoleError

__all__ = [
    "CycloField",
    "CycloNum",
    "LaurentPoly",
    "Scalar",
    "Specialization",
    "cyclo_field",
    "scalar_to_json",
    "scalar_from_json",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# dense polynomial helpers over Fraction (internal; x = zeta placeholder)
# ---------------------------------------------------------------------------

def _ptrim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _ptrim(out)


def _pdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [_ZERO] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b):
        c = a[-1] * inv_lead
        d = len(a) - len(b)
        q[d] = c
        for i, bi in enumerate(b):
            a[d + i] -= c * bi
        _ptrim(a)
        if not a:
            break
    return _ptrim(q), a


def _pext_gcd(a: list[Fraction], b: list[Fraction]):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [_ONE], []
    t0, t1 = [], [_ONE]
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _ptrim([x - y for x, y in _zippad(s0, _pmul(q, s1))])
        t0, t1 = t1, _ptrim([x - y for x, y in _zippad(t0, _pmul(q, t1))])
    lead = r0[-1]
    if lead != 1:
        r0 = [c / lead for c in r0]
        s0 = [c / lead for c in s0]
        t0 = [c / lead for c in t0]
    return r0, s0, t0


def _zippad(a: list[Fraction], b: list[Fraction]):
    n = max(len(a), len(b))
    a = a + [_ZERO] * (n - len(a))
    b = b + [_ZERO] * (n - len(b))
    return zip(a, b)


@lru_cache(maxsize=None)
def _cyclotomic_poly(r: int) -> tuple[Fraction, ...]:
    """Coefficients of the r-th cyclotomic polynomial, low degree first."""
    if r == 1:
        return (Fraction(-1), Fraction(1))
    num = [_ZERO] * r + [_ONE]
    num[0] = Fraction(-1)  # x^r - 1
    den = [_ONE]
    for d in range(1, r):
        if r % d == 0:
            den = _pmul(den, list(_cyclotomic_poly(d)))
    quo, rem = _pdivmod(num, den)
    assert not rem
    return tuple(quo)


# ---------------------------------------------------------------------------
# cyclotomic fields and their elements
# ---------------------------------------------------------------------------

class CycloField:
    """The field Q(zeta_r), elements reduced modulo the r-th cyclotomic
    polynomial.  Obtain instances through :func:`cyclo_field` (cached)."""

    __slots__ = ("r", "phi", "minpoly", "_red", "zero", "one")

    def __init__(self, r: int):
        if r < 1:
            raise ValueError(f"conductor must be >= 1, got {r}")
        self.r = r
        mp = _cyclotomic_poly(r)
        self.phi = len(mp) - 1
        self.minpoly = mp
        # reduction table: x^k as a vector of length phi, for k = 0..2*phi-2
        red = []
        cur = [_ZERO] * self.phi
        for k in range(max(1, 2 * self.phi - 1)):
            if k < self.phi:
                vec = [_ZERO] * self.phi
                vec[k] = _ONE
            else:
                prev = red[k - 1]
                vec = [_ZERO] + list(prev[: self.phi - 1])
                top = prev[self.phi - 1]
                if top:
                    for i in range(self.phi):
                        vec[i] -= top * mp[i]
            red.append(tuple(vec))
        self._red = red
        del cur
        self.zero = CycloNum(self, (_ZERO,) * self.phi)
        self.one = CycloNum(self, ((_ONE,) + (_ZERO,) * (self.phi - 1)))

    def num(self, coeffs) -> CycloNum:
        vec = [Fraction(c) for c in coeffs]
        if len(vec) > self.phi:
            out = [_ZERO] * self.phi
            for k, c in enumerate(vec):
                if c:
                    for i, rc in enumerate(self._reduce_power(k)):
                        out[i] += c * rc
            vec = out
        else:
            vec = vec + [_ZERO] * (self.phi - len(vec))
        return CycloNum(self, tuple(vec))

    def _reduce_power(self, k: int) -> tuple[Fraction, ...]:
        # x^k mod minpoly for arbitrary k >= 0
        while k >= len(self._red):
            prev = self._red[-1]
            vec = [_ZERO] + list(prev[: self.phi - 1])
            top = prev[self.phi - 1]
            if top:
                for i in range(self.phi):
                    vec[i] -= top * self.minpoly[i]
            self._red.append(tuple(vec))
        return self._red[k]

    def zeta(self, power: int = 1) -> CycloNum:
        """zeta_r^power as a field element."""
        power %= self.r
        out = [_ZERO] * self.phi
        for i, c in enumerate(self._reduce_power(power)):
            out[i] = c
        return CycloNum(self, tuple(out))

    def from_rational(self, a) -> CycloNum:
        vec = [_ZERO] * self.phi
        vec[0] = Fraction(a)
        return CycloNum(self, tuple(vec))

    def __repr__(self):
        return f"CycloField(r={self.r})"


@lru_cache(maxsize=None)
def cyclo_field(r: int) -> CycloField:
    return CycloField(r)


def _common_field(a: "CycloNum", b: "CycloNum") -> tuple["CycloNum", "CycloNum"]:
    if a.field is b.field:
        return a, b
    m = math.lcm(a.field.r, b.field.r)
    return a.embed(m), b.embed(m)


class CycloNum:
    """An element of Q(zeta_r): a length-phi(r) rational vector."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycloField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def embed(self, m: int) -> "CycloNum":
        """Image in Q(zeta_m) under zeta_r -> zeta_m^(m/r); requires r | m."""
        r = self.field.r
        if m == r:
            return self
        if m % r:
            raise ValueError(f"no embedding Q(zeta_{r}) -> Q(zeta_{m})")
        tgt = cyclo_field(m)
        step = m // r
        out = [_ZERO] * tgt.phi
        for k, c in enumerate(self.coeffs):
            if c:
                for i, rc in enumerate(tgt._reduce_power((step * k) % max(m, 1))):
                    out[i] += c * rc
        return CycloNum(tgt, tuple(out))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        a, b = _common_field(self, other)
        return CycloNum(a.field, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        a, b = _common_field(self, other)
        return CycloNum(a.field, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 1:
                return self
            return CycloNum(self.field, tuple(c * other for c in self.coeffs))
        a, b = _common_field(self, other)
        fld = a.field
        phi = fld.phi
        out = [_ZERO] * phi
        ac, bc = a.coeffs, b.coeffs
        for i, ai in enumerate(ac):
            if ai:
                for j, bj in enumerate(bc):
                    if bj:
                        k = i + j
                        if k < phi:
                            out[k] += ai * bj
                        else:
                            c = ai * bj
                            for t, rc in enumerate(fld._red[k]):
                                if rc:
                                    out[t] += c * rc
        return CycloNum(fld, tuple(out))

    __rmul__ = __mul__

    def inv(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        p = _ptrim(list(self.coeffs))
        g, s, _t = _pext_gcd(p, list(self.field.minpoly))
        assert len(g) == 1, "element not invertible modulo the minimal polynomial"
        inv_g = 1 / g[0]
        return self.field.num([c * inv_g for c in s])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.field, tuple(c / other for c in self.coeffs))
        return self * other.inv()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycloNum):
            return NotImplemented
        a, b = _common_field(self, other)
        return a.coeffs == b.coeffs

    __hash__ = None  # mutable-free but conductor-coercing equality; do not key on these

    def __repr__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                if k == 0:
                    parts.append(str(c))
                else:
                    parts.append(f"{c}*z{self.field.r}^{k}" if k > 1 else f"{c}*z{self.field.r}")
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Laurent polynomials in q over a cyclotomic field
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Finitely supported map exponent -> CycloNum; no zero coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs: dict[int, CycloNum]):
        self.c = coeffs

    @staticmethod
    def make(coeffs: dict[int, CycloNum]) -> "LaurentPoly":
        return LaurentPoly({e: v for e, v in coeffs.items() if not v.is_zero()})

    @staticmethod
    def constant(v: CycloNum) -> "LaurentPoly":
        return LaurentPoly({} if v.is_zero() else {0: v})

    @staticmethod
    def q_power(m: int, r: int = 1) -> "LaurentPoly":
        return LaurentPoly({m: cyclo_field(r).one})

    def is_zero(self) -> bool:
        return not self.c

    def min_exp(self) -> int:
        return min(self.c)

    def max_exp(self) -> int:
        return max(self.c)

    def shift(self, d: int) -> "LaurentPoly":
        if d == 0 or not self.c:
            return self
        return LaurentPoly({e + d: v for e, v in self.c.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.c:
            return other
        if not other.c:
            return self
        out = dict(self.c)
        for e, v in other.c.items():
            cur = out.get(e)
            if cur is None:
                out[e] = v
            else:
                s = cur + v
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -v for e, v in self.c.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.c or not other.c:
            return LaurentPoly({})
        if len(self.c) == 1:
            (e1, v1), = self.c.items()
            out = {}
            for e2, v2 in other.c.items():
                p = v1 * v2
                if not p.is_zero():
                    out[e1 + e2] = p
            return LaurentPoly(out)
        out: dict[int, CycloNum] = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                p = v1 * v2
                cur = out.get(e)
                s = p if cur is None else cur + p
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentPoly(out)

    def scale(self, v: CycloNum) -> "LaurentPoly":
        if v.is_zero():
            return LaurentPoly({})
        return LaurentPoly.make({e: w * v for e, w in self.c.items()})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if set(self.c) != set(other.c):
            return False
        return all(self.c[e] == other.c[e] for e in self.c)

    __hash__ = None

    def evaluate(self, value: CycloNum, value_inv: CycloNum | None = None) -> CycloNum:
        """Evaluate at q = value (value must be invertible if negative
        exponents occur)."""
        fld = value.field
        acc = fld.zero
        if not self.c:
            return acc
        if value_inv is None and self.min_exp() < 0:
            value_inv = value.inv()
        pow_cache: dict[int, CycloNum] = {0: fld.one, 1: value}
        if value_inv is not None:
            pow_cache[-1] = value_inv

        def power(m: int) -> CycloNum:
            if m in pow_cache:
                return pow_cache[m]
            if m > 0:
                res = power(m - 1) * value
            else:
                res = power(m + 1) * pow_cache[-1]
            pow_cache[m] = res
            return res

        for e, v in self.c.items():
            acc = acc + v * power(e)
        return acc

    def __repr__(self):
        if not self.c:
            return "0"
        return " + ".join(f"({v})*q^{e}" for e, v in sorted(self.c.items()))


def _lp_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Polynomial divmod; both arguments must have min_exp >= 0."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    rem = dict(a.c)
    quo: dict[int, CycloNum] = {}
    db = b.max_exp()
    lead_inv = b.c[db].inv()
    while rem:
        da = max(rem)
        if da < db:
            break
        f = rem[da] * lead_inv
        quo[da - db] = f
        for e, v in b.c.items():
            t = e + da - db
            cur = rem.get(t)
            s = (-(v * f)) if cur is None else cur - v * f
            if s.is_zero():
                rem.pop(t, None)
            else:
                rem[t] = s
    return LaurentPoly(quo), LaurentPoly(rem)


def _lp_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of two honest polynomials (min_exp >= 0)."""
    while not b.is_zero():
        a, b = b, _lp_divmod(a, b)[1]
    if a.is_zero():
        return a
    lead = a.c[a.max_exp()]
    if lead == 1:
        return a
    return a.scale(lead.inv())


# ---------------------------------------------------------------------------
# the fraction field
# ---------------------------------------------------------------------------

class Scalar:
    """A reduced quotient of Laurent polynomials in q over Q(zeta_r).

    Construction always reduces to canonical form: gcd(num, den) a unit,
    denominator an honest monic polynomial with nonzero constant term (any
    power of q is carried by the numerator).  Structural equality of
    canonical forms decides equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly, _reduced: bool = False):
        if _reduced:
            self.num = num
            self.den = den
            return
        s = Scalar._make(num, den)
        self.num = s.num
        self.den = s.den

    @staticmethod
    def _make(num: LaurentPoly, den: LaurentPoly) -> "Scalar":
        if den.is_zero():
            raise ZeroDivisionError("scalar with zero denominator")
        if num.is_zero():
            return Scalar(LaurentPoly({}), _LP_ONE, _reduced=True)
        if len(den.c) == 1:
            # monomial denominator: fold into the numerator
            (e, v), = den.c.items()
            num = num.shift(-e).scale(v.inv())
            return Scalar(num, _LP_ONE, _reduced=True)
        v1 = num.min_exp()
        v2 = den.min_exp()
        p1 = num.shift(-v1)
        p2 = den.shift(-v2)
        g = _lp_gcd(p1, p2)
        if g.max_exp() > 0:
            p1 = _lp_divmod(p1, g)[0]
            p2 = _lp_divmod(p2, g)[0]
        lead = p2.c[p2.max_exp()]
        if not (lead == 1):
            li = lead.inv()
            p1 = p1.scale(li)
            p2 = p2.scale(li)
        if len(p2.c) == 1 and 0 in p2.c:
            return Scalar(p1.shift(v1 - v2), _LP_ONE, _reduced=True)
        return Scalar(p1.shift(v1 - v2), p2, _reduced=True)

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero() -> "Scalar":
        return _S_ZERO

    @staticmethod
    def one() -> "Scalar":
        return _S_ONE

    @staticmethod
    def q(r: int = 1) -> "Scalar":
        return Scalar(LaurentPoly.q_power(1, r), _LP_ONE, _reduced=True)

    @staticmethod
    def q_power(m: int, r: int = 1) -> "Scalar":
        return Scalar(LaurentPoly.q_power(m, r), _LP_ONE, _reduced=True)

    @staticmethod
    def of(a) -> "Scalar":
        """Scalar from an int, Fraction or CycloNum."""
        if isinstance(a, Scalar):
            return a
        if isinstance(a, CycloNum):
            return Scalar(LaurentPoly.constant(a), _LP_ONE, _reduced=True)
        v = Fraction(a)
        if v == 0:
            return _S_ZERO
        return Scalar(LaurentPoly.constant(cyclo_field(1).from_rational(v)), _LP_ONE, _reduced=True)

    @staticmethod
    def zeta(r: int, power: int = 1) -> "Scalar":
        return Scalar.of(cyclo_field(r).zeta(power))

    @staticmethod
    def laurent(coeffs: dict[int, object], r: int = 1) -> "Scalar":
        """Scalar from {exponent: rational-or-CycloNum} data."""
        fld = cyclo_field(r)
        out = {}
        for e, v in coeffs.items():
            cv = v if isinstance(v, CycloNum) else fld.from_rational(Fraction(v))
            if not cv.is_zero():
                out[e] = cv
        return Scalar(LaurentPoly(out), _LP_ONE, _reduced=True)

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return len(self.num.c) == 1 and 0 in self.num.c and self.num.c[0] == 1 \
            and len(self.den.c) == 1

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Scalar):
            other = Scalar.of(other)
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        d1, d2 = self.den, other.den
        if len(d1.c) == 1 and len(d2.c) == 1:
            # canonical monomial denominators are exactly 1
            return Scalar._fast_over_one(self.num + other.num, _LP_ONE)
        if d1 == d2:
            return Scalar._make(self.num + other.num, d1)
        return Scalar._make(self.num * d2 + other.num * d1, d1 * d2)

    @staticmethod
    def _fast_over_one(num: LaurentPoly, den: LaurentPoly) -> "Scalar":
        if num.is_zero():
            return _S_ZERO
        return Scalar(num, den, _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            other = Scalar.of(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            other = Scalar.of(other)
        if self.num.is_zero() or other.num.is_zero():
            return _S_ZERO
        if len(self.den.c) == 1 and len(other.den.c) == 1:
            return Scalar(self.num * other.num, _LP_ONE, _reduced=True)
        return Scalar._make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar._make(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            other = Scalar.of(other)
        return self * other.inv()

    def __pow__(self, m: int):
        if m == 0:
            return _S_ONE
        base = self if m > 0 else self.inv()
        out = base
        for _ in range(abs(m) - 1):
            out = out * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.of(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None

    def __repr__(self):
        if self.den == _LP_ONE:
            return f"({self.num})"
        return f"({self.num})/({self.den})"


_LP_ONE = LaurentPoly({0: cyclo_field(1).one})
_S_ZERO = Scalar(LaurentPoly({}), _LP_ONE, _reduced=True)
_S_ONE = Scalar(LaurentPoly({0: cyclo_field(1).one}), _LP_ONE, _reduced=True)


# ---------------------------------------------------------------------------
# specialization of q
# ---------------------------------------------------------------------------

class Specialization:
    """Either the generic point (q transcendental) or q = a primitive e-th
    root of unity, evaluated inside Q(zeta_m) with m = lcm(r, e)."""

    __slots__ = ("mode", "r", "e", "m", "_qval", "_qinv")

    def __init__(self, mode: str, r: int = 1, e: int | None = None):
        if mode not in ("generic", "root-of-unity"):
            raise ValueError(f"unknown specialization mode {mode!r}")
        self.mode = mode
        self.r = r
        self.e = e
        if mode == "root-of-unity":
            if e is None or e < 1:
                raise ValueError("root-of-unity mode needs a positive order e")
            self.m = math.lcm(r, e)
            fld = cyclo_field(self.m)
            self._qval = fld.zeta(self.m // e)
            self._qinv = fld.zeta(-(self.m // e))
        else:
            self.m = None
            self._qval = None
            self._qinv = None

    @staticmethod
    def generic(r: int = 1) -> "Specialization":
        return Specialization("generic", r)

    @staticmethod
    def root_of_unity(e: int, r: int = 1) -> "Specialization":
        return Specialization("root-of-unity", r, e)

    def is_generic(self) -> bool:
        return self.mode == "generic"

    def apply(self, a: Scalar):
        """Image of a scalar: the scalar itself at the generic point, the
        exact value in Q(zeta_m) at a root of unity.  Raises PoleError when
        the denominator vanishes there."""
        if self.mode == "generic":
            return a
        den = a.den.evaluate(self._qval, self._qinv)
        if den.is_zero():
            raise PoleError(
                f"pole at q = primitive {self.e}-th root of unity")
        num = a.num.evaluate(self._qval, self._qinv)
        return num / den


def specialize(a: Scalar, s: Specialization):
    """Functional form of :meth:`Specialization.apply`."""
    return s.apply(a)


# ---------------------------------------------------------------------------
# JSON round trip
# ---------------------------------------------------------------------------

def _cyclo_to_json(v: CycloNum, r: int) -> list[str]:
    emb = v.embed(r) if v.field.r != r else v
    return [f"{c.numerator}/{c.denominator}" for c in emb.coeffs]


def _cyclo_from_json(data: list[str], r: int) -> CycloNum:
    return cyclo_field(r).num([Fraction(s) for s in data])


def _lp_to_json(p: LaurentPoly, r: int) -> list:
    return [[e, _cyclo_to_json(p.c[e], r)] for e in sorted(p.c)]


def _lp_from_json(data: list, r: int) -> LaurentPoly:
    return LaurentPoly.make({int(e): _cyclo_from_json(v, r) for e, v in data})


def scalar_to_json(a: Scalar, r: int = 1) -> dict:
    """JSON form {num: [[exp, [coeffs]]...], den: ...}; coefficient vectors
    are length phi(r) lists of exact "p/q" strings."""
    return {"num": _lp_to_json(a.num, r), "den": _lp_to_json(a.den, r)}


def scalar_from_json(data: dict, r: int = 1) -> Scalar:
    return Scalar(_lp_from_json(data["num"], r), _lp_from_json(data["den"], r))
