"""Exact scalar arithmetic in the field Q(v) of rational functions.

Scalars are Laurent rational functions in a single variable ``v``: a reduced
fraction of integer-coefficient polynomials together with an integer power
shift, so negative powers of ``v`` need no special casing.  All arithmetic is
exact; there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _trim(coeffs):
    """Drop trailing zero coefficients (highest degrees)."""
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


def _poly_add(a, b):
    n = max(len(a), len(b))
    return _trim([
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
        for i in range(n)
    ])


def _poly_neg(a):
    return [-c for c in a]


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _trim(out)


def _poly_content(a):
    g = 0
    for c in a:
        g = gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def _poly_divmod_exact(a, b):
    """Divide polynomial a by b over Q, returning (quotient, remainder).

    A unit lead coefficient keeps the division in the input coefficient
    ring, so the common monic case avoids Fraction arithmetic."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    unit_lead = b[-1] in (1, -1)
    if unit_lead:
        a = list(a)
        b = list(b)
    else:
        a = [Fraction(c) for c in a]
        b = [Fraction(c) for c in b]
    lead = b[-1]
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        a = _trim(a)
        if len(a) < len(b):
            break
        coef = a[-1] * lead if unit_lead else a[-1] / lead
        deg = len(a) - len(b)
        q[deg] = coef
        for i, bc in enumerate(b):
            a[deg + i] -= coef * bc
        a = _trim(a)
    return _trim(q), _trim(a)


def _poly_pseudo_rem(a, b):
    """Pseudo-remainder of integer polynomials: rem of lead(b)^k * a by b."""
    r = list(a)
    d = len(b)
    lead = b[-1]
    while len(r) >= d:
        coef = r[-1]
        deg = len(r) - d
        r = [c * lead for c in r]
        for i, bc in enumerate(b):
            r[deg + i] -= coef * bc
        r = _trim(r)
    return r


def _poly_primitive(a):
    cont = _poly_content(a)
    if cont > 1:
        a = [c // cont for c in a]
    return a


def _poly_gcd(a, b):
    """gcd of integer polynomials, returned with content 1 and positive lead.

    Primitive pseudo-remainder sequence: stays in integer arithmetic.
    """
    a = _poly_primitive(_trim(list(a)))
    b = _poly_primitive(_trim(list(b)))
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            # nonzero constant: primitive gcd is 1
            a = [1]
            break
        r = _poly_pseudo_rem(a, b)
        if r:
            r = _poly_primitive(r)
        a, b = b, r
    if not a:
        return []
    if a[-1] < 0:
        a = _poly_neg(a)
    return a


class Scalar:
    """An element of Q(v), stored as v^shift * num(v) / den(v), reduced.

    Invariants: gcd(num, den) = 1, den has positive leading coefficient,
    neither num nor den is divisible by v (the v-valuation lives in shift),
    and the zero scalar is canonically (num=[], den=[1], shift=0).
    """

    __slots__ = ("num", "den", "shift")

    def __init__(self, num, den=None, shift=0):
        if isinstance(num, int):
            num = [num]
        if den is None:
            den = [1]
        elif isinstance(den, int):
            den = [den]
        num = _trim(list(num))
        den = _trim(list(den))
        if not den:
            raise ZeroDivisionError("scalar with zero denominator")
        if not num:
            self.num, self.den, self.shift = (), (1,), 0
            return
        # move powers of v out of num and den into shift
        nz = next(i for i, c in enumerate(num) if c != 0)
        dz = next(i for i, c in enumerate(den) if c != 0)
        if nz:
            num = num[nz:]
            shift += nz
        if dz:
            den = den[dz:]
            shift -= dz
        if len(num) > 1 and len(den) > 1:
            g = _poly_gcd(num, den)
            if len(g) > 1:
                num, _ = _poly_divmod_exact(num, g)
                den, _ = _poly_divmod_exact(den, g)
                num = [int(c) for c in num]
                den = [int(c) for c in den]
        cn = _poly_content(num)
        cd = _poly_content(den)
        g = gcd(cn, cd)
        if g > 1:
            num = [c // g for c in num]
            den = [c // g for c in den]
        if den[-1] < 0:
            num = _poly_neg(num)
            den = _poly_neg(den)
        self.num = tuple(num)
        self.den = tuple(den)
        self.shift = shift

    # -- constructors -----------------------------------------------------
    @staticmethod
    def zero():
        return Scalar(0)

    @staticmethod
    def one():
        return Scalar(1)

    @staticmethod
    def v_power(e):
        """v^e."""
        return Scalar(1, 1, e)

    @staticmethod
    def from_fraction(fr):
        fr = Fraction(fr)
        return Scalar(fr.numerator, fr.denominator)

    # -- predicates --------------------------------------------------------
    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == (1,) and self.den == (1,) and self.shift == 0

    # -- arithmetic ---------------------------------------------------------
    def _as_pair(self):
        """Return (num, den) with shift folded in as polynomial factors."""
        num, den, s = list(self.num), list(self.den), self.shift
        if s > 0:
            num = [0] * s + num
        elif s < 0:
            den = [0] * (-s) + den
        return num, den

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        s = min(self.shift, other.shift)
        a = [0] * (self.shift - s) + list(self.num)
        b = [0] * (other.shift - s) + list(other.num)
        num = _poly_add(_poly_mul(a, list(other.den)),
                        _poly_mul(b, list(self.den)))
        den = _poly_mul(list(self.den), list(other.den))
        return Scalar(num, den, s)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(Scalar)
        out.num = tuple(-c for c in self.num)
        out.den = self.den
        out.shift = self.shift
        return out

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Scalar(0)
        return Scalar(_poly_mul(list(self.num), list(other.num)),
                      _poly_mul(list(self.den), list(other.den)),
                      self.shift + other.shift)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar(list(self.den), list(self.num), -self.shift)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e):
        if e == 0:
            return Scalar(1)
        base = self if e > 0 else self.inverse()
        out = Scalar(1)
        for _ in range(abs(e)):
            out = out * base
        return out

    # -- structure ----------------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.num == other.num and self.den == other.den
                and (self.shift == other.shift or self.is_zero()))

    def __hash__(self):
        if self.is_zero():
            return hash((0,))
        return hash((self.num, self.den, self.shift))

    def substitute_v_power(self, k):
        """The image under v -> v^k (k a nonzero integer).

        For k = -1 this is the bar involution; general k reindexes exponents.
        """
        if k == 0:
            raise ValueError("substitution exponent must be nonzero")

        def expand(coeffs, shift):
            terms = {}
            for i, c in enumerate(coeffs):
                if c:
                    terms[(i + shift) * k] = c
            return terms

        def to_scalar(terms):
            if not terms:
                return Scalar(0)
            lo = min(terms)
            coeffs = [0] * (max(terms) - lo + 1)
            for e, c in terms.items():
                coeffs[e - lo] = c
            return Scalar(coeffs, 1, lo)

        num = to_scalar(expand(self.num, self.shift))
        den = to_scalar(expand(self.den, 0))
        return num / den

    def evaluate(self, v_value):
        """Evaluate at an exact rational v_value (Fraction). Exact."""
        v_value = Fraction(v_value)
        num = sum(Fraction(c) * v_value ** i for i, c in enumerate(self.num))
        den = sum(Fraction(c) * v_value ** i for i, c in enumerate(self.den))
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at this value")
        return num / den * v_value ** self.shift

    # -- printing -------------------------------------------------------------
    def _poly_str(self, coeffs, shift):
        parts = []
        for i, c in enumerate(coeffs):
            if c == 0:
                continue
            e = i + shift
            if e == 0:
                parts.append(str(c))
            else:
                vp = "v" if e == 1 else "v^%d" % e
                if c == 1:
                    parts.append(vp)
                elif c == -1:
                    parts.append("-" + vp)
                else:
                    parts.append("%d*%s" % (c, vp))
        out = parts[0]
        for p in parts[1:]:
            out += ("+" + p) if not p.startswith("-") else p
        return out

    def __str__(self):
        if self.is_zero():
            return "0"
        num = self._poly_str(self.num, self.shift)
        if self.den == (1,):
            return num
        den = self._poly_str(self.den, 0)
        if len(self.num) > 1 or self.num[0] < 0:
            num = "(%s)" % num
        if len(self.den) > 1:
            den = "(%s)" % den
        return "%s/%s" % (num, den)

    def __repr__(self):
        return "Scalar(%s)" % self


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar(x)
    if isinstance(x, Fraction):
        return Scalar.from_fraction(x)
    return NotImplemented
