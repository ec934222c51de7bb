"""Free noncommutative algebra over the loop-generator alphabet.

Words are tuples of GeneratorSymbol; an Expression is a finite linear
combination of words with Scalar coefficients.  Multiplication concatenates
words bilinearly.  Canonical form merges identical words and drops zeros;
word *ordering* is the rewrite module's job.
"""

from __future__ import annotations

import functools
from typing import NamedTuple, Optional

from .scalars import Scalar

KINDS = ("x+", "x-", "h", "k", "kinv", "C", "Cinv")
_KIND_ORDER = {k: i for i, k in enumerate(KINDS)}


class GeneratorSymbol(NamedTuple):
    kind: str
    node: Optional[int] = None
    degree: Optional[int] = None

    def sort_key(self):
        return (_KIND_ORDER[self.kind],
                -1 if self.node is None else self.node,
                0 if self.degree is None else self.degree)

    def __str__(self):
        if self.kind in ("x+", "x-", "h"):
            return "%s(%d,%d)" % (self.kind, self.node, self.degree)
        if self.kind == "k":
            return "k(%d)" % self.node
        if self.kind == "kinv":
            return "k(%d)^-1" % self.node
        return "C" if self.kind == "C" else "C^-1"


def gen(kind, node=None, degree=None):
    if kind not in _KIND_ORDER:
        raise ValueError("unknown generator kind %r" % kind)
    if kind == "h" and degree == 0:
        raise ValueError("h generators carry nonzero degree")
    if kind in ("k", "kinv") and node is None:
        raise ValueError("k generators carry a node")
    if kind in ("C", "Cinv"):
        node = degree = None
    if kind in ("k", "kinv"):
        degree = None
    return GeneratorSymbol(kind, node, degree)


def xp(i, m=0):
    return gen("x+", i, m)


def xm(i, m=0):
    return gen("x-", i, m)


def hh(i, r):
    return gen("h", i, r)


def kk(i):
    return gen("k", i)


def kinv(i):
    return gen("kinv", i)


C = gen("C")
Cinv = gen("Cinv")

_INVERSE_KIND = {"k": "kinv", "kinv": "k", "C": "Cinv", "Cinv": "C"}


def symbol_inverse(g):
    if g.kind not in _INVERSE_KIND:
        raise ValueError("generator %s is not invertible" % (g,))
    return GeneratorSymbol(_INVERSE_KIND[g.kind], g.node, g.degree)


def word_sort_key(word):
    return (len(word), tuple(s.sort_key() for s in word))


class Expression:
    """Finite map word -> Scalar; immutable in practice."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, c in terms.items():
                if not isinstance(c, Scalar):
                    c = Scalar(c)
                if c.is_zero():
                    continue
                prev = clean.get(w)
                if prev is None:
                    clean[w] = c
                else:
                    s = prev + c
                    if s.is_zero():
                        del clean[w]
                    else:
                        clean[w] = s
        self.terms = clean

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero():
        return Expression()

    @staticmethod
    def one():
        return Expression({(): Scalar(1)})

    @staticmethod
    def from_scalar(c):
        return Expression({(): c if isinstance(c, Scalar) else Scalar(c)})

    @staticmethod
    def from_symbol(g, coeff=1):
        return Expression({(g,): Scalar(coeff) if isinstance(coeff, int)
                           else coeff})

    @staticmethod
    def from_word(word, coeff=1):
        return Expression({tuple(word): Scalar(coeff)
                           if isinstance(coeff, int) else coeff})

    # -- predicates -----------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_scalar(self):
        return all(w == () for w in self.terms)

    def scalar_value(self):
        if self.is_zero():
            return Scalar(0)
        if not self.is_scalar():
            raise ValueError("expression is not a scalar")
        return self.terms[()]

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = _coerce_expr(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            prev = out.get(w)
            if prev is None:
                out[w] = c
            else:
                s = prev + c
                if s.is_zero():
                    del out[w]
                else:
                    out[w] = s
        e = object.__new__(Expression)
        e.terms = out
        return e

    __radd__ = __add__

    def __neg__(self):
        e = object.__new__(Expression)
        e.terms = {w: -c for w, c in self.terms.items()}
        return e

    def __sub__(self, other):
        other = _coerce_expr(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_expr(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            c0 = other if isinstance(other, Scalar) else Scalar(other)
            if c0.is_zero():
                return Expression()
            e = object.__new__(Expression)
            e.terms = {w: c * c0 for w, c in self.terms.items()}
            return e
        other = _coerce_expr(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                prev = out.get(w)
                if prev is None:
                    out[w] = c
                else:
                    s = prev + c
                    if s.is_zero():
                        del out[w]
                    else:
                        out[w] = s
        e = object.__new__(Expression)
        e.terms = out
        return e

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self * other
        other = _coerce_expr(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Scalar(other)
        if isinstance(other, Scalar):
            return self * other.inverse()
        other = _coerce_expr(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.scalar_value().inverse()

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative powers only via explicit inverses")
        out = Expression.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        other = _coerce_expr(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_scalars(self, f):
        return Expression({w: f(c) for w, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda wc: word_sort_key(wc[0]))

    def __repr__(self):
        from .parsing import print_expression
        return print_expression(self)


def _coerce_expr(x):
    if isinstance(x, Expression):
        return x
    if isinstance(x, (int, Scalar)):
        return Expression.from_scalar(x)
    if isinstance(x, GeneratorSymbol):
        return Expression.from_symbol(x)
    return NotImplemented


# ---------------------------------------------------------------------------
# q-combinatorics.  q_i = v^e where e is a positive integer exponent; the
# caller computes e = m * d_i from CartanData.
# ---------------------------------------------------------------------------

def q_exponent(data, i):
    """Integer e with q_i = v^e, where v = q^{1/m}."""
    e = data.m * data.d[i]
    if e.denominator != 1:
        raise AssertionError("q_i is not an integer power of v")
    return int(e)


def qint(s, e=1):
    """[s] at q_i = v^e: (q_i^s - q_i^{-s})/(q_i - q_i^{-1}).  Supports
    negative s via [-s] = -[s]."""
    if s < 0:
        return -qint(-s, e)
    out = Scalar(0)
    for t in range(s):
        out = out + Scalar.v_power(e * (s - 1 - 2 * t))
    return out


@functools.lru_cache(maxsize=None)
def qfact(s, e=1):
    if s < 0:
        raise ValueError("negative factorial")
    out = Scalar(1)
    for t in range(2, s + 1):
        out = out * qint(t, e)
    return out


@functools.lru_cache(maxsize=None)
def qbinom(s, r, e=1):
    if not 0 <= r <= s:
        raise ValueError("qbinom needs 0 <= r <= s")
    return qfact(s, e) / (qfact(r, e) * qfact(s - r, e))


def qnum(data, i, s):
    """[s]_i for a node of a Cartan datum."""
    return qint(s, q_exponent(data, i))


# ---------------------------------------------------------------------------
# Brackets and divided powers
# ---------------------------------------------------------------------------

def bracket(a, b, u=None):
    """[a, b]_u = a b - u b a (u defaults to 1: plain commutator)."""
    a = _coerce_expr(a)
    b = _coerce_expr(b)
    if u is None:
        u = Scalar(1)
    elif isinstance(u, int):
        u = Scalar(u)
    return a * b - (b * a) * u


def twisted_commutator(operands, weights):
    """[b_1, ..., b_s]_{u_1 ... u_{s-1}} built by the inductive rule
    [b_1,...,b_s]_{u_1...u_{s-1}} = [b_1, [b_2,...,b_s]_{u_1...u_{s-2}}]_{u_{s-1}}."""
    operands = [_coerce_expr(b) for b in operands]
    if len(operands) < 2:
        raise ValueError("need at least two operands")
    if len(weights) != len(operands) - 1:
        raise ValueError("need exactly len(operands)-1 weights")
    inner = operands[-1]
    for idx in range(len(operands) - 2, -1, -1):
        # innermost bracket takes u_1; the outermost takes u_{s-1}
        u = weights[len(operands) - 2 - idx]
        inner = bracket(operands[idx], inner, u)
    return inner


def divided_power(g, s, e=1):
    """g^{(s)} = g^s / [s]! at q_i = v^e, for a single generator g."""
    if s < 0:
        raise ValueError("negative divided power")
    if s == 0:
        return Expression.one()
    word = (g,) * s
    return Expression.from_word(word, qfact(s, e).inverse())
