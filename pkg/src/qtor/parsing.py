"""Text grammar for expressions.

    expr   := term (('+'|'-') term)*
    term   := ['-'] factor (['*'|'/'] factor)*
    factor := atom ['^' int]
    atom   := 'x+' '(' int ',' int ')' | 'x-' '(' int ',' int ')'
            | 'h' '(' int ',' int ')' | 'k' '(' int ')' | 'C'
            | '(' expr ')' | integer | 'q' | 'v'
            | 'qi' '(' int ',' node ')' | 'qf' '(' int ',' node ')'
            | 'qb' '(' int ',' int ',' node ')'

Whitespace insensitive.  'q' means v^m (m = 1 without Cartan context).
Negative exponents are legal on k(i), C, scalars and invertible words.
Canonical printing sorts terms by word length, then symbol order.
"""

from __future__ import annotations

import re

from .algebra import (Expression, GeneratorSymbol, gen, q_exponent, qbinom,
                      qfact, qint, symbol_inverse, word_sort_key)
from .scalars import Scalar


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


_TOKEN_RE = re.compile(r"""
    (?P<xgen>x[+-](?=\())
  | (?P<name>[A-Za-z]+)
  | (?P<num>\d+)
  | (?P<op>[-+*/^(),])
  | (?P<ws>\s+)
""", re.VERBOSE)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError("unexpected character %r" % text[pos], pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens, data):
        self.tokens = tokens
        self.i = 0
        self.data = data

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text):
        kind, val, pos = self.next()
        if val != text:
            raise ParseError("expected %r, found %r" % (text, val), pos)

    def parse_int(self):
        kind, val, pos = self.next()
        neg = False
        if val == "-":
            neg = True
            kind, val, pos = self.next()
        if kind != "num":
            raise ParseError("expected integer, found %r" % val, pos)
        return -int(val) if neg else int(val)

    def _q_exp(self, node, pos):
        if self.data is None:
            raise ParseError("node-indexed coefficient needs a Cartan type",
                             pos)
        if not 0 <= node <= self.data.n:
            raise ParseError("unknown node index %d" % node, pos)
        return q_exponent(self.data, node)

    def parse_expr(self):
        out = self.parse_term()
        while self.peek()[1] in ("+", "-"):
            op = self.next()[1]
            t = self.parse_term()
            out = out + t if op == "+" else out - t
        return out

    def parse_term(self):
        negate = False
        while self.peek()[1] == "-":
            self.next()
            negate = not negate
        out = self.parse_factor()
        while True:
            kind, val, pos = self.peek()
            if val in ("*", "/"):
                self.next()
                rhs = self.parse_factor()
                if val == "*":
                    out = out * rhs
                else:
                    out = out / rhs
            elif kind in ("xgen", "name", "num") or val == "(":
                out = out * self.parse_factor()
            else:
                break
        return -out if negate else out

    def parse_factor(self):
        atom = self.parse_atom()
        if self.peek()[1] == "^":
            self.next()
            e = self.parse_int()
            return _power(atom, e, self.peek()[2])
        return atom

    def parse_atom(self):
        kind, val, pos = self.next()
        if kind == "xgen":
            self.expect("(")
            node = self.parse_int()
            self.expect(",")
            deg = self.parse_int()
            self.expect(")")
            self._check_node(node, pos)
            return Expression.from_symbol(gen(val, node, deg))
        if kind == "num":
            return Expression.from_scalar(Scalar(int(val)))
        if val == "(":
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if kind == "name":
            if val == "h":
                self.expect("(")
                node = self.parse_int()
                self.expect(",")
                deg = self.parse_int()
                self.expect(")")
                self._check_node(node, pos)
                if deg == 0:
                    raise ParseError("h degree must be nonzero", pos)
                return Expression.from_symbol(gen("h", node, deg))
            if val == "k":
                self.expect("(")
                node = self.parse_int()
                self.expect(")")
                self._check_node(node, pos)
                return Expression.from_symbol(gen("k", node))
            if val == "C":
                return Expression.from_symbol(gen("C"))
            if val == "v":
                return Expression.from_scalar(Scalar.v_power(1))
            if val == "q":
                m = 1 if self.data is None else self.data.m
                return Expression.from_scalar(Scalar.v_power(m))
            if val in ("qi", "qf", "qb"):
                self.expect("(")
                s = self.parse_int()
                self.expect(",")
                second = self.parse_int()
                if val == "qb":
                    self.expect(",")
                    node = self.parse_int()
                    self.expect(")")
                    return Expression.from_scalar(
                        qbinom(s, second, self._q_exp(node, pos)))
                self.expect(")")
                e = self._q_exp(second, pos)
                fn = qint if val == "qi" else qfact
                return Expression.from_scalar(fn(s, e))
        raise ParseError("unexpected token %r" % val, pos)

    def _check_node(self, node, pos):
        if self.data is not None and not 0 <= node <= self.data.n:
            raise ParseError("unknown node index %d" % node, pos)


def _power(e: Expression, exp: int, pos) -> Expression:
    if exp >= 0:
        return e ** exp
    if e.is_scalar():
        return Expression.from_scalar(e.scalar_value() ** exp)
    if len(e.terms) == 1:
        [(word, coeff)] = e.terms.items()
        try:
            inv_word = tuple(symbol_inverse(g) for g in reversed(word))
        except ValueError:
            raise ParseError("negative power of a non-invertible factor", pos)
        base = Expression.from_word(inv_word, coeff.inverse())
        return base ** (-exp)
    raise ParseError("negative power of a non-invertible factor", pos)


def parse_expression(text, data=None) -> Expression:
    p = _Parser(_tokenize(text), data)
    out = p.parse_expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError("trailing input %r" % val, pos)
    return out


def _run_length(word):
    runs = []
    for g in word:
        if runs and runs[-1][0] == g:
            runs[-1][1] += 1
        else:
            runs.append([g, 1])
    return runs


def _print_word(word):
    parts = []
    for g, count in _run_length(word):
        if g.kind == "kinv":
            parts.append("k(%d)^-%d" % (g.node, count))
        elif g.kind == "Cinv":
            parts.append("C^-%d" % count if count > 1 else "C^-1")
        else:
            base = str(g)
            parts.append(base if count == 1 else "%s^%d" % (base, count))
    return "*".join(parts)


def _print_coeff(c: Scalar):
    s = str(c)
    body = s[1:] if s.startswith("-") else s
    if "+" in body or "-" in body or "/" in body:
        return "(%s)" % s
    return s


def print_expression(e: Expression) -> str:
    if e.is_zero():
        return "0"
    parts = []
    for word, coeff in e.sorted_terms():
        if not word:
            parts.append(_print_coeff(coeff))
        else:
            parts.append("%s*%s" % (_print_coeff(coeff), _print_word(word)))
    return " + ".join(parts)
