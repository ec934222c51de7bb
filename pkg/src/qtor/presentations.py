"""Relation emitters for every presentation the toolkit works with.

A Context bundles the index set, Cartan entries and the q_i = v^{e_i}
exponents; suites of Relations are emitted over it.  The same machinery
covers Chevalley-style presentations, the bounded loop-relation schema, the
finite toroidal presentation, and the standalone rank-2 algebras used by the
scripted verifier.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (C, Cinv, Expression, gen, kinv, kk, qbinom, qfact,
                      qint, xm, xp, bracket)
from .cartan import (AffineType, CartanData, cartan_data, length_function,
                     parse_type)
from .scalars import Scalar


@dataclass(frozen=True)
class Context:
    """Index set with Cartan entries and integer exponents e_i (q_i = v^{e_i})."""
    name: str
    nodes: tuple
    entries: tuple      # ((i, j, a_ij), ...) for i != j
    d: tuple            # Fractions, aligned with nodes
    m: int

    def a(self, i, j):
        if i == j:
            return 2
        for (p, r, v) in self.entries:
            if (p, r) == (i, j):
                return v
        return 0

    def d_of(self, i):
        return self.d[self.nodes.index(i)]

    def q_exp(self, i):
        e = self.m * self.d_of(i)
        if e.denominator != 1:
            raise AssertionError("q_i not an integer power of v")
        return int(e)

    def q_scalar(self, i, power=1):
        return Scalar.v_power(self.q_exp(i) * power)


def context_from_cartan(data: CartanData) -> Context:
    n1 = data.n + 1
    entries = tuple((i, j, data.matrix[i][j])
                    for i in range(n1) for j in range(n1)
                    if i != j and data.matrix[i][j] != 0)
    return Context(data.type.tag, tuple(range(n1)), entries,
                   tuple(data.d), data.m)


_FINITE_RANK2 = {
    "A2": ((-1, -1), (Fraction(1), Fraction(1)), 1),
    "C2": ((-2, -1), (Fraction(1, 2), Fraction(1)), 2),
    "G2": ((-1, -3), (Fraction(1), Fraction(1, 3)), 3),
}


def finite_rank2_context(name) -> Context:
    if name not in _FINITE_RANK2:
        raise ValueError("rank-2 finite type must be one of %s"
                         % sorted(_FINITE_RANK2))
    (a12, a21), d, m = _FINITE_RANK2[name]
    return Context(name, (1, 2), ((1, 2, a12), (2, 1, a21)), d, m)


@dataclass(frozen=True)
class Relation:
    id: str
    family: str
    indices: tuple
    lhs: Expression
    rhs: Expression

    def residual(self):
        return self.lhs - self.rhs


@dataclass
class PresentationSuite:
    tag: str
    ctx: Context
    bounds: tuple
    relations: list = field(default_factory=list)

    def add(self, family, indices, lhs, rhs):
        rid = "%s.%s.%s" % (self.tag, family,
                            ".".join(str(i) for i in indices))
        self.relations.append(Relation(rid, family, tuple(indices), lhs, rhs))

    def by_family(self, family):
        return [r for r in self.relations if r.family == family]

    def to_json(self):
        from .parsing import print_expression
        return json.dumps({
            "suite": self.tag,
            "type": self.ctx.name,
            "bounds": list(self.bounds),
            "relations": [{
                "id": r.id,
                "family": r.family,
                "indices": list(r.indices),
                "lhs": print_expression(r.lhs),
                "rhs": print_expression(r.rhs),
            } for r in self.relations],
        }, indent=1, sort_keys=True)


# -- small expression builders ----------------------------------------------

def E(*symbols):
    return Expression.from_word(tuple(symbols))


def k_power(i, e):
    """k_i^e as a word (e may be negative)."""
    if e >= 0:
        return E(*([kk(i)] * e))
    return E(*([kinv(i)] * (-e)))


def c_power(e):
    if e >= 0:
        return E(*([C] * e))
    return E(*([Cinv] * (-e)))


def _cartan_quotient(ctx, i):
    """(q_i - q_i^{-1})^{-1} as a Scalar factor."""
    return (ctx.q_scalar(i) - ctx.q_scalar(i, -1)).inverse()


# ---------------------------------------------------------------------------
# Chevalley-style presentation
# ---------------------------------------------------------------------------

def dj_relations(ctx: Context) -> PresentationSuite:
    """The five relation families over generators x_i^+/-, t_i^{+-1}
    (realized as degree-0 symbols x+(i,0), x-(i,0), k(i))."""
    suite = PresentationSuite("dj-" + ctx.name, ctx, ())
    one = Expression.one()
    for i in ctx.nodes:
        suite.add("unit", (i, 1), E(kk(i), kinv(i)), one)
        suite.add("unit", (i, -1), E(kinv(i), kk(i)), one)
    for i in ctx.nodes:
        for j in ctx.nodes:
            if i < j:
                suite.add("tt", (i, j), E(kk(i), kk(j)), E(kk(j), kk(i)))
    for i in ctx.nodes:
        for j in ctx.nodes:
            for sgn, kind in ((1, "x+"), (-1, "x-")):
                xg = gen(kind, j, 0)
                lhs = E(kk(i), xg)
                rhs = E(xg, kk(i)) * ctx.q_scalar(i, sgn * ctx.a(i, j))
                suite.add("tx", (i, j, sgn), lhs, rhs)
    for i in ctx.nodes:
        for j in ctx.nodes:
            lhs = bracket(E(xp(i, 0)), E(xm(j, 0)))
            if i == j:
                rhs = (E(kk(i)) - E(kinv(i))) * _cartan_quotient(ctx, i)
            else:
                rhs = Expression.zero()
            suite.add("xx", (i, j), lhs, rhs)
    for i in ctx.nodes:
        for j in ctx.nodes:
            if i == j or ctx.a(i, j) == 0:
                continue
            ap = 1 - ctx.a(i, j)
            e = ctx.q_exp(i)
            for sgn, kind in ((1, "x+"), (-1, "x-")):
                xi = gen(kind, i, 0)
                xj = gen(kind, j, 0)
                total = Expression.zero()
                for s in range(ap + 1):
                    coeff = (Scalar(-1) ** s) / (qfact(s, e) * qfact(ap - s, e))
                    total = total + Expression.from_word(
                        (xi,) * s + (xj,) + (xi,) * (ap - s), coeff)
                suite.add("serre", (i, j, sgn), total, Expression.zero())
    return suite


# ---------------------------------------------------------------------------
# phi series
# ---------------------------------------------------------------------------

def phi_expand(ctx: Context, i, s, sign=+1) -> Expression:
    """The series coefficient phi^{sign}_{i,s}: k_i^{sign} at s = 0, zero
    when sign*s < 0, and the closed multinomial form otherwise."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if s == 0:
        return E(kk(i)) if sign > 0 else E(kinv(i))
    if sign * s < 0:
        return Expression.zero()
    r = abs(s)
    e = ctx.q_exp(i)
    head = E(kk(i)) if sign > 0 else E(kinv(i))
    coeff_base = ctx.q_scalar(i) - ctx.q_scalar(i, -1)
    total = Expression.zero()
    for ell in range(1, r + 1):
        c = (coeff_base ** ell) * (Scalar(1 if sign > 0 else (-1) ** ell)
                                   / Scalar(math.factorial(ell)))
        for comp in _compositions(r, ell):
            word = tuple(gen("h", i, sign * rj) for rj in comp)
            total = total + Expression.from_word(word, c)
    return head * total


def _compositions(r, ell):
    """Ordered compositions of r into ell positive parts."""
    if ell == 1:
        yield (r,)
        return
    for first in range(1, r - ell + 2):
        for rest in _compositions(r - first, ell - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Bounded loop-relation schema
# ---------------------------------------------------------------------------

def _bounded_alphabet(ctx, M, R):
    out = [gen("C"), gen("Cinv")]
    for i in ctx.nodes:
        out.append(kk(i))
        out.append(kinv(i))
        for m in range(-M, M + 1):
            out.append(xp(i, m))
            out.append(xm(i, m))
        for r in range(-R, R + 1):
            if r != 0:
                out.append(gen("h", i, r))
    return out


def affinization_relations(ctx: Context, M=2, R=2) -> PresentationSuite:
    """Every loop-relation clause instantiated over |m| <= M, |r| <= R."""
    if M < 1 or R < 1:
        raise ValueError("bounds must be at least 1")
    suite = PresentationSuite("loop-" + ctx.name, ctx, (M, R))
    one = Expression.one()
    # centrality of C and the unit relations
    for g in _bounded_alphabet(ctx, M, R):
        if g.kind in ("C", "Cinv"):
            continue
        suite.add("central", (str(g),), E(C) * E(g), E(g) * E(C))
    suite.add("unit", ("C",), E(C, Cinv), one)
    suite.add("unit", ("Cinv",), E(Cinv, C), one)
    for i in ctx.nodes:
        suite.add("unit", (i, 1), E(kk(i), kinv(i)), one)
        suite.add("unit", (i, -1), E(kinv(i), kk(i)), one)
    # [k_i, k_j] = 0 and [k_i, h_{j,r}] = 0
    for i in ctx.nodes:
        for j in ctx.nodes:
            if i < j:
                suite.add("kk", (i, j), E(kk(i), kk(j)), E(kk(j), kk(i)))
            for r in range(-R, R + 1):
                if r != 0:
                    hg = gen("h", j, r)
                    suite.add("kh", (i, j, r), E(kk(i), hg), E(hg, kk(i)))
    # [h_{i,r}, h_{j,s}]
    for i in ctx.nodes:
        for j in ctx.nodes:
            for r in range(-R, R + 1):
                for s in range(-R, R + 1):
                    if r == 0 or s == 0 or (i, r) >= (j, s):
                        continue
                    hi = gen("h", i, r)
                    hj = gen("h", j, s)
                    lhs = bracket(E(hi), E(hj))
                    if r + s == 0:
                        coeff = (qint(r * ctx.a(i, j), ctx.q_exp(i))
                                 / Scalar(r)) * _cartan_quotient(ctx, j)
                        rhs = (c_power(r) - c_power(-r)) * coeff
                    else:
                        rhs = Expression.zero()
                    suite.add("hh", (i, r, j, s), lhs, rhs)
    # k_i x^pm_{j,m} k_i^{-1} = q_i^{pm a_ij} x^pm_{j,m}
    for i in ctx.nodes:
        for j in ctx.nodes:
            for m in range(-M, M + 1):
                for sgn, kind in ((1, "x+"), (-1, "x-")):
                    xg = gen(kind, j, m)
                    suite.add("kx", (i, j, m, sgn), E(kk(i), xg),
                              E(xg, kk(i)) * ctx.q_scalar(i, sgn * ctx.a(i, j)))
    # [h_{i,r}, x^pm_{j,m}] = pm ([r a_ij]_i / r) C^{(r -+ |r|)/2} x^pm_{j,r+m}
    for i in ctx.nodes:
        for j in ctx.nodes:
            for r in range(-R, R + 1):
                if r == 0:
                    continue
                for m in range(-M, M + 1):
                    if not -M <= r + m <= M:
                        continue
                    for sgn, kind in ((1, "x+"), (-1, "x-")):
                        hg = gen("h", i, r)
                        xg = gen(kind, j, m)
                        lhs = bracket(E(hg), E(xg))
                        coeff = Scalar(sgn) * qint(r * ctx.a(i, j),
                                                   ctx.q_exp(i)) / Scalar(r)
                        cexp = (r - sgn * abs(r)) // 2
                        rhs = c_power(cexp) * E(gen(kind, j, r + m)) * coeff
                        suite.add("hx", (i, r, j, m, sgn), lhs, rhs)
    # [x^+_{i,m}, x^-_{j,l}]
    for i in ctx.nodes:
        for j in ctx.nodes:
            for m in range(-M, M + 1):
                for l in range(-M, M + 1):
                    lhs = bracket(E(xp(i, m)), E(xm(j, l)))
                    if i == j:
                        plus = c_power(-l) * phi_expand(ctx, i, m + l, +1)
                        minus = c_power(-m) * phi_expand(ctx, i, m + l, -1)
                        rhs = (plus - minus) * _cartan_quotient(ctx, i)
                    else:
                        rhs = Expression.zero()
                    suite.add("xpxm", (i, m, j, l), lhs, rhs)
    # weighted reordering clause
    for i in ctx.nodes:
        for j in ctx.nodes:
            if ctx.a(i, j) == 0 and i != j:
                continue
            for m in range(-M, M):
                for l in range(-M, M):
                    for sgn, kind in ((1, "x+"), (-1, "x-")):
                        u = ctx.q_scalar(i, sgn * ctx.a(i, j))
                        lhs = (bracket(E(gen(kind, i, m + 1)),
                                       E(gen(kind, j, l)), u)
                               + bracket(E(gen(kind, j, l + 1)),
                                         E(gen(kind, i, m)), u))
                        suite.add("qcomm", (i, m, j, l, sgn), lhs,
                                  Expression.zero())
    # symmetrized Serre clause
    for i in ctx.nodes:
        for j in ctx.nodes:
            if i == j or ctx.a(i, j) == 0:
                continue
            ap = 1 - ctx.a(i, j)
            e = ctx.q_exp(i)
            degree_range = range(-M, M + 1)
            for degs in itertools.product(degree_range, repeat=ap):
                for l in range(-M, M + 1):
                    for sgn, kind in ((1, "x+"), (-1, "x-")):
                        total = Expression.zero()
                        for perm in itertools.permutations(range(ap)):
                            for s in range(ap + 1):
                                coeff = (Scalar(-1) ** s) * qbinom(ap, s, e)
                                left = tuple(gen(kind, i, degs[perm[t]])
                                             for t in range(s))
                                right = tuple(gen(kind, i, degs[perm[t]])
                                              for t in range(s, ap))
                                word = left + (gen(kind, j, l),) + right
                                total = total + Expression.from_word(word,
                                                                     coeff)
                        suite.add("serre", (i, j, sgn) + degs + (l,), total,
                                  Expression.zero())
    return suite


# ---------------------------------------------------------------------------
# Finite presentation (clauses i-xi) -- also used for the rank-2 algebras
# ---------------------------------------------------------------------------

def finite_generators(ctx):
    out = [gen("C"), gen("Cinv")]
    for i in ctx.nodes:
        out += [kk(i), kinv(i), xp(i, 0), xp(i, -1), xm(i, 0), xm(i, 1)]
    return out


def _emit_clauses_i_to_xi(suite, ctx):
    one = Expression.one()
    # (i) C central
    for g in finite_generators(ctx):
        if g.kind in ("C", "Cinv"):
            continue
        suite.add("i", (str(g),), E(C) * E(g), E(g) * E(C))
    # (ii) units
    suite.add("ii", ("C", 1), E(C, Cinv), one)
    suite.add("ii", ("C", -1), E(Cinv, C), one)
    for i in ctx.nodes:
        suite.add("ii", (i, 1), E(kk(i), kinv(i)), one)
        suite.add("ii", (i, -1), E(kinv(i), kk(i)), one)
    # (iii) [k_i, k_j] = 0
    for i in ctx.nodes:
        for j in ctx.nodes:
            if i < j:
                suite.add("iii", (i, j), E(kk(i), kk(j)), E(kk(j), kk(i)))
    # (iv) k_i x^pm_{j,m} k_i^{-1} = q_i^{pm a_ij} x^pm_{j,m}
    for i in ctx.nodes:
        for j in ctx.nodes:
            for sgn, kind, degs in ((1, "x+", (0, -1)), (-1, "x-", (0, 1))):
                for m in degs:
                    xg = gen(kind, j, m)
                    suite.add("iv", (i, j, m, sgn), E(kk(i), xg),
                              E(xg, kk(i)) * ctx.q_scalar(i, sgn * ctx.a(i, j)))
    # (v) [x^+_{i,0}, x^-_{j,0}]
    for i in ctx.nodes:
        for j in ctx.nodes:
            lhs = bracket(E(xp(i, 0)), E(xm(j, 0)))
            rhs = ((E(kk(i)) - E(kinv(i))) * _cartan_quotient(ctx, i)
                   if i == j else Expression.zero())
            suite.add("v", (i, j), lhs, rhs)
    # (vi) [x^+_{i,-1}, x^-_{j,1}]
    for i in ctx.nodes:
        for j in ctx.nodes:
            lhs = bracket(E(xp(i, -1)), E(xm(j, 1)))
            rhs = ((E(Cinv, kk(i)) - E(C, kinv(i))) * _cartan_quotient(ctx, i)
                   if i == j else Expression.zero())
            suite.add("vi", (i, j), lhs, rhs)
    # (vii) mixed-degree cross commutators vanish for i != j
    for i in ctx.nodes:
        for j in ctx.nodes:
            if i == j:
                continue
            suite.add("vii", (i, j, 0, 1), bracket(E(xp(i, 0)), E(xm(j, 1))),
                      Expression.zero())
            suite.add("vii", (i, j, -1, 0), bracket(E(xp(i, -1)), E(xm(j, 0))),
                      Expression.zero())
    # (viii) same-node q-commutators
    for i in ctx.nodes:
        suite.add("viii", (i, 1),
                  bracket(E(xp(i, 0)), E(xp(i, -1)), ctx.q_scalar(i, 2)),
                  Expression.zero())
        suite.add("viii", (i, -1),
                  bracket(E(xm(i, 1)), E(xm(i, 0)), ctx.q_scalar(i, -2)),
                  Expression.zero())
    # (ix)/(x) cross-node q-commutators when a_ij < 0
    for i in ctx.nodes:
        for j in ctx.nodes:
            if i == j or ctx.a(i, j) >= 0:
                continue
            u = ctx.q_scalar(i, ctx.a(i, j))
            lhs = (bracket(E(xp(i, 0)), E(xp(j, -1)), u)
                   + bracket(E(xp(j, 0)), E(xp(i, -1)), u))
            suite.add("ix", (i, j), lhs, Expression.zero())
            u = ctx.q_scalar(i, -ctx.a(i, j))
            lhs = (bracket(E(xm(i, 1)), E(xm(j, 0)), u)
                   + bracket(E(xm(j, 1)), E(xm(i, 0)), u))
            suite.add("x", (i, j), lhs, Expression.zero())
    # (xi) Serre relations for the three degree patterns
    for i in ctx.nodes:
        for j in ctx.nodes:
            if i == j or ctx.a(i, j) == 0:
                continue
            ap = 1 - ctx.a(i, j)
            e = ctx.q_exp(i)
            for sgn, kind in ((1, "x+"), (-1, "x-")):
                mi_low = 0 if sgn > 0 else 0
                shift = -1 if sgn > 0 else 1
                patterns = (((kind, i, 0), (kind, j, 0)),
                            ((kind, i, shift), (kind, j, 0)),
                            ((kind, i, 0), (kind, j, shift)))
                for pat_no, (yi_spec, yj_spec) in enumerate(patterns):
                    yi = gen(*yi_spec)
                    yj = gen(*yj_spec)
                    total = Expression.zero()
                    for s in range(ap + 1):
                        coeff = (Scalar(-1) ** s) * qbinom(ap, s, e)
                        word = (yi,) * s + (yj,) + (yi,) * (ap - s)
                        total = total + Expression.from_word(word, coeff)
                    suite.add("xi", (i, j, sgn, pat_no), total,
                              Expression.zero())


def toroidal_finite_presentation(data: CartanData) -> PresentationSuite:
    """Clauses (i)-(xi) over the finite generating set.  Requires all
    off-diagonal products a_ij a_ji <= 3."""
    n1 = data.n + 1
    for i in range(n1):
        for j in range(n1):
            if i != j and data.matrix[i][j] * data.matrix[j][i] > 3:
                raise ValueError(
                    "finite presentation needs a_ij*a_ji <= 3; pair (%d,%d) "
                    "of %s has product %d"
                    % (i, j, data.type.tag,
                       data.matrix[i][j] * data.matrix[j][i]))
    ctx = context_from_cartan(data)
    suite = PresentationSuite("finite-" + data.type.tag, ctx, (1, 0))
    _emit_clauses_i_to_xi(suite, ctx)
    return suite


def ax_presentation(name) -> PresentationSuite:
    """The standalone rank-2 algebra on nodes {1, 2} with clauses (i)-(xi)."""
    ctx = finite_rank2_context(name)
    suite = PresentationSuite("ax-" + name, ctx, (1, 0))
    _emit_clauses_i_to_xi(suite, ctx)
    return suite


# ---------------------------------------------------------------------------
# Loop-construction images for the affine node (Jing-style)
# ---------------------------------------------------------------------------

def _sequence_search(nodes, target, form):
    """Sequences over ``nodes`` whose simple-root multiset sums to ``target``
    (a dict node -> mark) such that every partial sum pairs nonpositively
    with the next letter.  ``form(i, j)`` is the symmetric bilinear form on
    simple roots.  Returns a list of (sequence, eps-tuple)."""
    h1 = sum(target.values())
    out = []

    def extend(seq, total, eps):
        if len(seq) == h1:
            out.append((tuple(seq), tuple(eps)))
            return
        for j in nodes:
            if total[j] + 1 > target[j]:
                continue
            e = sum(form(i, j) * total[i] for i in nodes)
            if seq and e > 0:
                continue
            total[j] += 1
            extend(seq + [j], total, eps + ([e] if seq else []))
            total[j] -= 1

    for i1 in nodes:
        total = {j: 0 for j in nodes}
        total[i1] = 1
        extend([i1], total, [])
    return out


def jing_sequences(data: CartanData):
    """All sequences (i_1..i_{h-1}) in I_0 with partial sums pairing to the
    required weights and total weight theta.  Returns a list of
    (sequence, eps-tuple)."""
    nodes = tuple(range(1, data.n + 1))
    target = {i: data.a[i] for i in nodes}

    def form(i, j):
        return data.d[i] * data.matrix[i][j]

    return _sequence_search(nodes, target, form)


def rank2_theta_marks(ctx):
    """Coefficients of the highest root of a rank-2 context on its simple
    roots, found by closing the positive roots under reflection."""
    roots = {(1, 0), (0, 1)}
    changed = True
    while changed:
        changed = False
        for c in list(roots):
            for idx, i in enumerate(ctx.nodes):
                pair = sum(c[t] * ctx.a(i, ctx.nodes[t])
                           for t in range(2))
                new = list(c)
                new[idx] -= pair
                new = tuple(new)
                if min(new) >= 0 and new != (0, 0) and new not in roots:
                    roots.add(new)
                    changed = True
    theta = max(roots, key=lambda c: (c[0] + c[1], c))
    return {ctx.nodes[0]: theta[0], ctx.nodes[1]: theta[1]}


def rank2_sequences(ctx):
    """Valid sequences for a rank-2 context; the letters sum to the highest
    root, giving h - 1 of them where h is the Coxeter number."""
    marks = rank2_theta_marks(ctx)
    return _sequence_search(tuple(ctx.nodes), marks,
                            lambda i, j: ctx.d_of(i) * ctx.a(i, j))


def _node0_images(seq, eps, marks, m, a_const):
    """Shared builder for the affine-node images: twisted commutators over
    the sequence, times C k_theta^{-1} (with marks giving k_theta)."""
    from .algebra import twisted_commutator
    ktheta = Expression.one()
    ktheta_inv = Expression.one()
    for i, mark in sorted(marks.items()):
        ktheta = ktheta * k_power(i, mark)
        ktheta_inv = ktheta_inv * k_power(i, -mark)
    t0 = E(C) * ktheta_inv
    t0_inv = E(Cinv) * ktheta

    def weight(e):
        val = Fraction(m * e)
        if val.denominator != 1:
            raise AssertionError("twist weight is not an integer power of v")
        return Scalar.v_power(int(val))

    # operands b_1..b_{h-1} = x^-_{i_{h-1},0}, ..., x^-_{i_2,0}, x^-_{i_1,1}
    minus_ops = [E(xm(i, 0)) for i in reversed(seq[1:])] + [E(xm(seq[0], 1))]
    plus_ops = [E(xp(i, 0)) for i in reversed(seq[1:])] + [E(xp(seq[0], -1))]
    weights = [weight(e) for e in eps]
    if len(seq) == 1:
        x0p = minus_ops[0]
        x0m_body = plus_ops[0]
    else:
        x0p = twisted_commutator(minus_ops, weights)
        x0m_body = twisted_commutator(plus_ops, weights)
    eps_total = Fraction(sum(eps, Fraction(0)))
    met = eps_total * m
    if met.denominator != 1:
        raise AssertionError("total twist weight is not an integer power of v")
    if a_const is None:
        a_const = Scalar(1)
    # (-q)^{-eps} = (-1)^{eps} q^{-eps}; eps need not be an integer but
    # (-1)^{eps} only makes sense through q^{eps} being a v-power with the
    # parity read off the integer part of eps
    if eps_total.denominator != 1:
        raise AssertionError("total twist weight is not an integer")
    et = int(eps_total)
    front = a_const * (Scalar(-1) ** (et % 2)) * Scalar.v_power(-int(met))
    return {
        "sequence": seq,
        "eps": eps,
        "x0+": x0p * t0,
        "x0-": t0_inv * x0m_body * front,
        "t0": t0,
        "t0inv": t0_inv,
    }


def jing_images(data, i1=None, a_const=None):
    """Images of the affine-node Chevalley generators inside the loop
    presentation: x_0^+ and x_0^- as twisted commutators, t_0 as C k_theta^{-1}.

    The scalar ``a_const`` multiplying the x_0^- image defaults to 1 (it is 1
    in the simply laced cases; otherwise it is type-dependent and must be
    supplied by the caller)."""
    if isinstance(data, AffineType):
        data = cartan_data(data)
    seqs = jing_sequences(data)
    if i1 is not None:
        seqs = [sq for sq in seqs if sq[0][0] == i1]
    if not seqs:
        raise ValueError("no valid loop-construction sequence found")
    seq, eps = seqs[0]
    marks = {i: data.a[i] for i in range(1, data.n + 1)}
    return _node0_images(seq, eps, marks, data.m, a_const)


def ax_xi_images(name, i1=None, a_const=None):
    """The affine-node images inside the standalone rank-2 algebra, used to
    transport Chevalley-presentation relations into it."""
    ctx = finite_rank2_context(name)
    seqs = rank2_sequences(ctx)
    if i1 is not None:
        seqs = [sq for sq in seqs if sq[0][0] == i1]
    if not seqs:
        raise ValueError("no valid loop-construction sequence found")
    seq, eps = seqs[0]
    marks = rank2_theta_marks(ctx)
    return _node0_images(seq, eps, marks, ctx.m, a_const)


# ---------------------------------------------------------------------------
# The rank-1 affine embedding at a node
# ---------------------------------------------------------------------------

def hi_embedding(data: CartanData, i):
    """Generator images for the copy of the rank-1 affine quantum group at
    node i: the source alphabet is nodes {0, 1} of A1~1 and q maps to q_i."""
    o, _ = length_function(data)
    oi = o[i]
    images = {
        kk(1): E(kk(i)),
        kinv(1): E(kinv(i)),
        kk(0): E(C, kinv(i)),
        kinv(0): E(Cinv, kk(i)),
        xp(1, 0): E(xp(i, 0)),
        xm(1, 0): E(xm(i, 0)),
        xp(0, 0): E(C, kinv(i), xm(i, 1)) * Scalar(-oi),
        xm(0, 0): E(xp(i, -1), kk(i), Cinv) * Scalar(-oi),
    }
    return images
