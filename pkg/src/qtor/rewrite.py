"""Scripted equality verifier for presented algebras.

Equality of two expressions is semi-decided by reducing their difference
with oriented rules drawn from a bound relation suite:

  (a) cancellation of C C^-1 and k_i k_i^-1, centrality of C,
  (b) pushing every k/C symbol to the right edge of each word, picking up
      the q_i^{+-a_ij} conjugation coefficients,
  (c) reordering x^- in front of x^+ with the correction terms of the
      mixed commutation relations,
  (d) the remaining two-sided identities, applied by bounded search and by
      a linear ideal-membership pass inside the span of reachable words.

A zero normal form certifies equality (every step is a relation instance);
a nonzero residual is inconclusive unless a matrix oracle exhibits a
nonzero value, which downgrades the result to Failed.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .algebra import (Expression, GeneratorSymbol, gen, kinv, kk, qint,
                      word_sort_key, xm, xp)
from .presentations import (PresentationSuite, _cartan_quotient, c_power,
                            phi_expand)
from .scalars import Scalar

VERIFIED = "Verified"
INCONCLUSIVE = "Inconclusive"
FAILED = "Failed"


@dataclass
class VerificationReport:
    item_id: str
    status: str
    steps: tuple = ()
    time_ms: int = 0
    residual: object = None

    def to_json(self):
        out = {"id": self.item_id, "status": self.status,
               "steps": list(self.steps), "time_ms": self.time_ms}
        if self.residual is not None and not self.residual.is_zero():
            out["residual"] = str(self.residual)
        return out


@dataclass
class StrategyScript:
    name: str
    steps: tuple
    budget_nodes: int = 10 ** 6
    budget_depth: int = 8
    linear_words: int = 6000
    linear_generations: int = 4

    def with_budgets(self, nodes=None, depth=None):
        return StrategyScript(self.name, self.steps,
                              nodes or self.budget_nodes,
                              depth or self.budget_depth,
                              self.linear_words, self.linear_generations)


def strategy_library():
    """The four shipped scripts: node-0 commutation checks (S1), vanishing
    mixed brackets (S2), mixed Serre identities (S3), and a generic
    reorder-then-cancel pass (S4)."""
    return {
        "S1": StrategyScript("S1", ("expand", "factor", "reorder", "cancel")),
        "S2": StrategyScript("S2", ("expand", "factor", "reorder", "cancel",
                                    "linear")),
        "S3": StrategyScript("S3", ("expand", "reorder", "factor", "cancel",
                                    "linear")),
        "S4": StrategyScript("S4", ("factor", "reorder", "cancel")),
    }


# ---------------------------------------------------------------------------
# RuleSet
# ---------------------------------------------------------------------------

_KC_KINDS = ("k", "kinv", "C", "Cinv")
_SWAP_FAMILIES_FINITE = {"v", "vi", "vii"}
_CANCEL_FAMILIES = ("viii", "ix", "x", "xi", "qcomm", "serre")


@dataclass
class RuleSet:
    """Oriented rules bound to a relation suite.  ``mode`` is "finite" when
    only the degree patterns of the finite presentation may be reordered and
    "loop" when the general mixed-commutator correction applies."""
    suite: PresentationSuite
    mode: str
    swap_ids: dict = field(default_factory=dict)
    cancel_rules: list = field(default_factory=list)

    @property
    def ctx(self):
        return self.suite.ctx


def build_ruleset(suite: PresentationSuite) -> RuleSet:
    mode = "loop" if any(r.family == "xpxm" for r in suite.relations) \
        else "finite"
    rs = RuleSet(suite, mode)
    for r in suite.relations:
        if r.family in _SWAP_FAMILIES_FINITE or r.family == "xpxm":
            rs.swap_ids[(r.family,) + r.indices] = r.id
        if r.family in _CANCEL_FAMILIES:
            expr = _normalize(r.residual(), rs, None)
            if expr.is_zero():
                continue
            words = sorted(expr.terms, key=word_sort_key)
            pivot = words[-1]
            coeff = expr.terms[pivot]
            rest = (expr - Expression.from_word(pivot, coeff)) / coeff
            rs.cancel_rules.append((r.id, pivot, -rest, r.residual()))
    return rs


# ---------------------------------------------------------------------------
# Classes (a) and (b): push k/C right, cancel units
# ---------------------------------------------------------------------------

def _push_word(word, ctx):
    """Canonical form of one word under classes (a)-(b): non-k/C symbols in
    order, then the k block sorted by node, then the C power.  Returns
    (scalar, new word)."""
    coeff = Scalar(1)
    body = []
    kexp = {}
    cexp = 0
    for sym in word:
        if sym.kind == "C":
            cexp += 1
        elif sym.kind == "Cinv":
            cexp -= 1
        elif sym.kind in ("k", "kinv"):
            e = 1 if sym.kind == "k" else -1
            kexp[sym.node] = kexp.get(sym.node, 0) + e
        else:
            # commuting every k collected so far past this symbol
            if sym.kind in ("x+", "x-"):
                sgn = 1 if sym.kind == "x+" else -1
                for i, e in kexp.items():
                    a = ctx.a(i, sym.node)
                    if a and e:
                        coeff = coeff * ctx.q_scalar(i, sgn * e * a)
            body.append(sym)
    for i in sorted(kexp):
        e = kexp[i]
        body.extend((kk(i) if e > 0 else kinv(i),) * abs(e))
    body.extend((gen("C") if cexp > 0 else gen("Cinv"),) * abs(cexp))
    return coeff, tuple(body)


def _factor(expr: Expression, ctx) -> Expression:
    out = Expression.zero()
    for word, c in expr.terms.items():
        s, w = _push_word(word, ctx)
        out = out + Expression.from_word(w, c * s)
    return out


# ---------------------------------------------------------------------------
# Class (c): reorder x^- in front of x^+
# ---------------------------------------------------------------------------

def _swap_correction(rules, i, m, j, l):
    """Correction term for x^+_{i,m} x^-_{j,l} -> x^-_{j,l} x^+_{i,m} + corr,
    or None when no rule applies."""
    ctx = rules.ctx
    if rules.mode == "loop":
        if i != j:
            return Expression.zero(), "xpxm.%d.%d.%d.%d" % (i, m, j, l)
        corr = ((c_power(-l) * phi_expand(ctx, i, m + l, +1)
                 - c_power(-m) * phi_expand(ctx, i, m + l, -1))
                * _cartan_quotient(ctx, i))
        return corr, "xpxm.%d.%d.%d.%d" % (i, m, j, l)
    # finite mode: only the four listed degree patterns exist
    if (m, l) == (0, 0):
        if i != j:
            return Expression.zero(), rules.swap_ids.get(("v", i, j), "v")
        corr = (Expression.from_word((kk(i),))
                - Expression.from_word((kinv(i),))) * _cartan_quotient(ctx, i)
        return corr, rules.swap_ids.get(("v", i, j), "v")
    if (m, l) == (-1, 1):
        if i != j:
            return Expression.zero(), rules.swap_ids.get(("vi", i, j), "vi")
        corr = (Expression.from_word((gen("Cinv"), kk(i)))
                - Expression.from_word((gen("C"), kinv(i)))) \
            * _cartan_quotient(ctx, i)
        return corr, rules.swap_ids.get(("vi", i, j), "vi")
    if (m, l) in ((0, 1), (-1, 0)) and i != j:
        return Expression.zero(), rules.swap_ids.get(("vii", i, j, m, l),
                                                     "vii")
    return None, None


def _hx_correction(ctx, i, r, sgn, j, m):
    """h_{i,r} x^pm_{j,m} = x^pm_{j,m} h_{i,r} + corr."""
    coeff = Scalar(sgn) * qint(r * ctx.a(i, j), ctx.q_exp(i)) / Scalar(r)
    cexp = (r - sgn * abs(r)) // 2
    kind = "x+" if sgn > 0 else "x-"
    return c_power(cexp) * Expression.from_word((gen(kind, j, r + m),)) \
        * coeff


def _hh_correction(ctx, i, r, j, s):
    """h_{i,r} h_{j,s} = h_{j,s} h_{i,r} + corr."""
    if r + s != 0:
        return Expression.zero()
    coeff = (qint(r * ctx.a(i, j), ctx.q_exp(i)) / Scalar(r)) \
        * _cartan_quotient(ctx, j)
    return (c_power(r) - c_power(-r)) * coeff


def _reorder(expr: Expression, rules, trace) -> Expression:
    """Fixpoint of adjacent (x^+, x^-) swaps (with corrections) and k/C
    factoring.  Terminates: each swap removes an inversion from the main
    term while correction terms carry strictly fewer x symbols."""
    ctx = rules.ctx
    pending = list(expr.terms.items())
    done = Expression.zero()
    while pending:
        word, coeff = pending.pop()
        spot = None
        for p in range(len(word) - 1):
            a, b = word[p], word[p + 1]
            if a.kind == "x+" and b.kind == "x-":
                corr, rid = _swap_correction(rules, a.node, a.degree,
                                             b.node, b.degree)
                if corr is not None:
                    spot = (p, corr, rid)
                    break
            elif rules.mode == "loop" and a.kind == "h" \
                    and b.kind in ("x+", "x-"):
                sgn = 1 if b.kind == "x+" else -1
                corr = _hx_correction(ctx, a.node, a.degree, sgn,
                                      b.node, b.degree)
                spot = (p, corr, "hx.%d.%d.%d.%d" % (a.node, a.degree,
                                                     b.node, b.degree))
                break
            elif rules.mode == "loop" and a.kind == "h" and b.kind == "h" \
                    and (a.node, a.degree) > (b.node, b.degree):
                corr = _hh_correction(ctx, a.node, a.degree,
                                      b.node, b.degree)
                spot = (p, corr, "hh.%d.%d.%d.%d" % (a.node, a.degree,
                                                     b.node, b.degree))
                break
        if spot is None:
            done = done + Expression.from_word(word, coeff)
            continue
        p, corr, rid = spot
        if trace is not None:
            trace.append(rid)
        head = Expression.from_word(word[:p], coeff)
        tail = Expression.from_word(word[p + 2:])
        swapped = Expression.from_word((word[p + 1], word[p]))
        new = _factor(head * (swapped + corr) * tail, ctx)
        pending.extend(new.terms.items())
    return done


def _normalize(expr: Expression, rules, trace) -> Expression:
    return _reorder(_factor(expr, rules.ctx), rules, trace)


# ---------------------------------------------------------------------------
# Class (d): bounded search with oriented two-sided identities
# ---------------------------------------------------------------------------

def _occurrences(word, sub):
    n, s = len(word), len(sub)
    return [p for p in range(n - s + 1) if word[p:p + s] == sub]


def _apply_rule_at(expr, word, p, rule, rules, trace):
    rid, pivot, rest, _ = rule
    coeff = expr.terms[word]
    head = Expression.from_word(word[:p])
    tail = Expression.from_word(word[p + len(pivot):])
    replaced = _normalize(head * rest * tail, rules, None) * coeff
    out = expr - Expression.from_word(word, coeff) + replaced
    if trace is not None:
        trace.append(rid)
    return out


def _measure(expr):
    return (len(expr.terms), sum(len(w) for w in expr.terms))


def _cancel_search(expr, rules, strategy, trace):
    """Rewrite to fixpoint with the oriented rules: each step replaces the
    leftmost pivot occurrence in the largest word.  Pivots are lex-maximal
    in their relation, so steps descend in the word order; a budget and a
    seen-state check guard the rare non-descending correction."""
    budget = strategy.budget_nodes
    seen = set()
    steps = 0
    while steps < budget:
        target = None
        for word in sorted(expr.terms, key=word_sort_key, reverse=True):
            for rule in rules.cancel_rules:
                occ = _occurrences(word, rule[1])
                if occ:
                    target = (word, occ[0], rule)
                    break
            if target is not None:
                break
        if target is None:
            break
        word, p, rule = target
        expr = _apply_rule_at(expr, word, p, rule, rules, trace)
        steps += 1
        key = hash(expr)
        if key in seen:
            break
        seen.add(key)
    return expr


# ---------------------------------------------------------------------------
# Linear ideal membership inside the span of reachable words
# ---------------------------------------------------------------------------

def _linear_membership(expr, rules, strategy, trace):
    """Decide whether ``expr`` lies in the span of normalized relation
    placements u*(lhs-rhs)*v reachable from its own words.  Sound: every row
    is an ideal element; success implies the residual is zero in the
    algebra."""
    basis = {}       # pivot word -> (row Expression, ids)
    words = set(expr.terms)
    new_words = set(words)

    def add_row(row, rid):
        row = dict(row.terms)
        used = [rid]
        while row:
            pivot = max(row, key=word_sort_key)
            if pivot in basis:
                other, oids = basis[pivot]
                c = row[pivot] / other.terms[pivot]
                reduced = Expression(dict(row)) - other * c
                row = dict(reduced.terms)
                used.extend(oids)
            else:
                basis[pivot] = (Expression(dict(row)), used)
                return True
        return False

    def reduce_expr(e):
        row = dict(e.terms)
        used = []
        while row:
            pivot = max(row, key=word_sort_key)
            if pivot not in basis:
                return Expression(dict(row)), used
            other, oids = basis[pivot]
            c = row[pivot] / other.terms[pivot]
            reduced = Expression(dict(row)) - other * c
            row = dict(reduced.terms)
            used.extend(oids)
        return Expression.zero(), used

    for _ in range(strategy.linear_generations):
        if not new_words or len(words) > strategy.linear_words:
            break
        frontier, new_words = new_words, set()
        for word in sorted(frontier, key=word_sort_key):
            for rule in rules.cancel_rules:
                rid, pivot, rest, raw = rule
                support = [pivot] + list(rest.terms)
                for sub in support:
                    if not sub:
                        continue
                    for p in _occurrences(word, sub):
                        head = Expression.from_word(word[:p])
                        tail = Expression.from_word(word[p + len(sub):])
                        row = _normalize(head * raw * tail, rules, None)
                        if row.is_zero():
                            continue
                        fresh = set(row.terms) - words
                        if add_row(row, rid):
                            words |= fresh
                            new_words |= fresh
            if len(words) > strategy.linear_words:
                break
        residual, used = reduce_expr(expr)
        if residual.is_zero():
            if trace is not None:
                trace.extend(dict.fromkeys(used))
            return residual
    residual, _ = reduce_expr(expr)
    return residual


# ---------------------------------------------------------------------------
# Public entry points
# ---------------------------------------------------------------------------

def reduce_expression(expr: Expression, rules: RuleSet,
                      strategy: StrategyScript, trace=None):
    current = expr
    for step in strategy.steps:
        if current.is_zero():
            break
        if step == "expand":
            continue    # divided powers are expanded on construction
        if step == "factor":
            current = _factor(current, rules.ctx)
        elif step == "reorder":
            current = _reorder(_factor(current, rules.ctx), rules, trace)
        elif step == "cancel":
            current = _cancel_search(current, rules, strategy, trace)
        elif step == "linear":
            current = _linear_membership(current, rules, strategy, trace)
        else:
            raise ValueError("unknown strategy step %r" % step)
    return current


# keep the short name for callers reading the interface docs
reduce = reduce_expression


def check_equal(e1, e2, rules, strategy=None, item_id="check",
                oracle=None, post=None) -> VerificationReport:
    """Verified iff e1 - e2 reduces to zero.  A nonzero residual yields
    Inconclusive, unless ``oracle`` (a callable Expression -> bool, True
    meaning "provably nonzero") downgrades it to Failed.  ``post``, when
    given, rewrites a nonzero residual (e.g. re-expressing out-of-alphabet
    generators) and the reduction is retried once on the result."""
    if strategy is None:
        strategy = strategy_library()["S2"]
    trace = []
    start = time.monotonic()
    residual = reduce_expression(e1 - e2, rules, strategy, trace)
    if not residual.is_zero() and post is not None:
        if getattr(post, "wants_trace", False):
            rewritten = post(residual, trace)
        else:
            rewritten = post(residual)
        residual = reduce_expression(rewritten, rules, strategy, trace)
    elapsed = int((time.monotonic() - start) * 1000)
    if residual.is_zero():
        status = VERIFIED
    elif oracle is not None and oracle(residual):
        status = FAILED
    else:
        status = INCONCLUSIVE
    return VerificationReport(item_id, status, tuple(trace), elapsed,
                              residual)


def report_suite_json(suite_name, strategy_name, reports):
    items = [r.to_json() for r in reports]
    return json.dumps({"suite": suite_name, "strategy": strategy_name,
                       "items": items}, indent=2)


def suite_exit_code(reports, must_verify=()):
    must = set(must_verify)
    bad = any(r.status == FAILED for r in reports) \
        or any(r.status == INCONCLUSIVE and r.item_id in must
               for r in reports)
    return 1 if bad else 0
