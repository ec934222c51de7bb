"""Exact matrix-representation oracle.

Finite type-A modules and level-0 evaluation modules for the affine
quantum algebras, with q specialized to an exact rational away from roots
of unity.  Every representation validates all defining relations at
construction, so a nonzero evaluation of an expression is a trustworthy
inequality witness; agreement across a battery corroborates (but never
proves) equality.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import Expression, gen, kinv, kk, xm, xp
from .cartan import cartan_data, parse_type
from .presentations import Context, context_from_cartan, dj_relations


# ---------------------------------------------------------------------------
# Exact matrix helpers
# ---------------------------------------------------------------------------

def _mat(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def _zero(n):
    return _mat([[0] * n for _ in range(n)])


def _ident(n):
    return _mat([[int(i == j) for j in range(n)] for i in range(n)])


def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(m))
                       for j in range(p)) for i in range(n))


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


def mat_scale(c, a):
    return tuple(tuple(c * x for x in row) for row in a)


def _diag(entries):
    n = len(entries)
    return _mat([[entries[i] if i == j else 0 for j in range(n)]
                 for i in range(n)])


def _unit_matrix(n, i, j, value=1):
    return _mat([[value if (r, c) == (i, j) else 0 for c in range(n)]
                 for r in range(n)])


def _qnum(q: Fraction, s: int) -> Fraction:
    """The balanced q-integer [s] at an exact rational q."""
    if q == 1 or q == -1:
        raise ValueError("q must avoid roots of unity")
    return (q ** s - q ** (-s)) / (q - q ** (-1))


# ---------------------------------------------------------------------------
# MatrixRep
# ---------------------------------------------------------------------------

class MatrixRep:
    """Exact matrices for each generator of a presentation, validated
    against all of its relations at construction time."""

    def __init__(self, name, ctx: Context, q: Fraction, tables,
                 params=None, validate=True):
        self.name = name
        self.ctx = ctx
        self.q = Fraction(q)
        self.tables = dict(tables)
        self.params = dict(params or {})
        self.dim = len(next(iter(self.tables.values())))
        if validate:
            bad = self.failing_relations()
            if bad:
                raise ValueError("representation %s violates %s"
                                 % (name, ", ".join(bad[:4])))

    def matrix(self, sym):
        try:
            return self.tables[sym]
        except KeyError:
            raise KeyError("generator %s is outside the %s alphabet"
                           % (sym, self.name))

    def evaluate(self, expr: Expression):
        if not isinstance(expr, Expression):
            expr = Expression.from_symbol(expr)
        total = _zero(self.dim)
        for word, coeff in expr.terms.items():
            m = _ident(self.dim)
            for sym in word:
                m = mat_mul(m, self.matrix(sym))
            total = mat_add(total, mat_scale(coeff.evaluate(self.q), m))
        return total

    def failing_relations(self):
        out = []
        for rel in dj_relations(self.ctx).relations:
            if self.evaluate(rel.lhs) != self.evaluate(rel.rhs):
                out.append(rel.id)
        return out

    def __repr__(self):
        return "MatrixRep(%s, dim=%d, q=%s, %s)" % (
            self.name, self.dim, self.q, self.params)


# ---------------------------------------------------------------------------
# Finite type-A modules
# ---------------------------------------------------------------------------

def _a1_context():
    return Context("A1", (1,), (), (Fraction(1),), 1)


def finite_rep(type_name, weight, q) -> MatrixRep:
    """A_1: the (N+1)-dimensional simple module of highest weight N.
    A_2: the 3-dimensional fundamental module (any weight tag accepted)."""
    q = Fraction(q)
    if type_name == "A1":
        N = int(weight)
        dim = N + 1
        if dim > 64:
            raise ValueError("module dimension %d > 64" % dim)
        # basis v_0 (highest) .. v_N;  f v_j = [j+1] v_{j+1},
        # e v_j = [N-j+1] v_{j-1},  t = diag(q^{N-2j})
        f = _zero(dim)
        e = _zero(dim)
        for j in range(N):
            f = mat_add(f, _unit_matrix(dim, j + 1, j, _qnum(q, j + 1)))
            e = mat_add(e, _unit_matrix(dim, j, j + 1, _qnum(q, N - j)))
        t = _diag([q ** (N - 2 * j) for j in range(dim)])
        tinv = _diag([q ** (2 * j - N) for j in range(dim)])
        tables = {xp(1, 0): e, xm(1, 0): f, kk(1): t, kinv(1): tinv}
        return MatrixRep("A1[N=%d,q=%s]" % (N, q), _a1_context(), q, tables,
                         {"type": "A1", "N": N, "q": q})
    if type_name == "A2":
        from .presentations import finite_rank2_context
        tables = {
            xp(1, 0): _unit_matrix(3, 0, 1), xm(1, 0): _unit_matrix(3, 1, 0),
            xp(2, 0): _unit_matrix(3, 1, 2), xm(2, 0): _unit_matrix(3, 2, 1),
            kk(1): _diag([q, 1 / q, 1]), kinv(1): _diag([1 / q, q, 1]),
            kk(2): _diag([1, q, 1 / q]), kinv(2): _diag([1, 1 / q, q]),
        }
        return MatrixRep("A2[q=%s]" % q, finite_rank2_context("A2"), q,
                         tables, {"type": "A2", "N": 1, "q": q})
    raise ValueError("finite oracle modules exist for A1 and A2 only")


def evaluation_rep(tag, fin: MatrixRep, a) -> MatrixRep:
    """Level-0 evaluation module for A_1^(1) or A_2^(1): the affine node
    acts through the opposite corner of the finite module, scaled by the
    evaluation parameter a."""
    a = Fraction(a)
    if a == 0:
        raise ValueError("evaluation parameter must be nonzero")
    data = cartan_data(parse_type(tag))
    ctx = context_from_cartan(data)
    q = fin.q
    tables = dict(fin.tables)
    if tag == "A1~1":
        tables[xp(0, 0)] = mat_scale(a, fin.matrix(xm(1, 0)))
        tables[xm(0, 0)] = mat_scale(1 / a, fin.matrix(xp(1, 0)))
        tables[kk(0)] = fin.matrix(kinv(1))
        tables[kinv(0)] = fin.matrix(kk(1))
    elif tag == "A2~1":
        if fin.params.get("type") != "A2":
            raise ValueError("A2~1 evaluation needs the A2 finite module")
        tables[xp(0, 0)] = _unit_matrix(3, 2, 0, a)
        tables[xm(0, 0)] = _unit_matrix(3, 0, 2, 1 / a)
        tables[kk(0)] = _diag([1 / q, 1, q])
        tables[kinv(0)] = _diag([q, 1, 1 / q])
    else:
        raise ValueError("evaluation modules exist for A1~1 and A2~1 only")
    return MatrixRep("%s[a=%s,%s]" % (tag, a, fin.name), ctx, q, tables,
                     dict(fin.params, a=a, tag=tag))


def rep_after(morphism, rep: MatrixRep) -> MatrixRep:
    """The pullback rep g -> rep(morphism(g)); construction re-validates
    every relation, so failure is direct evidence the morphism breaks
    one."""
    tables = {sym: rep.evaluate(morphism.apply(Expression.from_symbol(sym)))
              for sym in rep.tables}
    return MatrixRep("%s.%s" % (morphism.name, rep.name), rep.ctx, rep.q,
                     tables, rep.params)


# ---------------------------------------------------------------------------
# Batteries and equality checking
# ---------------------------------------------------------------------------

AGREE = "AgreeOnAll"
DISAGREE = "DisagreeWitness"

_DEFAULT_Q = (Fraction(2), Fraction(5, 7), Fraction(3, 2))
_DEFAULT_A = (Fraction(3), Fraction(-2, 5))


def default_battery(tag, weight=None, qs=_DEFAULT_Q, avals=_DEFAULT_A):
    """At least 3 q values x 2 evaluation parameters per affine type;
    finite tags get the q spread only."""
    reps = []
    if tag in ("A1", "A2"):
        for q in qs:
            reps.append(finite_rep(tag, weight if weight is not None else
                                   (1 if tag == "A1" else 0), q))
        return reps
    fin_tag = "A1" if tag == "A1~1" else "A2"
    for q in qs:
        fin = finite_rep(fin_tag, weight if weight is not None else
                         (1 if fin_tag == "A1" else 0), q)
        for a in avals:
            reps.append(evaluation_rep(tag, fin, a))
    return reps


def battery_from_config(text):
    """JSON battery description: a list of {"type","N","a","q"} entries."""
    reps = []
    for entry in json.loads(text):
        tag = entry["type"]
        q = Fraction(str(entry["q"]))
        n = entry.get("N", 1)
        if tag in ("A1", "A2"):
            reps.append(finite_rep(tag, n, q))
        else:
            fin = finite_rep("A1" if tag == "A1~1" else "A2", n, q)
            reps.append(evaluation_rep(tag, fin,
                                       Fraction(str(entry["a"]))))
    return reps


def matrix_check_equal(e1, e2, reps):
    """(AgreeOnAll, None) or (DisagreeWitness, witness dict with the rep
    parameters and the exact matrix residual)."""
    for rep in reps:
        m1 = rep.evaluate(e1)
        m2 = rep.evaluate(e2)
        if m1 != m2:
            residual = [[str(x - y) for x, y in zip(r1, r2)]
                        for r1, r2 in zip(m1, m2)]
            return DISAGREE, {"rep": rep.name, "params":
                              {k: str(v) for k, v in rep.params.items()},
                              "residual": residual}
    return AGREE, None


def horizontal_witness(reps):
    """An oracle hook for check_equal: True (provably nonzero) only for
    residuals supported on the degree-0 alphabet without the central
    letters, where the level-0 evaluation modules are faithful enough to
    witness an inequality."""
    def probe(residual: Expression):
        for word in residual.terms:
            for sym in word:
                if sym.kind in ("C", "Cinv", "h") or sym.degree != 0:
                    return False
        status, _ = matrix_check_equal(residual, Expression.zero(), reps)
        return status == DISAGREE
    return probe
