"""Command-line surface: type tables, relation-suite emission, morphism and
braid-word application, the exact matrix oracle, and the named verification
suites with reproducible report files.

Reports separate timing into a sidecar block so that the hashed body is
byte-exact across runs of the same inputs.  The environment variable
QTOR_SEED seeds any randomized selection (it is read by the test-suite
property checks; the CLI itself is deterministic).
"""

import argparse
import hashlib
import json
import sys

from fractions import Fraction

from . import __version__
from .algebra import Expression, bracket, gen, kk, kinv, qfact, xm, xp
from .cartan import (ALL_TYPE_TAGS, cartan_data, is_a2n_even_cycle,
                     outer_automorphism_group, parse_type)
from .parsing import ParseError, parse_expression, print_expression
from .presentations import (affinization_relations, ax_presentation,
                            ax_xi_images, context_from_cartan, dj_relations,
                            finite_generators, finite_rank2_context,
                            toroidal_finite_presentation)
from .rewrite import (FAILED, INCONCLUSIVE, VERIFIED, VerificationReport,
                      build_ruleset, check_equal, reduce_expression,
                      report_suite_json, strategy_library, suite_exit_code)
from .scalars import Scalar
from . import braid as braid_mod
from . import morphisms
from . import oracle as oracle_mod


# ---------------------------------------------------------------------------
# Shared plumbing
# ---------------------------------------------------------------------------

def _sha(text):
    return hashlib.sha256(text.encode()).hexdigest()


def _strategy_from_args(args):
    lib = strategy_library()
    name = getattr(args, "strategy", None) or "S2"
    if name not in lib:
        raise SystemExit("unknown strategy %r (have %s)"
                         % (name, ", ".join(sorted(lib))))
    s = lib[name]
    return s.with_budgets(getattr(args, "budget_nodes", None),
                          getattr(args, "budget_depth", None))


def _battery_from_args(args, tag="A2~1"):
    path = getattr(args, "battery", None)
    if path:
        with open(path) as fh:
            return oracle_mod.battery_from_config(fh.read())
    return oracle_mod.default_battery(tag)


def _write_report(args, suite_name, strategy_name, reports, must_verify):
    body = {
        "suite": suite_name,
        "strategy": strategy_name,
        "meta": {
            "version": __version__,
            "strategy_hash": _sha(strategy_name),
        },
        "must_verify": sorted(must_verify),
        "items": [{k: v for k, v in r.to_json().items() if k != "time_ms"}
                  for r in reports],
    }
    body_text = json.dumps(body, indent=2, sort_keys=True)
    out = {
        "body": body,
        "body_sha256": _sha(body_text),
        "timing": {"per_item_ms": {r.item_id: r.time_ms for r in reports}},
    }
    text = json.dumps(out, indent=2, sort_keys=True)
    path = getattr(args, "out", None)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text


# ---------------------------------------------------------------------------
# types / cartan
# ---------------------------------------------------------------------------

def cmd_types(args):
    header = "%-6s %-4s %-22s %-22s %-26s %s" % ("type", "m", "a", "a^v",
                                                 "d", "Omega")
    print(header)
    print("-" * len(header))
    for tag in ALL_TYPE_TAGS:
        data = cartan_data(parse_type(tag))
        omega = outer_automorphism_group(data)
        osz = len(omega) if omega else 1
        print("%-6s %-4d %-22s %-22s %-26s order %d" % (
            tag, data.m,
            ",".join(str(x) for x in data.a),
            ",".join(str(x) for x in data.a_dual),
            ",".join(str(x) for x in data.d),
            osz))
    return 0


def cmd_cartan(args):
    data = cartan_data(parse_type(args.type))
    print(data.to_json())
    return 0


# ---------------------------------------------------------------------------
# relations
# ---------------------------------------------------------------------------

def _emit_suite(kind, tag, bounds):
    if kind == "dj":
        try:
            ctx = finite_rank2_context(tag)
        except ValueError:
            ctx = context_from_cartan(cartan_data(parse_type(tag)))
        return dj_relations(ctx)
    if kind == "affinization":
        ctx = context_from_cartan(cartan_data(parse_type(tag)))
        m, r = bounds
        return affinization_relations(ctx, m, r)
    if kind == "toroidal-finite":
        return toroidal_finite_presentation(cartan_data(parse_type(tag)))
    if kind == "ax":
        return ax_presentation(tag)
    raise SystemExit("unknown relation suite %r (have dj, affinization, "
                     "toroidal-finite, ax)" % kind)


def cmd_relations(args):
    if args.action != "emit":
        raise SystemExit("relations supports the 'emit' action")
    try:
        suite = _emit_suite(args.suite, args.type_tag, tuple(args.bounds))
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    text = suite.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


# ---------------------------------------------------------------------------
# apply
# ---------------------------------------------------------------------------

_NAMED_MORPHISMS = {
    "eta": morphisms.eta,
    "sigma": morphisms.sigma,
    "psi": morphisms.psi,
    "Phi": morphisms.Phi,
}


def cmd_apply(args):
    data = cartan_data(parse_type(args.type))
    try:
        expr = parse_expression(args.expression, data)
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    name = args.morphism
    if name in _NAMED_MORPHISMS:
        result = _NAMED_MORPHISMS[name](data).apply(expr)
    else:
        try:
            w = braid_mod.parse_word(data, name)
        except ValueError as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 2
        result = braid_mod.act(w, expr)
    print(print_expression(result))
    return 0


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------

def cmd_oracle(args):
    reps = _battery_from_args(args, args.type)
    for rep in reps:
        print("%-40s dim=%d  relations: all zero" % (rep.name,
                                                     len(rep.tables[
                                                         next(iter(rep.tables))
                                                     ])))
    print("battery of %d valid representations" % len(reps))
    return 0


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

def _serre_expression(ctx, x_outer, x_inner, a, e):
    """sum_s (-1)^s x_outer^(s) x_inner x_outer^(1-a-s) with divided-power
    normalization, as an Expression in the images."""
    ap = 1 - a
    total = Expression.zero()
    for s in range(ap + 1):
        c = (Scalar(-1) ** s) / (qfact(s, e) * qfact(ap - s, e))
        total = total + (x_outer ** s) * x_inner * (x_outer ** (ap - s)) * c
    return total


def _check_with_scripts(e1, e2, rules, scripts, item_id, oracle=None,
                        post=None):
    report = None
    for strat in scripts:
        report = check_equal(e1, e2, rules, strat, item_id=item_id,
                             oracle=oracle, post=post)
        if report.status == VERIFIED:
            return report
    return report


def suite_jing_ax(name, strategy=None, stretch=True):
    """The scripted rank-2 checks: the affine-node images satisfy the
    missing Chevalley relations inside the standalone algebra."""
    suite = ax_presentation(name)
    ctx = suite.ctx
    rules = build_ruleset(suite)
    lib = strategy_library()
    scripts = [lib["S1"], lib["S2"], lib["S3"]]
    if strategy is not None:
        scripts = [strategy]
    images = ax_xi_images(name, a_const=None if name == "A2"
                          else _rank2_a_const(name))
    x0p, x0m, t0, t0inv = (images["x0+"], images["x0-"], images["t0"],
                           images["t0inv"])
    reports = []
    # (a) [xi(x0+), xi(x0-)] = (khat0 - khat0^{-1}) / (q - q^{-1})
    qden = (Scalar.v_power(ctx.m) - Scalar.v_power(-ctx.m)).inverse()
    reports.append(_check_with_scripts(
        bracket(x0p, x0m), (t0 - t0inv) * qden, rules, scripts,
        "%s.kk0" % name))
    if name != "A2":
        return reports, []
    # (b) mixed brackets vanish
    for ell in ctx.nodes:
        reports.append(_check_with_scripts(
            bracket(x0p, Expression.from_symbol(xm(ell, 0))),
            Expression.zero(), rules, scripts, "A2.mixed.+.%d" % ell))
        reports.append(_check_with_scripts(
            bracket(x0m, Expression.from_symbol(xp(ell, 0))),
            Expression.zero(), rules, scripts, "A2.mixed.-.%d" % ell))
    # (c) Serre relations between the node-0 images and the plain nodes
    for ell in ctx.nodes:
        for sgn, img, plain in ((1, x0p, xp(ell, 0)), (-1, x0m, xm(ell, 0))):
            xe = Expression.from_symbol(plain)
            reports.append(_check_with_scripts(
                _serre_expression(ctx, img, xe, -1, ctx.q_exp(ell)),
                Expression.zero(), rules, scripts,
                "A2.serre.out.%+d.%d" % (sgn, ell)))
            reports.append(_check_with_scripts(
                _serre_expression(ctx, xe, img, -1, ctx.q_exp(ell)),
                Expression.zero(), rules, scripts,
                "A2.serre.in.%+d.%d" % (sgn, ell)))
    must = [r.item_id for r in reports]
    return reports, must


def _rank2_a_const(name):
    # the scalar multiplying the x0- image outside the simply laced case
    if name == "C2":
        from .algebra import qint
        return (qint(2, 1) ** 2).inverse() * Scalar(-1)
    return Scalar(1)


def suite_preserve_T1(tag="A2~1", strategy=None, mutate=False,
                      drop_rule=False):
    """Relation preservation for the node-1 braid automorphism, plus the
    round trip against its inverse, on the finite presentation."""
    data = cartan_data(parse_type(tag))
    ctx = context_from_cartan(data)
    pres = toroidal_finite_presentation(data)
    rules = build_ruleset(pres)
    loop_rules = build_ruleset(affinization_relations(ctx, 2, 2))
    if drop_rule:
        # drop the same-node reordering rule at the node T1 acts on; it
        # must go from the loop-mode retry set as well, or the post hook
        # quietly compensates and the control cannot fail
        pivot = (xp(1, 0), xp(1, -1))
        rules.cancel_rules = [c for c in rules.cancel_rules
                              if c[1] != pivot]
        loop_rules.cancel_rules = [c for c in loop_rules.cancel_rules
                                   if c[1] != pivot]
    strat = strategy or strategy_library()["S2"]
    post = morphisms.FarDegreePost(data, rules, loop_rules, strat)
    reps = oracle_mod.default_battery(tag)
    witness = oracle_mod.horizontal_witness(reps)
    t1 = morphisms.toroidal_T(data, 1, mutate_sign=mutate)
    reports = []
    for rel in pres.relations:
        lhs = t1.apply(rel.lhs)
        rhs = t1.apply(rel.rhs)
        reports.append(check_equal(lhs, rhs, rules, strat, item_id=rel.id,
                                   oracle=witness, post=post))
    round_trip = morphisms.compose(t1, morphisms.toroidal_T_inv(data, 1))
    for g in finite_generators(ctx):
        e = Expression.from_symbol(g)
        reports.append(check_equal(round_trip.apply(e), e, rules, strat,
                                   item_id="roundtrip.%s" % (g,),
                                   oracle=witness, post=post))
    must = [r.item_id for r in reports]
    return reports, must


def suite_braid_relations(tag="A2~1", strategy=None):
    """Action agreement on every finite generator for each defining
    relation of the extended double affine braid group."""
    data = cartan_data(parse_type(tag))
    ctx = context_from_cartan(data)
    rules = build_ruleset(toroidal_finite_presentation(data))
    loop_rules = build_ruleset(affinization_relations(ctx, 2, 2))
    strat = strategy or strategy_library()["S2"]
    post = morphisms.FarDegreePost(data, rules, loop_rules, strat)
    gens = list(finite_generators(ctx))
    reports = []
    for name, lhs, rhs in braid_mod.relation_suite_braid(data):
        for g in gens:
            e1 = braid_mod.act(lhs, Expression.from_symbol(g))
            e2 = braid_mod.act(rhs, Expression.from_symbol(g))
            reports.append(check_equal(e1, e2, rules, strat,
                                       item_id="%s@%s" % (name, g),
                                       post=post))
    must = [r.item_id for r in reports]
    return reports, must


def suite_duality(tag="A2~1", strategy=None):
    """The horizontal-vertical exchange checks: psi against the central
    elements, Phi on C and the k-string, the Phi(psi eta) round trip, and
    lattice-element fixing of the degree-0 generators."""
    data = cartan_data(parse_type(tag))
    ctx = context_from_cartan(data)
    pres = toroidal_finite_presentation(data)
    rules = build_ruleset(pres)
    loop_rules = build_ruleset(affinization_relations(ctx, 2, 2))
    strat = strategy or strategy_library()["S2"]
    post = morphisms.FarDegreePost(data, rules, loop_rules, strat)
    psi_m = morphisms.psi(data)
    phi_m = morphisms.Phi(data)
    one = Expression.one()
    reports = []
    # psi kills the central element against the k-string
    kstring = Expression.one()
    kstring_inv = Expression.one()
    for i in data.nodes:
        for _ in range(data.a[i]):
            kstring = kstring * Expression.from_symbol(kk(i))
            kstring_inv = kstring_inv * Expression.from_symbol(kinv(i))
    reports.append(check_equal(
        psi_m.apply(Expression.from_symbol(gen("C"))) * kstring, one,
        rules, strat, item_id="psi.C", post=post))
    for i in data.nodes:
        if i == 0:
            # the affine node picks up the central twist:
            # psi(k_0) k_0 = C^{-1} (k-string)
            lhs = (psi_m.apply(Expression.from_symbol(kk(0)))
                   * Expression.from_symbol(kk(0))
                   * Expression.from_symbol(gen("C")) * kstring_inv)
        else:
            lhs = (psi_m.apply(Expression.from_symbol(kk(i)))
                   * Expression.from_symbol(kk(i)))
        reports.append(check_equal(lhs, one, rules, strat,
                                   item_id="psi.k%d" % i, post=post))
    reports.append(check_equal(
        phi_m.apply(Expression.from_symbol(gen("C"))), kstring, rules,
        strat, item_id="Phi.C", post=post))
    reports.append(check_equal(
        phi_m.apply(kstring), Expression.from_symbol(gen("Cinv")), rules,
        strat, item_id="Phi.kstring", post=post))
    # Phi (psi eta) = id on the finite generating set.  Phi = eta psi and
    # eta is a table-defined involution, so Phi(psi(eta(g))) = g for every
    # g is equivalent to psi(psi(g)) = g on the generating set: the latter
    # makes psi squared the identity as an algebra map, which conjugated by
    # eta gives the round trip on every generator.  The squared form is the
    # one checked here because it keeps both psi applications on reduced
    # normal forms; the raw composite image of the affine node's
    # degree-shifted generators is intractably larger than its normal form.
    for g in finite_generators(ctx):
        e = Expression.from_symbol(g)
        u = reduce_expression(psi_m.apply(e), rules, strat)
        lhs = morphisms.finitize(data, psi_m.apply(u))
        reports.append(check_equal(lhs, e, rules, strat,
                                   item_id="Phi.psi.eta.%s" % (g,),
                                   post=post))
    # lattice elements fix the other nodes' degree-0 generators
    for i in range(1, data.n + 1):
        yi = morphisms.Y_coweight(data, i)
        for j in range(1, data.n + 1):
            if i == j:
                continue
            for g in (xp(j, 0), xm(j, 0)):
                e = Expression.from_symbol(g)
                reports.append(check_equal(yi.apply(e), e, rules, strat,
                                           item_id="Y%d.%s" % (i, g),
                                           post=post))
    # psi swaps each T_i with its inverse, certified on the oracle battery
    reps = oracle_mod.default_battery(tag)
    for i in range(1, data.n + 1):
        ti = morphisms.toroidal_T(data, i)
        ti_inv = morphisms.toroidal_T_inv(data, i)
        for j in range(1, data.n + 1):
            for g in (xp(j, 0), xm(j, 0), kk(j)):
                e = Expression.from_symbol(g)
                e1 = psi_m.apply(ti.apply(e))
                e2 = ti_inv.apply(psi_m.apply(e))
                status, _ = oracle_mod.matrix_check_equal(e1, e2, reps)
                reports.append(VerificationReport(
                    "psi.T%d.%s" % (i, g), status))
    must = [r.item_id for r in reports]
    return reports, must


def suite_phi_series():
    """phi_expand against a truncated exponential-series oracle, and the
    bracket formula for h at loop degree one re-derived from the loop
    relations."""
    from .presentations import phi_expand
    reports = []
    for tag, node in (("A1~1", 1), ("C2~1", 2)):
        data = cartan_data(parse_type(tag))
        ctx = context_from_cartan(data)
        e = ctx.q_exp(node)
        coeff = Scalar.v_power(e) - Scalar.v_power(-e)
        order = 3
        # series exp((q-q^{-1}) sum_r h_{i,r} z^r) as z-power coefficients
        arg = [Expression.zero()] + [
            Expression.from_symbol(gen("h", node, r)) * coeff
            for r in range(1, order + 1)]
        series = [Expression.one()] + [Expression.zero()] * order
        power = list(series)
        fact = 1
        for ell in range(1, order + 1):
            nxt = [Expression.zero()] * (order + 1)
            for s in range(order + 1):
                for t in range(1, order + 1 - s):
                    nxt[s + t] = nxt[s + t] + power[s] * arg[t]
            power = nxt
            fact *= ell
            inv = Scalar(1, fact)
            for s in range(order + 1):
                series[s] = series[s] + power[s] * inv
        head = Expression.from_symbol(kk(node))
        ok = all((head * series[s] - phi_expand(ctx, node, s)).is_zero()
                 for s in range(order + 1))
        reports.append(VerificationReport("phi.series.%s.%d" % (tag, node),
                                          VERIFIED if ok else FAILED))
    # h_{i,1} = C k_i^{-1} [x^+_{i,0}, x^-_{i,1}] from the loop relations
    data = cartan_data(parse_type("A1~1"))
    ctx = context_from_cartan(data)
    loop_rules = build_ruleset(affinization_relations(ctx, 2, 2))
    strat = strategy_library()["S2"]
    lhs = Expression.from_word((gen("C"), kinv(1))) \
        * bracket(Expression.from_symbol(xp(1, 0)),
                  Expression.from_symbol(xm(1, 1)))
    rhs = Expression.from_symbol(gen("h", 1, 1))
    reports.append(check_equal(lhs, rhs, loop_rules, strat,
                               item_id="h.bracket.A1~1"))
    must = [r.item_id for r in reports]
    return reports, must


def suite_lusztig(tag="A2"):
    """Oracle-level checks of the rank-1/2 braid operators: validity on the
    batteries, the length-3 braid relation, and the sigma conjugation."""
    reports = []
    for bat_tag, nodes in (("A2", (1, 2)), ("A1~1", (0, 1))):
        reps = oracle_mod.default_battery(bat_tag)
        data = cartan_data(parse_type(bat_tag if "~" in bat_tag else
                                      bat_tag + "~1"))
        for i in nodes:
            for maker, label in ((morphisms.lusztig_T, "T"),
                                 (morphisms.lusztig_T_inv, "T'")):
                m = maker(data, i)
                try:
                    for rep in reps:
                        oracle_mod.rep_after(m, rep)
                    status = VERIFIED
                except ValueError:
                    status = FAILED
                reports.append(VerificationReport(
                    "lusztig.%s.%s%d" % (bat_tag, label, i), status))
    # braid relation on the rank-2 battery
    data = cartan_data(parse_type("A2~1"))
    reps = oracle_mod.default_battery("A2")
    t1 = morphisms.lusztig_T(data, 1)
    t2 = morphisms.lusztig_T(data, 2)
    lhs = morphisms.compose(t1, t2, t1)
    rhs = morphisms.compose(t2, t1, t2)
    chevalley = [s for i in (1, 2)
                 for s in (xp(i, 0), xm(i, 0), kk(i), kinv(i))]
    agree = all(
        oracle_mod.matrix_check_equal(
            lhs.apply(Expression.from_symbol(g)),
            rhs.apply(Expression.from_symbol(g)), reps)[0]
        == oracle_mod.AGREE
        for g in chevalley)
    reports.append(VerificationReport(
        "lusztig.braid.121", VERIFIED if agree else FAILED))
    # sigma T_i sigma = T_i^{-1}
    sig = morphisms.sigma(data)
    for i in (1, 2):
        lhs = morphisms.compose(sig, morphisms.lusztig_T(data, i), sig)
        rhs = morphisms.lusztig_T_inv(data, i)
        agree = all(
            oracle_mod.matrix_check_equal(
                lhs.apply(Expression.from_symbol(g)),
                rhs.apply(Expression.from_symbol(g)), reps)[0]
            == oracle_mod.AGREE
            for g in chevalley)
        reports.append(VerificationReport(
            "lusztig.sigma.%d" % i, VERIFIED if agree else FAILED))
    must = [r.item_id for r in reports]
    return reports, must


_SUITES = {
    "jing-ax-A2": lambda args: suite_jing_ax("A2", _maybe_strategy(args)),
    "jing-ax-C2": lambda args: suite_jing_ax("C2", _maybe_strategy(args)),
    "preserve-T1-A2~1": lambda args: suite_preserve_T1(
        "A2~1", _maybe_strategy(args), mutate=args.mutate,
        drop_rule=args.drop_rule),
    "braid-relations-A2~1": lambda args: suite_braid_relations(
        "A2~1", _maybe_strategy(args)),
    "duality-A2~1": lambda args: suite_duality("A2~1",
                                               _maybe_strategy(args)),
    "phi-series": lambda args: suite_phi_series(),
    "lusztig-oracle": lambda args: suite_lusztig(),
}


def _maybe_strategy(args):
    if getattr(args, "strategy", None) or getattr(args, "budget_nodes",
                                                  None):
        return _strategy_from_args(args)
    return None


def cmd_verify(args):
    if args.suite not in _SUITES:
        raise SystemExit("unknown suite %r (have %s)"
                         % (args.suite, ", ".join(sorted(_SUITES))))
    reports, must = _SUITES[args.suite](args)
    strat_name = getattr(args, "strategy", None) or "S2"
    text = _write_report(args, args.suite, strat_name, reports, must)
    if not args.out:
        print(text)
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    print("suite %s: %s" % (args.suite, ", ".join(
        "%d %s" % (v, k) for k, v in sorted(counts.items()))),
        file=sys.stderr)
    return suite_exit_code(reports, must)


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="qtor",
        description="Presentations, automorphisms, and braid-group actions "
                    "on quantum toroidal algebras, with a rewriting "
                    "verifier and an exact matrix oracle.")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("types", help="table of supported affine families")

    pc = sub.add_parser("cartan", help="Cartan data of one affine type")
    pc.add_argument("--type", dest="type", required=True)

    pr = sub.add_parser("relations", help="emit a relation suite as JSON")
    pr.add_argument("action", choices=["emit"])
    pr.add_argument("suite",
                    help="dj | affinization | toroidal-finite | ax")
    pr.add_argument("type_tag", help="affine tag (A2~1) or rank-2 name (A2)")
    pr.add_argument("--bounds", nargs=2, type=int, default=(2, 2),
                    metavar=("M", "R"))
    pr.add_argument("--out")

    pa = sub.add_parser("apply",
                        help="apply a morphism or braid word to an "
                             "expression")
    pa.add_argument("morphism",
                    help="eta | sigma | psi | Phi | braid word "
                         "(e.g. \"T1\", \"pi1\", \"T1 T2'\", \"X[1,0]\")")
    pa.add_argument("expression")
    pa.add_argument("--type", dest="type", default="A2~1")

    po = sub.add_parser("oracle", help="validate a matrix battery")
    po.add_argument("--type", dest="type", default="A2~1")
    po.add_argument("--battery")

    pv = sub.add_parser("verify", help="run a named verification suite")
    pv.add_argument("suite")
    pv.add_argument("--strategy")
    pv.add_argument("--budget-nodes", type=int, dest="budget_nodes")
    pv.add_argument("--budget-depth", type=int, dest="budget_depth")
    pv.add_argument("--battery")
    pv.add_argument("--out")
    pv.add_argument("--jobs", type=int, default=1,
                    help="worker pool size for independent items")
    pv.add_argument("--mutate", action="store_true",
                    help="negative control: flip one sign in the T1 table")
    pv.add_argument("--drop-rule", action="store_true", dest="drop_rule",
                    help="negative control: drop one rewrite rule")
    return p


_COMMANDS = {
    "types": cmd_types,
    "cartan": cmd_cartan,
    "relations": cmd_relations,
    "apply": cmd_apply,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
