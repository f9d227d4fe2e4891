"""Command-line front end.

Exit status: 0 when every assertion passes (or none apply), 1 when some
assertion fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from pathlib import Path

from . import chevalley, core, exclusion, graphs, parity, verify
from .errors import CNSSError
from .parser import format_poly, parse_poly
from .report import Assertion, Report, emit_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(",") if v != "")
    except ValueError as exc:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from exc


def _need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            flag = f"-{name}" if len(name) == 1 else f"--{name.replace('_', '-')}"
            raise UsageError(f"{flag} is required for {args.command}")


def _poly(args, text: str | None = None):
    _need(args, "p", "n")
    return parse_poly(args.expr if text is None else text, args.p, args.n)


def _exhaustive_agreement(f, g, points) -> bool:
    return all(f.value_at(x) == g.value_at(x) for x in points)


def _field_points(p, n, budget):
    core.check_budget(p**n, budget)
    return itertools.product(range(p), repeat=n)


def _bool_points(n, budget):
    return parity.boolean_points(n, budget)


def _parity_dict(r: parity.ParityReport | None):
    if r is None:
        return None
    return {"even_count": r.even_count, "odd_count": r.odd_count, "modulus": r.modulus, "set_kind": r.set_kind}


# subcommands


def cmd_eval(args) -> Report:
    f = _poly(args)
    point = _ints(args.at)
    value = f.value_at(point)
    return Report("eval", {"p": args.p, "n": args.n, "expr": format_poly(f), "at": list(point)}, {"value": value})


def cmd_reduce(args) -> Report:
    f = _poly(args)
    if args.mode == "field":
        g = f.reduce_field_map()
        points = _field_points(f.p, f.arity, args.budget)
        claim = "reduced form agrees with the input on F_p^n"
    else:
        g = f.reduce_boolean()
        points = _bool_points(f.arity, args.budget)
        claim = "reduced form agrees with the input on {0,1}^n"
    return Report(
        "reduce",
        {"p": args.p, "n": args.n, "expr": format_poly(f), "mode": args.mode},
        {"polynomial": format_poly(g)},
        [Assertion.check(claim, _exhaustive_agreement(f, g, points))],
    )


def cmd_supp(args) -> Report:
    f = _poly(args)
    vectors = core.supp_maximal(f) if args.maximal else core.supp(f)
    ordered = sorted(vectors, key=lambda e: (sum(e), e), reverse=True)
    return Report(
        "supp",
        {"p": args.p, "n": args.n, "expr": format_poly(f), "maximal": args.maximal},
        {"vectors": [list(e) for e in ordered], "total_degree": _degree(f)},
    )


def _degree(f):
    d = f.total_degree()
    return "-inf" if d == float("-inf") else d


def cmd_witness(args) -> Report:
    f = _poly(args)
    if args.grid_file:
        grid = core.Grid.parse(Path(args.grid_file).read_text(), args.p)
    elif args.grid:
        grid = core.Grid.parse(args.grid, args.p)
    else:
        grid = core.Grid.full(args.p, args.n)
    w = core.find_witness(f, grid, args.budget)
    inputs = {"p": args.p, "n": args.n, "expr": format_poly(f), "grid": [list(s) for s in grid.sets]}
    assertions = []
    target = core.generalized_guarantee(f, grid)
    claim = "a maximal support vector fits the grid, so a nonzero value exists"
    if target is None:
        assertions.append(Assertion.skipped(claim))
    else:
        assertions.append(Assertion.check(claim, w is not None))
    result = {"found": w is not None, "guarantee_vector": list(target) if target else None}
    if args.degrees:
        t = _ints(args.degrees)
        inputs["degrees"] = list(t)
        result["classic_hypothesis"] = core.classic_hypothesis(f, t)
    cert = {"point": list(w.point), "value": w.value} if w else None
    return Report("witness", inputs, result, assertions, cert)


def cmd_exclude(args) -> Report:
    kind = args.kind
    inputs = {"kind": kind, "p": args.p}
    if args.p is None:
        raise UsageError("-p is required for exclude")
    p = args.p
    if kind == "point":
        f = _poly(args)
        c = _ints(args.at or "")
        g = exclusion.exclude_point(f, c)
        inputs.update(n=args.n, expr=format_poly(f), at=list(c))
        fc = f.value_at(c)
        ok = _exhaustive_agreement(g, _Target(c, (-fc) % p), _field_points(p, f.arity, args.budget))
        assertions = [
            Assertion.check("g vanishes off c and equals -f(c) at c", ok),
            Assertion.check("(f + g)(c) = 0", (f + g).value_at(c) == 0),
        ]
    elif kind in ("boolean", "subset"):
        bits = _ints(args.bits or "")
        if not bits:
            raise UsageError("--bits is required for boolean and subset exclusions")
        b = exclusion.BooleanPoint(bits)
        inputs["bits"] = list(bits)
        if kind == "boolean":
            g = exclusion.exclude_boolean_point(b, p)
            want = p - 1
        else:
            g = exclusion.exclude_indicator_subset(b, p)
            want = (-1) ** (b.n - b.ones) % p
        ok = _exhaustive_agreement(g, _Target(bits, want), _bool_points(b.n, args.budget))
        assertions = [Assertion.check(f"value {want} at the excluded point, 0 elsewhere on {{0,1}}^n", ok)]
    elif kind == "axis":
        g = exclusion.axis_zero_exclusion(p)
        ok = all(g.value_at((a, b)) == (0 if a and b else (a or b)) for a, b in _field_points(p, 2, args.budget))
        assertions = [Assertion.check("g(a,0) = a, g(0,b) = b, zero elsewhere", ok)]
    else:
        g = exclusion.inverse_pair_exclusion(p)
        ok = all(
            g.value_at((a, b)) == (a * a % p if (a + b) % p == 0 else 0) for a, b in _field_points(p, 2, args.budget)
        )
        assertions = [Assertion.check("h(a,-a) = a^2, zero elsewhere", ok)]
    return Report("exclude", inputs, {"polynomial": format_poly(g)}, assertions)


class _Target:
    """Function equal to ``value`` at ``point`` and 0 elsewhere."""

    def __init__(self, point, value):
        self.point = tuple(point)
        self.value = value

    def value_at(self, x):
        return self.value if tuple(x) == self.point else 0


def _system(args) -> chevalley.PolySystem:
    if args.system:
        return chevalley.PolySystem.parse(Path(args.system).read_text())
    if args.poly:
        _need(args, "p", "n")
        return chevalley.PolySystem(tuple(parse_poly(t, args.p, args.n) for t in args.poly))
    raise UsageError("give --system FILE or one or more --poly EXPR")


def _system_inputs(s: chevalley.PolySystem) -> dict:
    return {"p": s.p, "n": s.n, "polys": [format_poly(f) for f in s.polys], "degree_sum": s.degree_sum}


def _prediction(pred: chevalley.ResiduePrediction) -> dict:
    return {"predicted": pred.predicted, "certificate": pred.certificate, "rule": pred.rule}


def cmd_chevalley(args) -> Report:
    s = _system(args)
    inputs = _system_inputs(s)
    action = args.action
    if action == "count":
        count = chevalley.count_common_roots(s, args.budget)
        return Report("chevalley count", inputs, {"count": count, "residue": count % s.p})
    if action == "warning":
        root = _ints(args.root) if args.root else None
        rep = chevalley.warning_check(s, root, args.budget)
        inputs["known_root"] = list(root) if root else None
        cert = {"second_root": list(rep.second_root)} if rep.second_root else None
        return Report("chevalley warning", inputs, {"count": rep.count, "residue": rep.residue}, rep.assertions, cert)
    oracle = chevalley.count_common_roots(s, args.budget)
    if action == "classify":
        pred = chevalley.theorem4_classify(s)
        claim = "+1/-1/0 classification matches the root count mod p"
        cert = {"q": pred.certificate}
    else:
        pred = chevalley.theorem5_predict(s)
        claim = "root count = (-1)^n d mod p"
        cert = {"d": pred.certificate}
    result = _prediction(pred) | {"oracle": oracle, "oracle_residue": oracle % s.p}
    if action == "predict":
        result["d"] = pred.certificate
    return Report(f"chevalley {action}", inputs, result,
                  [Assertion.check(claim, oracle % s.p == pred.predicted)], cert)


def cmd_parity(args) -> Report:
    action = args.action
    if action == "corollary":
        s = _system(args)
        inputs = _system_inputs(s)
        if args.subsets:
            res = parity.corollary_subset_parity(s, s.n, args.budget)
            inputs["set_size"] = s.n
        else:
            res = parity.corollary_shared_roots_parity(s, args.budget)
        result = {"hypothesis": res.hypothesis, "report": _parity_dict(res.report)}
        if res.degree_bound:
            result["degree_bound"] = list(res.degree_bound)
        return Report("parity corollary", inputs, result, res.assertions)
    f = _poly(args)
    inputs = {"p": args.p, "n": args.n, "expr": format_poly(f)}
    if action == "t6":
        res = parity.theorem6_check(f, args.budget)
        result = {
            "hypothesis": res.hypothesis,
            "reduced_hypothesis": res.reduced_hypothesis,
            "nonzero_set": _parity_dict(res.nonzero),
            "zero_set": _parity_dict(res.zero),
        }
        return Report("parity t6", inputs, result, res.assertions)
    if action == "t7":
        res = parity.theorem7_predict(f, args.budget)
        result = {
            "d": res.prediction.certificate,
            "predicted": res.prediction.predicted,
            "difference": res.report.difference,
            "report": _parity_dict(res.report),
            "field_map_coefficient": res.field_map_coefficient,
        }
        return Report("parity t7", inputs, result, res.assertions, {"d": res.prediction.certificate})
    res = parity.theorem8_analyze(f, args.budget)
    result = {"nonzero_points": res.nonzero_points, "has_top_term": res.has_top_term,
              "top_coefficient": res.top_coefficient}
    cert = None
    if res.single_point is not None:
        cert = {"point": list(res.single_point), "value": res.single_value}
    return Report("parity t8", inputs, result, res.assertions, cert)


def _graph(args) -> graphs.Graph:
    if not args.graph:
        raise UsageError("--graph FILE is required")
    return graphs.Graph.parse(Path(args.graph).read_text())


def cmd_graph(args) -> Report:
    G = _graph(args)
    action = args.action
    inputs = {"vertex_count": G.vertex_count, "edges": [list(e) for e in G.edges]}
    vertex_set = _ints(args.vertices) if args.vertices else None
    if action in ("degree-poly", "t9", "neighborhood", "clique-poly", "prop62"):
        _need(args, "p")
        inputs["p"] = args.p
    if action in ("cliques", "clique-poly", "prop62"):
        inputs["d"] = args.d
    if action in ("degree-poly", "t9", "neighborhood", "clique-poly"):
        inputs["k"] = args.k
    if action == "degree-poly":
        f = graphs.degree_subset_poly(G, args.k, args.p, vertex_set)
        return Report("graph degree-poly", inputs, {"polynomial": format_poly(f), "arity": f.arity})
    if action == "t9":
        res = graphs.theorem9_check(G, args.k, args.p, vertex_set, args.budget)
        return Report("graph t9", inputs, {"applies": res.applies, "bound": list(res.bound),
                                           "report": _parity_dict(res.report)}, res.assertions)
    if action == "neighborhood":
        if not vertex_set:
            raise UsageError("--vertices U is required for neighborhood")
        inputs["U"] = list(vertex_set)
        f = graphs.vertex_neighborhood_poly(G, vertex_set, args.k, args.p)
        subsets = list(graphs.neighborhood_subsets(G, vertex_set, args.k, args.p, args.budget))
        even = sum(1 for S in subsets if len(S) % 2 == 0)
        return Report("graph neighborhood", inputs, {
            "polynomial": format_poly(f),
            "qualifying_subsets": [list(S) for S in subsets],
            "even_count": even,
            "odd_count": len(subsets) - even,
        })
    if action == "cliques":
        I = vertex_set or ()
        inputs["I"] = list(I)
        return Report("graph cliques", inputs, {"count": graphs.clique_count_containing(G, args.d, I),
                                                "cliques": [list(c) for c in graphs.cliques(G, args.d)]})
    if action == "clique-poly":
        f = graphs.clique_intersection_poly(G, args.d, args.k, args.p)
        return Report("graph clique-poly", inputs, {"polynomial": format_poly(f), "arity": f.arity})
    res = graphs.prop62_search(G, args.d, args.p, args.budget)
    cert = {"subset": list(res.subset), "count": res.count} if res.subset else None
    return Report("graph prop62", inputs, {"found": res.subset is not None}, res.assertions, cert)


def cmd_verify(args) -> Report:
    seed = verify.DEFAULT_SEED if args.seed is None else args.seed
    results = verify.run_all(seed)
    lines = {r.name: {"cases": r.cases, "failures": r.failures[:20], "failure_count": len(r.failures),
                      "notes": r.notes, "seconds": round(r.seconds, 3)} for r in results}
    assertions = [Assertion.check(r.name, r.passed) for r in results]
    return Report("verify", {"seed": seed}, lines, assertions)


COMMANDS = {
    "eval": cmd_eval,
    "reduce": cmd_reduce,
    "supp": cmd_supp,
    "witness": cmd_witness,
    "exclude": cmd_exclude,
    "chevalley": cmd_chevalley,
    "parity": cmd_parity,
    "graph": cmd_graph,
    "verify": cmd_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-p", type=int, help="prime modulus")
    common.add_argument("-n", type=int, help="number of variables")
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    common.add_argument("--seed", type=int, help="seed for randomized corpora")
    common.add_argument("--budget", type=int, help="maximum number of enumerated points")

    parser = _Parser(prog="cnss", description="Combinatorial Nullstellensatz toolkit over prime fields")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common])

    p = add("eval", "evaluate a polynomial at a point")
    p.add_argument("expr")
    p.add_argument("--at", required=True, help="comma-separated residues")

    p = add("reduce", "evaluation-preserving exponent reduction")
    p.add_argument("expr")
    p.add_argument("--mode", choices=("field", "boolean"), default="field")

    p = add("supp", "support of a polynomial")
    p.add_argument("expr")
    p.add_argument("--maximal", action="store_true")

    p = add("witness", "first grid point with a nonzero value")
    p.add_argument("expr")
    p.add_argument("--grid", help="sets separated by ';', e.g. '0,1;0,1'")
    p.add_argument("--grid-file")
    p.add_argument("--degrees", help="degree profile t for the classic hypothesis")

    p = add("exclude", "build an exclusion polynomial")
    p.add_argument("expr", nargs="?")
    p.add_argument("--kind", choices=("point", "boolean", "subset", "axis", "inverse"), default="point")
    p.add_argument("--at", help="point to exclude (kind=point)")
    p.add_argument("--bits", help="Boolean point, e.g. 1,0,1 (kind=boolean|subset)")

    p = add("chevalley", "common roots of a polynomial system")
    p.add_argument("action", choices=("count", "warning", "classify", "predict"))
    p.add_argument("--system", help="system file")
    p.add_argument("--poly", action="append", help="system member (repeatable; needs -p and -n)")
    p.add_argument("--root", help="known common root for 'warning'")

    # nested so that each action takes its own positional and flags in any order
    p = sub.add_parser("parity", help="parity statements on {0,1}^n")
    actions = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name in ("t6", "t7", "t8"):
        actions.add_parser(name, parents=[common]).add_argument("expr")
    q = actions.add_parser("corollary", parents=[common])
    q.add_argument("--system")
    q.add_argument("--poly", action="append")
    q.add_argument("--subsets", action="store_true", help="subset form with the degree bound")

    p = add("graph", "graph polynomials and counts")
    p.add_argument("action", choices=("degree-poly", "t9", "neighborhood", "cliques", "clique-poly", "prop62"))
    p.add_argument("--graph", help="graph file")
    p.add_argument("-k", type=int, default=0)
    p.add_argument("-d", type=int, default=3, help="clique size")
    p.add_argument("--vertices", help="vertex subset (U, I, or the restricted vertex set for t9)")

    add("verify", "run the full property suite")
    return parser


def run_command(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "exclude" and args.kind == "point" and not args.expr:
            raise UsageError("a polynomial expression is required for kind=point")
        report = COMMANDS[args.command](args)
    except (UsageError, CNSSError, OSError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    out = emit_report(report, "json" if args.json else "text")
    if args.command == "eval" and not args.json:
        out = f"{report.result['value']}\n".encode()
    stdout.write(out.decode())
    return report.exit_status


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
