"""Command-line interface: ``endograph build|analyze|verify|hunt|list-groups|table``.

Group selectors::

    cyclic:N            Z_N
    abelian:2^3x2       Z8 x Z2 (factors p^a or plain moduli, x-separated)
    quaternion          Q8
    dihedral:N          symmetries of the N-gon (order 2N)
    symmetric:N         S_N
    alternating:N       A_N
    catalog:NAME        catalog entry by name, e.g. catalog:Dic3
    catalog:N           the catalog group of order N (when unique)
    catalog:N.K         K-th catalog group of order N (1-based)

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import graphs as gk
from .builders import GraphKind, build_with_info
from .catalog import MAX_CATALOG_ORDER, catalog_group, catalog_groups_up_to
from .groups import (AbelianShape, DEFAULT_CAP, Group, GroupSizeError, UnsupportedError,
                     abelian_shape, is_abelian, make_abelian, make_alternating,
                     make_cyclic, make_dihedral, make_quaternion, make_symmetric)
from .morphisms import DEFAULT_ENUM_BUDGET, BudgetExceeded
from .verify import ConfigError, VerifyConfig, hunt_converse_counterexample, run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(ValueError):
    pass


_FACTOR = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_abelian(spec: str) -> AbelianShape:
    moduli = []
    for tok in spec.split("x"):
        m = _FACTOR.match(tok.strip())
        if not m:
            raise UsageError(f"bad abelian factor {tok!r} (expected p^a or an integer)")
        base, exp = int(m.group(1)), int(m.group(2) or 1)
        if base < 1:
            raise UsageError(f"bad abelian factor {tok!r}")
        moduli.append(base ** exp)
    return AbelianShape.from_moduli(moduli)


def _int_param(family: str, text: str, lo: int) -> int:
    if not text.isdigit() or int(text) < lo:
        raise UsageError(f"{family}: expected an integer >= {lo}, got {text!r}")
    return int(text)


def parse_group(selector: str) -> Group:
    """Resolve a selector string to one group; raises ``UsageError`` when invalid."""
    family, _, arg = selector.strip().partition(":")
    family = family.lower()
    if family == "cyclic":
        n = _int_param(family, arg, 1)
        if n > DEFAULT_CAP:
            raise UsageError(f"cyclic:{n} exceeds the order cap {DEFAULT_CAP}")
        return make_cyclic(n)
    if family == "abelian":
        if not arg:
            raise UsageError("abelian: missing factor list")
        shape = parse_abelian(arg)
        if shape.order > DEFAULT_CAP:
            raise UsageError(f"abelian:{arg} has order {shape.order} > cap {DEFAULT_CAP}")
        return make_abelian(shape)
    if family == "quaternion" and not arg:
        return make_quaternion()
    if family == "dihedral":
        return make_dihedral(_int_param(family, arg, 3))
    if family == "symmetric":
        return make_symmetric(_int_param(family, arg, 1))
    if family == "alternating":
        return make_alternating(_int_param(family, arg, 1))
    if family == "catalog":
        return _parse_catalog(arg)
    raise UsageError(f"unknown group selector {selector!r}")


def _parse_catalog(arg: str) -> Group:
    m = re.match(r"^(\d+)(?:\.(\d+))?$", arg)
    if not m:
        try:
            return catalog_group(arg)
        except KeyError:
            raise UsageError(f"no catalog group named {arg!r}") from None
    n = int(m.group(1))
    if not 1 <= n <= MAX_CATALOG_ORDER:
        raise UsageError(f"catalog orders run from 1 to {MAX_CATALOG_ORDER}")
    same = [g for g in catalog_groups_up_to(n) if g.order == n]
    if m.group(2) is None:
        if len(same) != 1:
            names = ", ".join(g.name for g in same)
            raise UsageError(f"order {n} has {len(same)} catalog groups ({names}); use catalog:{n}.K")
        return same[0]
    k = int(m.group(2))
    if not 1 <= k <= len(same):
        raise UsageError(f"catalog:{n}.{k}: order {n} has {len(same)} groups")
    return same[k - 1]


# -- commands -----------------------------------------------------------------


def _structured_labels(g: Group, graph) -> list[str]:
    if g.coords is not None:
        return ["(" + ",".join(str(c) for c in g.coords[v]) + ")" for v in graph.labels]
    return [str(v) for v in graph.labels]


def _render_graph(g: Group, graph, info, fmt: str, labels: bool) -> str:
    if fmt == "json":
        obj = gk.to_json_obj(graph)
        obj = {"group": g.descriptor_json(), "kind": info.kind.value,
               "delete_identity": info.delete_identity, "strategy": info.strategy, **obj}
        if labels:
            obj["element_labels"] = _structured_labels(g, graph)
        return json.dumps(obj, indent=2) + "\n"
    if fmt == "dot":
        if not labels:
            return gk.to_dot(graph)
        names = _structured_labels(g, graph)
        lines = gk.to_dot(graph).splitlines()
        out = [lines[0]]
        out += [f'  {lab} [label="{name}"];' for lab, name in zip(graph.labels, names)]
        out += lines[1 + graph.n:]
        return "\n".join(out) + "\n"
    pairs = graph.arcs() if graph.directed else graph.edges()
    sep = "->" if graph.directed else "--"
    names = _structured_labels(g, graph) if labels else [str(v) for v in graph.labels]
    head = (f"{info.kind.value} graph of {g.name}: {graph.n} vertices, {len(pairs)} "
            f"{'arcs' if graph.directed else 'edges'}")
    return "\n".join([head] + [f"{names[a]} {sep} {names[b]}" for a, b in pairs]) + "\n"


def analyze_graph(g: Group, graph, info) -> dict:
    simple = gk.underlying_simple_graph(graph) if graph.directed else graph
    girth = gk.girth(simple)
    out = {
        "group": g.descriptor_json(),
        "kind": info.kind.value,
        "delete_identity": info.delete_identity,
        "strategy": info.strategy,
        "vertices": graph.n,
        "edges": simple.edge_count,
        "girth": None if girth == gk.INF else int(girth),
        "planar": gk.is_planar(simple),
        "bipartite": gk.is_bipartite(simple),
        "tree": gk.is_tree(simple),
        "complete": gk.is_complete(simple),
        "connected": gk.is_connected(simple),
        "maximal_cliques": len(gk.maximal_cliques(simple)),
    }
    if graph.directed:
        out["arcs"] = graph.arc_count
        out["single_point_basis"] = gk.has_single_point_basis(graph)
        out["point_basis"] = gk.minimum_point_basis(graph)
        out["strongly_connected"] = gk.is_strongly_connected(graph)
    if is_abelian(g):
        out["abelian_shape"] = str(abelian_shape(g))
    return out


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_build(args) -> int:
    g = parse_group(args.group)
    graph, info = build_with_info(g, args.kind, args.delete_identity, args.max_enum_budget)
    fmt = args.format or "dot"
    _emit(_render_graph(g, graph, info, fmt, args.labels), args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    g = parse_group(args.group)
    graph, info = build_with_info(g, args.kind, args.delete_identity, args.max_enum_budget)
    report = analyze_graph(g, graph, info)
    if (args.format or "text") == "json":
        text = json.dumps(report, indent=2) + "\n"
    else:
        width = max(len(k) for k in report)
        rows = []
        for k, v in report.items():
            if k == "group":
                v = v["name"]
            rows.append(f"{k:<{width}}  {json.dumps(v) if not isinstance(v, str) else v}")
        text = "\n".join(rows) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _verify_config(args, only=None) -> VerifyConfig:
    cfg = VerifyConfig(budget=args.max_enum_budget, timings=args.timings)
    if getattr(args, "max_order", None) is not None:
        cfg.catalog_max = args.max_order
    if getattr(args, "max_n", None) is not None:
        cfg.formula_max_n = args.max_n
        cfg.power_max_n = min(args.max_n, cfg.power_max_n)
    if getattr(args, "max_abelian", None) is not None:
        cfg.abelian_max = min(args.max_abelian, cfg.abelian_max)
        cfg.abelian_fast_max = args.max_abelian
        cfg.oracle_max = min(args.max_abelian, cfg.oracle_max)
    cfg.only = tuple(only) if only else None
    cfg.validate()
    return cfg


def cmd_verify(args) -> int:
    only = [x for part in (args.only or []) for x in part.split(",") if x]
    cfg = _verify_config(args, only)
    report = run_all(cfg)
    fmt = args.format or "text"
    text = report.to_json(args.timings) + "\n" if fmt == "json" else report.to_text(args.timings)
    _emit(text, args.out)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report.to_json(args.timings) + "\n")
    return EXIT_OK if report.verdict == "pass" else EXIT_FAIL


def cmd_hunt(args) -> int:
    if args.max_order is not None and args.max_order > MAX_CATALOG_ORDER:
        raise UnsupportedError(f"catalog stops at order {MAX_CATALOG_ORDER}")
    cfg = _verify_config(args)
    check = hunt_converse_counterexample(cfg)
    if (args.format or "text") == "json":
        text = json.dumps(check.to_json(False), indent=2) + "\n"
    else:
        from .verify import VerificationReport
        text = VerificationReport([check], {}).to_text().rsplit("verdict:", 1)[0]
    _emit(text, args.out)
    return EXIT_OK


def cmd_list_groups(args) -> int:
    limit = args.max_order if args.max_order is not None else MAX_CATALOG_ORDER
    groups = catalog_groups_up_to(limit)
    if (args.format or "text") == "json":
        text = json.dumps([g.descriptor_json() for g in groups], indent=2) + "\n"
    else:
        counts: dict[int, int] = {}
        rows = []
        for g in groups:
            counts[g.order] = counts.get(g.order, 0) + 1
            rows.append(f"catalog:{g.order}.{counts[g.order]:<3} {g.name:<10} order {g.order:>2}  "
                        f"{'abelian' if is_abelian(g) else 'non-abelian'}")
        text = "\n".join(rows) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_table(args) -> int:
    g = parse_group(args.group)
    obj = {"group": g.descriptor_json(), "table": g.table.tolist(),
           "element_orders": list(g.elem_order)}
    if g.coords is not None:
        obj["coordinates"] = [list(c) for c in g.coords]
    _emit(json.dumps(obj) + "\n", args.out)
    return EXIT_OK


# -- parser -------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["dot", "json", "text"])
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--max-enum-budget", type=int, default=DEFAULT_ENUM_BUDGET,
                        help="cap on generator-image combinations for exhaustive search")
    common.add_argument("--seedless", action="store_true",
                        help="accepted for compatibility; every command is deterministic")

    graph = _Parser(add_help=False)
    graph.add_argument("--group", required=True, help="group selector, e.g. cyclic:6")
    graph.add_argument("--kind", default="endo", choices=[k.value for k in GraphKind])
    graph.add_argument("--delete-identity", action="store_true")

    p = _Parser(prog="endograph", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    b = sub.add_parser("build", parents=[common, graph], help="export a graph as DOT/JSON/text")
    b.add_argument("--labels", action="store_true",
                   help="label vertices by coordinates when the group has them")
    b.set_defaults(func=cmd_build)

    a = sub.add_parser("analyze", parents=[common, graph], help="graph property summary")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", parents=[common], help="run the theorem checks")
    v.add_argument("--only", action="append", help="check id(s), comma-separated or repeated")
    v.add_argument("--max-n", type=int, help="largest n for the cyclic sweeps")
    v.add_argument("--max-order", type=int, help="largest catalog order (<= 15)")
    v.add_argument("--max-abelian", type=int, help="largest abelian order for the shape sweeps")
    v.add_argument("--report", help="also write the JSON report here")
    v.add_argument("--timings", action="store_true", help="include per-check runtimes")
    v.set_defaults(func=cmd_verify)

    h = sub.add_parser("hunt", parents=[common], help="search for non-isomorphic groups with "
                       "isomorphic directed endomorphism graphs")
    h.add_argument("--max-order", type=int, help="largest catalog order (<= 15)")
    h.set_defaults(func=cmd_hunt, timings=False)

    lg = sub.add_parser("list-groups", parents=[common], help="list the catalog")
    lg.add_argument("--max-order", type=int)
    lg.set_defaults(func=cmd_list_groups)

    t = sub.add_parser("table", parents=[common], help="dump a Cayley table as JSON")
    t.add_argument("--group", required=True)
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.max_enum_budget < 1:
            raise UsageError("--max-enum-budget must be positive")
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"endograph: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except gk.CliqueOverflow as exc:
        print(f"endograph: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ConfigError, UnsupportedError, GroupSizeError, gk.GraphSizeError) as exc:
        print(f"endograph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"endograph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
