"""``edgering`` command line.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from .cone import canonical_generators, facet_description
from .errors import EdgeringError, InvalidSpec, NotTopBetti, TooLarge
from .formulas import evaluate, top_support
from .graph import MultiPathSpec, big_d, build_graph, theta
from .resolution import BettiTable, betti_table_monomial, pdim_of, reg_of
from .toric import MonomialOrder, degree_map, initial_ideal, primitive_walks
from .verify import verify

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def dumps(doc) -> str:
    """Canonical JSON: sorted keys, fixed indentation."""
    return json.dumps(doc, sort_keys=True, indent=2)


def multigraded_rows(table: BettiTable) -> list[dict]:
    return [{"i": i, "monomial": str(a), "beta": v} for (i, a), v in table.items()]


def graded_rows(graded: dict) -> list[dict]:
    return [{"i": i, "j": j, "beta": v} for (i, j), v in sorted(graded.items())]


def base_document(spec: MultiPathSpec, formula, checks=()) -> dict:
    return {
        "spec": {"paths": list(spec.lengths)},
        "pdim": formula.pdim,
        "mat": formula.mat,
        "reg": formula.reg,
        "multigraded": multigraded_rows(formula.multigraded),
        "graded": graded_rows(formula.graded),
        "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in checks],
    }


def latex_table(graded: dict) -> str:
    """Betti diagram with columns ``i`` and rows ``j - i``."""
    if not graded:
        return ""
    cols = range(max(i for i, _ in graded) + 1)
    rows = sorted({j - i for i, j in graded})
    lines = ["\\begin{array}{r|" + "c" * len(cols) + "}",
             " & " + " & ".join(map(str, cols)) + " \\\\ \\hline"]
    for r in rows:
        cells = [str(graded.get((i, i + r), 0) or "-") for i in cols]
        lines.append(f"{r} & " + " & ".join(cells) + " \\\\")
    lines.append("\\hline")
    totals = [sum(v for (i, _), v in graded.items() if i == c) for c in cols]
    lines.append("\\text{total} & " + " & ".join(map(str, totals)) + " \\\\")
    lines.append("\\end{array}")
    return "\n".join(lines)


def csv_text(rows: list[dict], fields: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def cmd_info(args) -> int:
    spec = args.spec
    formula = evaluate(spec)
    g = build_graph(spec)
    info = {
        "spec": {"paths": list(spec.lengths)},
        "vertices": len(g.vertices),
        "edges": len(spec.edges),
        "kind": spec.kind,
        "even_paths": list(spec.even_labels),
        "odd_paths": list(spec.odd_labels),
        "pdim": formula.pdim,
        "mat": formula.mat,
        "reg": formula.reg,
        "theta": str(theta(spec)),
        "D": str(big_d(spec)),
    }
    if args.format == "json":
        print(dumps(info))
    else:
        for key in ("vertices", "edges", "kind", "even_paths", "odd_paths",
                    "pdim", "mat", "reg", "theta", "D"):
            print(f"{key}: {info[key]}")
    return EXIT_OK


def cmd_betti(args) -> int:
    spec = args.spec
    formula = evaluate(spec)
    view = args.view or "graded"
    fmt = args.format
    if fmt == "json":
        doc = base_document(spec, formula)
        if view == "total":
            doc["totals"] = formula.totals
        print(dumps(doc))
    elif fmt == "latex":
        print(latex_table(formula.graded))
    elif view == "total":
        rows = [{"i": i, "beta": v} for i, v in enumerate(formula.totals)]
        print(csv_text(rows, ["i", "beta"]) if fmt == "csv" else
              "\n".join(f"beta_{r['i']} = {r['beta']}" for r in rows))
    elif view == "multigraded":
        rows = multigraded_rows(formula.multigraded)
        print(csv_text(rows, ["i", "monomial", "beta"]) if fmt == "csv" else
              "\n".join(f"beta_{r['i']},{r['monomial']} = {r['beta']}" for r in rows))
    else:
        rows = graded_rows(formula.graded)
        print(csv_text(rows, ["i", "j", "beta"]) if fmt == "csv" else
              "\n".join(f"beta_{r['i']},{r['j']} = {r['beta']}" for r in rows))
    return EXIT_OK


def cmd_oracle(args) -> int:
    spec = args.spec
    order = MonomialOrder.parse(args.order, spec)
    ideal = initial_ideal(spec, order, primitive_walks(spec))
    if args.emit == "initial":
        gens = [str(g) for g in ideal.generators]
        if args.format == "json":
            print(dumps({"spec": {"paths": list(spec.lengths)}, "order": order.describe(),
                         "generators": gens}))
        else:
            print("\n".join(gens) if gens else "0")
        return EXIT_OK
    table = betti_table_monomial(ideal, degree_map(spec), scale=2)
    if args.format == "json":
        print(dumps({"spec": {"paths": list(spec.lengths)}, "order": order.describe(),
                     "pdim": pdim_of(table), "reg": reg_of(table),
                     "totals": table.totals(),
                     "multigraded": multigraded_rows(table),
                     "graded": graded_rows(table.graded())}))
    else:
        print("totals: " + " ".join(map(str, table.totals())))
        for (i, a), v in table.items():
            print(f"beta_{i},{a} = {v}")
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = args.spec
    report = verify(spec, args.orders, strict=args.strict)
    if args.format == "json":
        doc = base_document(spec, report.formula, report.checks) if report.formula else {
            "spec": {"paths": list(spec.lengths)},
            "checks": [{"name": c.name, "status": c.status, "detail": c.detail}
                       for c in report.checks]}
        if report.best is not None:
            doc["best_order"] = report.best.label
            doc["oracle_multigraded"] = multigraded_rows(report.best.table)
        doc["passed"] = report.passed
        print(dumps(doc))
    else:
        for c in report.checks:
            print(f"{c.name:3} {c.status:9} {c.detail}")
        if report.best is not None:
            print(f"best order: {report.best.label}")
        print("PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_canonical(args) -> int:
    spec = args.spec
    try:
        support = top_support(spec)
    except NotTopBetti as exc:
        raise InvalidSpec(str(exc)) from None
    d = big_d(spec)
    if spec.is_bipartite:
        gens = canonical_generators(spec, support, facet_description(spec))
    else:
        gens = {d / a for a in support}
    doc = {"spec": {"paths": list(spec.lengths)},
           "top_support": sorted(map(str, support)),
           "generators": sorted(map(str, gens)),
           "D": str(d)}
    if args.format == "json":
        print(dumps(doc))
    else:
        print("top support:")
        for s in doc["top_support"]:
            print("  " + s)
        print("canonical generators (D/alpha):")
        for s in doc["generators"]:
            print("  " + s)
    return EXIT_OK


def _spec_arg(text: str) -> MultiPathSpec:
    try:
        return MultiPathSpec.parse(text)
    except InvalidSpec as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgering", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, formats=("text", "json")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--paths", dest="spec", type=_spec_arg, required=True,
                       help="comma separated path lengths, e.g. 2,2,3,3")
        p.add_argument("--format", choices=formats, default=formats[0])
        p.set_defaults(func=func)
        return p

    add("info", cmd_info, "graph invariants")
    p = add("betti", cmd_betti, "closed-form Betti tables",
            formats=("text", "json", "csv", "latex"))
    views = p.add_mutually_exclusive_group()
    views.add_argument("--graded", dest="view", action="store_const", const="graded")
    views.add_argument("--multigraded", dest="view", action="store_const", const="multigraded")
    views.add_argument("--total", dest="view", action="store_const", const="total")
    p = add("oracle", cmd_oracle, "brute-force Betti table of an initial ideal")
    p.add_argument("--order", default="lex:natural", help="KIND:natural or KIND:e1_1,e1_2,...")
    p.add_argument("--emit", choices=("initial", "betti"), default="betti")
    p = add("verify", cmd_verify, "compare the closed forms with the oracle")
    p.add_argument("--orders", default="blocks",
                   help="exhaustive | blocks | sampled:N:SEED")
    p.add_argument("--strict", action="store_true", help="treat soft checks as hard")
    add("canonical", cmd_canonical, "top support and canonical module generators")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"edgering: resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InvalidSpec, ValueError) as exc:
        print(f"edgering: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EdgeringError as exc:
        print(f"edgering: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
