"""Command-line front end.

Subcommands: generate, cover-ideal, power, decompose, ass, scan,
verify-theorem, export. Documents go to stdout (or --out); diagnostics go
to stderr. Exit codes: 0 success, 2 parse/usage error, 3 contract error,
4 capacity exhaustion.
"""

from __future__ import annotations

import argparse
import sys

from .decomposition import associated_primes, component_ideal, irredundant, irreducible_components
from .documents import (
    export_algebra_text,
    graph_payload,
    ideal_payload,
    parse_graph,
    report_document,
    serialize_graph,
)
from .errors import CapacityError, DocumentError
from .graphs import Graph, build_ht, build_odd_cycle
from .ideals import cover_ideal, edge_ideal, power
from .theorems import (
    closed_form_components,
    stabilization_scan,
    verify_power_decomposition,
)

EXIT_PARSE = 2
EXIT_CONTRACT = 3
EXIT_CAPACITY = 4


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_graph(path: str) -> tuple[Graph, str]:
    with open(path) as fh:
        return parse_graph(fh.read())


def _infer_ht_parameter(g: Graph) -> int:
    """The t with build_ht(t) == g (names, kinds and edges all equal)."""
    m = g.n_vertices
    t = 1 if m == 6 else (m + 1) // 5
    if t >= 1 and (m == 6 or m == 5 * t - 1) and g == build_ht(t):
        return t
    raise ValueError("graph is not an ht family member; closed form undefined")


def _graph_with_family(g: Graph) -> Graph:
    """Re-tag an ingested graph when it structurally equals an ht member."""
    try:
        t = _infer_ht_parameter(g)
    except ValueError:
        return g
    return build_ht(t)


def cmd_generate(args) -> None:
    if args.family == "ht":
        g = build_ht(args.parameter)
        name = f"ht-{args.parameter}"
    else:
        g = build_odd_cycle(args.parameter)
        name = f"odd-cycle-{args.parameter}"
    _emit(serialize_graph(g, name), args.out)


def cmd_cover_ideal(args) -> None:
    g, name = _load_graph(args.graph)
    ideal = cover_ideal(g, args.max_vertices)
    _emit(
        report_document("cover-ideal", {"graph": name}, {"ideal": ideal_payload(ideal)}),
        args.out,
    )


def cmd_power(args) -> None:
    g, name = _load_graph(args.graph)
    ideal = power(cover_ideal(g, args.max_vertices), args.n)
    _emit(
        report_document("power", {"graph": name, "n": args.n}, {"ideal": ideal_payload(ideal)}),
        args.out,
    )


def cmd_decompose(args) -> None:
    g, name = _load_graph(args.graph)
    params = {"graph": name, "n": args.n, "mode": args.mode}
    if args.mode == "brute":
        ideal = power(cover_ideal(g, args.max_vertices), args.n)
        comps = irredundant(irreducible_components(ideal))
        result = {
            "variables": list(g.vertices),
            "components": [list(c) for c in comps],
        }
    elif args.mode == "closed-form":
        t = _infer_ht_parameter(g)
        comps = closed_form_components(t, args.n)
        result = {
            "variables": list(g.vertices),
            "t": t,
            "components": [list(c) for c in comps],
        }
    else:  # verify
        t = _infer_ht_parameter(g)
        report = verify_power_decomposition(t, args.n)
        result = _decomposition_payload(report)
    _emit(report_document("decompose", params, result), args.out)


def _decomposition_payload(report) -> dict:
    return {
        "t": report.t,
        "n": report.n,
        "family_counts": report.family_counts,
        "component_count": report.component_count,
        "irredundant": report.irredundant,
        "oracle": report.oracle,
        "equal": report.equal,
        "components_match_brute": report.components_match_brute,
        "only_in_closed_form": [list(w) for w in report.only_in_closed_form],
        "only_in_power": [list(w) for w in report.only_in_power],
    }


def cmd_ass(args) -> None:
    g, name = _load_graph(args.graph)
    ideal = power(cover_ideal(g, args.max_vertices), args.n)
    primes = associated_primes(ideal)
    _emit(
        report_document(
            "ass",
            {"graph": name, "n": args.n},
            {"count": len(primes), "primes": [list(p) for p in primes]},
        ),
        args.out,
    )


def cmd_scan(args) -> None:
    g, name = _load_graph(args.graph)
    report = stabilization_scan(_graph_with_family(g), args.horizon, args.max_vertices)
    result = {
        "horizon": report.horizon,
        "completed_horizon": report.completed_horizon,
        "counts": list(report.counts),
        "first_stable_index": report.first_stable_index,
        "predicted": report.predicted,
        "classification_agreement": (
            None
            if report.classification_agreement is None
            else list(report.classification_agreement)
        ),
        "full_support_first": report.full_support_first,
        "monotone": report.monotone,
        "ass_sets": [[list(p) for p in s] for s in report.ass_sets],
    }
    _emit(report_document("scan", {"graph": name, "horizon": args.horizon}, result), args.out)


def cmd_verify_theorem(args) -> None:
    g, name = _load_graph(args.graph)
    t = _infer_ht_parameter(g)
    report = verify_power_decomposition(t, args.n)
    _emit(
        report_document(
            "verify-theorem", {"graph": name, "n": args.n}, _decomposition_payload(report)
        ),
        args.out,
    )


def cmd_export(args) -> None:
    g, _ = _load_graph(args.graph)
    base = cover_ideal(g, args.max_vertices) if args.ideal == "cover" else edge_ideal(g)
    ideal = power(base, args.n) if args.n > 1 else base
    _emit(export_algebra_text(ideal), args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coverideals",
        description="Cover ideals of graphs: powers, decompositions, associated primes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=True, n=False, horizon=False, mode=False):
        if graph:
            p.add_argument("--graph", required=True, help="graph document file")
        if n:
            p.add_argument("--n", type=int, required=True, help="power of the cover ideal")
        if horizon:
            p.add_argument("--horizon", type=int, required=True, help="largest power to scan")
        if mode:
            p.add_argument(
                "--mode",
                choices=("brute", "closed-form", "verify"),
                default="brute",
                help="decomposition route",
            )
        p.add_argument("--max-vertices", type=int, default=None, help="capacity cap override")
        p.add_argument("--out", default=None, help="write the document here instead of stdout")

    p = sub.add_parser("generate", help="emit a built-in family member")
    p.add_argument("family", choices=("ht", "odd-cycle"))
    p.add_argument("parameter", type=int)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("cover-ideal", help="minimal generators of the cover ideal")
    common(p)
    p.set_defaults(func=cmd_cover_ideal)

    p = sub.add_parser("power", help="minimal generators of a cover-ideal power")
    common(p, n=True)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("decompose", help="irreducible decomposition of a power")
    common(p, n=True, mode=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("ass", help="associated primes of a power")
    common(p, n=True)
    p.set_defaults(func=cmd_ass)

    p = sub.add_parser("scan", help="associated-prime stabilization scan")
    common(p, horizon=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-theorem", help="closed form vs brute force for an ht graph")
    common(p, n=True)
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("export", help="plain-text algebra export of an ideal")
    common(p)
    p.add_argument("--n", type=int, default=1, help="power to export")
    p.add_argument("--ideal", choices=("cover", "edge"), default="cover")
    p.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    return 0


if __name__ == "__main__":
    sys.exit(main())
