"""Command-line interface.

Exit codes: 0 success (and antimagic where a verdict is computed), 2 a
collision was detected, 1 usage problem or any other error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import AntimagicError
from .explore import EXHAUSTIVE, SAMPLED, permutation_census, sweep_ordered
from .formulas import TreeFormulaContext, incident_edge_indices, node_value, num_edges
from .graphs import (
    DEFAULT_EDGE_CAP,
    HIGH_MEMORY_EDGE_CAP,
    FAMILY_SWEEP_PARAM,
    TreeAddress,
    build_family,
    double_star,
)
from .labeling import ARBITRARY, EXPLICIT, ORDERED, label_arbitrary, label_explicit, label_ordered
from .primes import first_m_primes
from .serialize import JSON, export
from .table import reproduce_table, errata
from .verify import vertex_weights

FAMILY_CHOICES = ("pbt", "complete", "bipartite", "ladder", "wheel", "hypercube", "cbt")

# CLI flag names backing each family's generator parameters.
_FAMILY_PARAM_FLAGS = {
    "pbt": {"level": "level"},
    "cbt": {"levels": "level", "last_level_count": "last_count"},
    "complete": {"n": "n"},
    "bipartite": {"a": "a", "b": "b"},
    "ladder": {"n": "n"},
    "wheel": {"n": "n"},
    "hypercube": {"d": "d"},
}


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with code 1, not 2."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    p.add_argument("--level", type=int, help="tree level (pbt) or level count (cbt)")
    p.add_argument("--n", type=int, help="size for complete, ladder, and wheel graphs")
    p.add_argument("--a", type=int, help="first part size (bipartite)")
    p.add_argument("--b", type=int, help="second part size (bipartite)")
    p.add_argument("--d", type=int, help="hypercube dimension")
    p.add_argument("--last-count", type=int, help="deepest-level leaf count (cbt)")


def _add_mode_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=(ORDERED, ARBITRARY, EXPLICIT), default=ORDERED)
    p.add_argument("--seed", type=int, help="shuffle seed (arbitrary mode)")
    p.add_argument("--labels", help="comma-separated primes (explicit mode)")


def _add_output_args(p: argparse.ArgumentParser, formats: tuple[str, ...], default: str) -> None:
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--out", type=Path, help="write output here instead of stdout")


def _resolve_params(parser: _Parser, args: argparse.Namespace, skip: str | None = None) -> dict[str, int]:
    params = {}
    for name, flag in _FAMILY_PARAM_FLAGS[args.family].items():
        if name == skip:
            continue
        value = getattr(args, flag)
        if value is None:
            parser.error(f"family {args.family!r} requires --{flag.replace('_', '-')}")
        params[name] = value
    return params


def _build_graph(parser: _Parser, args: argparse.Namespace):
    cap = HIGH_MEMORY_EDGE_CAP if args.high_memory else DEFAULT_EDGE_CAP
    return build_family(args.family, cap=cap, **_resolve_params(parser, args))


def _build_labeling(parser: _Parser, args: argparse.Namespace, graph):
    if args.mode == ORDERED:
        return label_ordered(graph)
    if args.mode == ARBITRARY:
        if args.seed is None:
            parser.error("arbitrary mode requires --seed")
        return label_arbitrary(graph, args.seed)
    if args.labels is None:
        parser.error("explicit mode requires --labels")
    return label_explicit(graph, [int(x) for x in args.labels.split(",")])


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _cmd_label(parser: _Parser, args: argparse.Namespace) -> int:
    graph = _build_graph(parser, args)
    labeling = _build_labeling(parser, args, graph)
    _emit(export(labeling, args.format), args.out)
    return 0


def _cmd_verify(parser: _Parser, args: argparse.Namespace) -> int:
    graph = _build_graph(parser, args)
    labeling = _build_labeling(parser, args, graph)
    report = vertex_weights(graph, labeling)
    artifact = (labeling, report) if args.format == JSON else report
    _emit(export(artifact, args.format), args.out)
    if report.antimagic:
        print(f"antimagic: {graph.vertex_count} distinct vertex weights", file=sys.stderr)
        return 0
    print(
        f"collision: {report.collision_group_count} group(s) of equal weights",
        file=sys.stderr,
    )
    return 2


def _cmd_formula(parser: _Parser, args: argparse.Namespace) -> int:
    level, k, n = args.level, args.k, args.n
    ctx = TreeFormulaContext(level, first_m_primes(num_edges(level)))
    address = TreeAddress(level, k, n)
    value = node_value(ctx, address)
    indices = incident_edge_indices(level, k, n) if k >= 1 else (n,)
    primes = tuple(ctx.primes.nth(i) for i in indices)
    if args.format == JSON:
        doc = {
            "kind": "formula",
            "level": level,
            "level_from_bottom": k,
            "position": n,
            "edge_indices": list(indices),
            "primes": list(primes),
            "value": value,
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        terms = " + ".join(str(p) for p in primes)
        _emit(
            f"level {level}, level_from_bottom {k}, position {n}: "
            f"edge indices {list(indices)} -> {terms} = {value}\n",
            args.out,
        )
    return 0


def _cmd_table(parser: _Parser, args: argparse.Namespace) -> int:
    rows = reproduce_table(args.max_level, high_memory=args.high_memory)
    _emit(export(rows, args.format), args.out)
    found = errata(rows)
    for e in found:
        print(
            f"suspected erratum at level {e.level}, {e.column}: "
            f"published {e.published}, computed {e.computed}",
            file=sys.stderr,
        )
    if not found:
        print("no errata: all published cells reproduced", file=sys.stderr)
    return 0


def _cmd_explore(parser: _Parser, args: argparse.Namespace) -> int:
    if (args.param_range is None) == (args.census is None):
        parser.error("explore needs exactly one of --param-range or --census")
    if args.param_range is not None:
        try:
            lo, hi = (int(x) for x in args.param_range.split(":"))
        except ValueError:
            parser.error("--param-range expects START:STOP (inclusive)")
        swept = FAMILY_SWEEP_PARAM[args.family]
        fixed = _resolve_params(parser, args, skip=swept)
        entries = sweep_ordered(args.family, range(lo, hi + 1), fixed)
        _emit(export(entries, args.format), args.out)
        failures = sum(1 for e in entries if e.antimagic is False)
        errors = sum(1 for e in entries if e.error is not None)
        print(
            f"swept {len(entries)} value(s): {failures} collision(s), {errors} error(s)",
            file=sys.stderr,
        )
        return 2 if failures else 0

    graph = _build_graph(parser, args)
    if args.census == SAMPLED and (args.seed is None or args.samples is None):
        parser.error("sampled census requires --seed and --samples")
    result = permutation_census(
        graph,
        args.census,
        seed=args.seed,
        sample_size=args.samples,
        max_stored=args.max_stored,
    )
    _emit(export(result, args.format), args.out)
    print(
        f"census: {result.antimagic_count} of {result.total_tested} assignments antimagic",
        file=sys.stderr,
    )
    return 0


def _cmd_demo_collision(parser: _Parser, args: argparse.Namespace) -> int:
    graph = double_star(2, 2)
    labeling = label_explicit(graph, [11, 5, 2, 13, 3])
    report = vertex_weights(graph, labeling)
    _emit(export((labeling, report), args.format), args.out)
    for weight, vertices in report.collisions:
        names = ", ".join(graph.vertex_label(v) for v in vertices)
        print(f"weight {weight} shared by vertices {names}", file=sys.stderr)
    return 2 if not report.antimagic else 0


def build_parser() -> _Parser:
    parser = _Parser(prog="antimagic", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("label", help="label a graph's edges with primes")
    _add_family_args(p)
    _add_mode_args(p)
    _add_output_args(p, ("json", "dot"), "json")
    p.add_argument("--high-memory", action="store_true")
    p.set_defaults(handler=_cmd_label)

    p = sub.add_parser("verify", help="label, compute vertex weights, and report collisions")
    _add_family_args(p)
    _add_mode_args(p)
    _add_output_args(p, ("json", "csv"), "json")
    p.add_argument("--high-memory", action="store_true")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("formula", help="closed-form vertex value in a perfect binary tree")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--k", type=int, required=True, help="level from the bottom (0 = leaves)")
    p.add_argument("--n", type=int, required=True, help="1-based position within the level")
    _add_output_args(p, ("text", "json"), "text")
    p.set_defaults(handler=_cmd_formula)

    p = sub.add_parser("table", help="recompute the published weight table and flag errata")
    p.add_argument("--max-level", type=int, default=12)
    p.add_argument("--high-memory", action="store_true")
    _add_output_args(p, ("csv", "json"), "csv")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("explore", help="sweep ordered labelings or census permutations")
    _add_family_args(p)
    p.add_argument("--param-range", help="sweep the family's size parameter over START:STOP")
    p.add_argument("--census", choices=(EXHAUSTIVE, SAMPLED))
    p.add_argument("--seed", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--max-stored", type=int, default=10)
    p.add_argument("--high-memory", action="store_true")
    _add_output_args(p, ("csv", "json"), "csv")
    p.set_defaults(handler=_cmd_explore)

    p = sub.add_parser("demo-collision", help="replay the three-edge collision instance")
    _add_output_args(p, ("json",), "json")
    p.set_defaults(handler=_cmd_demo_collision)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(parser, args)
    except (AntimagicError, ValueError, OSError) as exc:
        print(f"antimagic: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
