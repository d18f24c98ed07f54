"""Command-line driver: ``generate``, ``search``, ``verify`` and ``reduce``.

Exit codes: 0 found / confirmed, 1 absent / refuted, 2 search budget
exhausted, 64 unreadable input or bad arguments, 65 input of the wrong type.
Every command prints ``key=value`` summary lines on stdout.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from .constructions import ConstructionParams
from .core import EdgeColoredGraph, SimpleDigraph, StandardMultigraph, color_degree_profile
from .io import ParseError, format_of, read_instance, write_instance
from .patterns import PatternSpec, SearchBudgetExceeded
from .transforms import build_gcm_digraph, digraph_to_multigraph, edge_minimal_reduce, two_cycle_graph
from .verify import check_li_triangle, check_multigraph_turan, property_suite

EXIT_FOUND, EXIT_ABSENT, EXIT_BUDGET, EXIT_PARSE, EXIT_TYPE = 0, 1, 2, 64, 65


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _kv(items: list[str]) -> dict[str, str]:
    out = {}
    for it in items:
        key, sep, val = it.partition("=")
        if not sep or not key:
            raise CliError(f"expected key=value, got {it!r}", EXIT_PARSE)
        out[key] = val
    return out


def _number(text: str):
    for conv in (int, Fraction, float):
        try:
            return conv(text)
        except ValueError:
            pass
    raise CliError(f"not a number: {text!r}", EXIT_PARSE)


def _summary(obj) -> str:
    tag = format_of(obj)
    if tag == "ecg":
        dmin, avg = color_degree_profile(obj) if obj.n else (0, 0)
        return f"type=ecg n={obj.n} edges={len(obj.color)} delta_c={dmin} avg_c={avg}"
    if tag == "mg":
        return f"type=mg n={obj.n} pairs={len(obj.mult)} e={obj.edge_count()}"
    outs = [obj.out_degree(v) for v in range(obj.n)]
    return f"type=dg n={obj.n} arcs={len(obj.arcs)} min_out={min(outs, default=0)}"


def _load(path: str):
    try:
        return read_instance(path)
    except ParseError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}", EXIT_PARSE) from None


def _expect(obj, cls, what: str):
    if not isinstance(obj, cls):
        raise CliError(f"{what} needs a {_tag(cls)} instance, got {format_of(obj)}", EXIT_TYPE)


def _tag(cls) -> str:
    return {EdgeColoredGraph: "ecg", StandardMultigraph: "mg", SimpleDigraph: "dg"}[cls]


# -- commands -------------------------------------------------------------------------


def cmd_generate(args) -> int:
    params = {k: _number(v) for k, v in _kv(args.params).items()}
    if "l" in params and "ell" not in params:
        params["ell"] = params.pop("l")
    try:
        obj = ConstructionParams(args.kind, params, seed=args.seed).build()
    except (ValueError, TypeError) as exc:
        raise CliError(f"generate {args.kind}: {exc}", EXIT_PARSE) from None
    if args.out:
        write_instance(obj, args.out)
    print(_summary(obj))
    return EXIT_FOUND


def _pattern(args) -> PatternSpec:
    chosen = [
        x for x in ("rainbow_clique", "rainbow_join", "mg_pattern", "dg_pattern", "cyclic_triangle") if getattr(args, x)
    ]
    if len(chosen) != 1:
        raise CliError("give exactly one pattern flag", EXIT_PARSE)
    try:
        if args.rainbow_clique:
            return PatternSpec("rainbow_clique", s=args.rainbow_clique)
        if args.cyclic_triangle:
            return PatternSpec("cyclic_triangle")
        kv = {k: int(v) for k, v in _kv(args.rainbow_join or args.mg_pattern or args.dg_pattern).items()}
        if args.rainbow_join:
            return PatternSpec("rainbow_join", s=kv["s"], r=kv.get("r", 0), ell=kv.get("ell", kv.get("l", 1)))
        if args.mg_pattern:
            return PatternSpec("multigraph", s=kv["s"], r=kv.get("r", 0))
        return PatternSpec("digraph", s=kv["s"], r=kv.get("r", 0), with_triangle=bool(kv.get("triangle", 0)))
    except KeyError as exc:
        raise CliError(f"pattern needs parameter {exc.args[0]}", EXIT_PARSE) from None
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None


_HOST = {
    "rainbow_clique": EdgeColoredGraph,
    "rainbow_join": EdgeColoredGraph,
    "multigraph": StandardMultigraph,
    "digraph": SimpleDigraph,
    "cyclic_triangle": SimpleDigraph,
}


def cmd_search(args) -> int:
    spec = _pattern(args)
    host = _load(args.input)
    _expect(host, _HOST[spec.kind], spec.kind.replace("_", "-"))
    try:
        w = spec.search(host, max_nodes=args.budget)
    except SearchBudgetExceeded as exc:
        print(f"found=unknown reason=budget nodes={exc.nodes}")
        return EXIT_BUDGET
    if w is None:
        print("found=0")
        return EXIT_ABSENT
    line = "found=1 vertices=" + ",".join(map(str, w.vertices))
    if w.parts:
        line += " parts=" + "|".join(",".join(map(str, p)) for p in w.parts)
    print(line)
    return EXIT_FOUND


def cmd_verify(args) -> int:
    kv = _kv(args.params)
    threads = args.threads
    try:
        if args.campaign == "li-triangle":
            rep = check_li_triangle(
                int(kv["n"]), mode=kv.get("mode", "pruned"), threads=threads, budget=args.budget
            )
        elif args.campaign == "multigraph-turan":
            r = int(kv["r"]) if "r" in kv else None
            st = int(kv["statement"]) if "statement" in kv else None
            rep = check_multigraph_turan(
                int(kv["n"]),
                int(kv["s"]),
                r=r,
                statement=st,
                mode=kv.get("mode", "exhaustive"),
                samples=int(kv.get("samples", 1000)),
                seed=int(kv.get("seed", 0)),
                threads=threads,
            )
        else:
            obs = tuple(kv["observations"].split(",")) if "observations" in kv else None
            rep = property_suite(
                int(kv.get("trials", 1000)),
                seed=int(kv.get("seed", 0)),
                observations=obs,
                n_max=int(kv.get("n_max", 30)),
                threads=threads,
            )
    except KeyError as exc:
        raise CliError(f"{args.campaign} needs parameter {exc.args[0]}", EXIT_PARSE) from None
    except ValueError as exc:
        raise CliError(f"{args.campaign}: {exc}", EXIT_PARSE) from None
    print(rep.summary())
    if args.out:
        Path(args.out).write_text(rep.to_json() if args.format == "json" else rep.to_text())
    return {"confirmed": EXIT_FOUND, "refuted": EXIT_ABSENT}.get(rep.verdict, EXIT_BUDGET)


REDUCE_MODES = ("edge-minimal", "gcm-digraph", "two-cycle", "to-multigraph")


def cmd_reduce(args) -> int:
    mode, params = args.mode[0], args.mode[1:]
    if mode not in REDUCE_MODES:
        raise CliError(f"unknown mode {mode!r}; choose from {', '.join(REDUCE_MODES)}", EXIT_PARSE)
    if params and mode != "gcm-digraph":
        raise CliError(f"mode {mode} takes no parameters", EXIT_PARSE)
    host = _load(args.input)
    if mode == "edge-minimal":
        _expect(host, EdgeColoredGraph, mode)
        out, trace = edge_minimal_reduce(host)
        extra = f" trace_length={len(trace.deleted_edges)} rounds={trace.rounds}"
    elif mode == "gcm-digraph":
        _expect(host, EdgeColoredGraph, mode)
        text = _kv(params).get("m", "max")
        m = max(1, host.n - 1) if text == "max" else _number(text)
        try:
            out = build_gcm_digraph(host, m)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_PARSE) from None
        extra = f" m={m}"
    elif mode == "two-cycle":
        _expect(host, SimpleDigraph, mode)
        g = two_cycle_graph(host)
        out = StandardMultigraph(host.n, {e: 1 for e in g.edges})
        extra = ""
    else:
        _expect(host, SimpleDigraph, mode)
        out = digraph_to_multigraph(host)
        extra = ""
    if args.out:
        write_instance(out, args.out)
    print(_summary(out) + extra)
    return EXIT_FOUND


# -- entry point ------------------------------------------------------------------------


def _default_threads() -> int:
    raw = os.environ.get("RF_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rainbowcliques", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build a named construction")
    g.add_argument("kind")
    g.add_argument("params", nargs="*", metavar="key=value")
    g.add_argument("--seed", type=int)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("search", help="look for a pattern in an instance file")
    s.add_argument("input")
    s.add_argument("--rainbow-clique", type=int, metavar="S")
    s.add_argument("--rainbow-join", nargs="+", metavar="key=value", help="s=, r=, ell=")
    s.add_argument("--mg-pattern", nargs="+", metavar="key=value", help="s=, r=")
    s.add_argument("--dg-pattern", nargs="+", metavar="key=value", help="s=, r=, triangle=0|1")
    s.add_argument("--cyclic-triangle", action="store_true")
    s.add_argument("--budget", type=int, help="cap on search nodes")
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify", help="run a verification campaign")
    v.add_argument("campaign", choices=["li-triangle", "multigraph-turan", "property-suite"])
    v.add_argument("params", nargs="*", metavar="key=value")
    v.add_argument("--threads", type=int, default=_default_threads())
    v.add_argument("--budget", type=int, help="cap on search nodes per task")
    v.add_argument("--out", help="write the full report here")
    v.add_argument("--format", choices=["json", "text"], default="json")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("reduce", help="apply a transformation")
    r.add_argument("input")
    r.add_argument(
        "--mode",
        required=True,
        nargs="+",
        metavar="MODE",
        help="edge-minimal | gcm-digraph [m=<number>|max] | two-cycle | to-multigraph",
    )
    r.add_argument("--out")
    r.set_defaults(func=cmd_reduce)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
