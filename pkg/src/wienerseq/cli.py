"""Command line front end.

Subcommands: compute, compare, construct, enumerate, verify, explore.
Exit codes: 0 success (verification passed / relation comparable),
1 violation found (or incomparable sequences), 2 usage error,
3 input error.  Identical configurations produce byte-identical outputs
apart from the timing fields.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field

import wienerseq
from wienerseq.enumeration import enumerate_class, parse_class_spec
from wienerseq.families import parse_family_spec
from wienerseq.graphs import (
    DisconnectedGraphError,
    Graph,
    GraphFormatError,
    parse_edge_list,
    parse_graph6,
    write_graph6,
)
from wienerseq.indices import evaluate, evaluate_exact, parse_index_spec
from wienerseq.sequences import Dominance, compare, distance_sequence
from wienerseq.verifier import SUITES, csv_summary

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    families: list[str] = field(default_factory=list)
    klass: str | None = None
    suite: str | None = None
    indices: list[str] = field(default_factory=list)
    fmt: str | None = None
    jobs: int = 1
    shards: int = 1
    max_n: int | None = None
    out: str | None = None
    seed: int | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def _default_jobs() -> int:
    env = os.environ.get("WIENERSEQ_JOBS")
    if env is None:
        return 1
    try:
        jobs = int(env)
    except ValueError:
        raise UsageError("WIENERSEQ_JOBS must be an integer, got %r" % env) from None
    if jobs < 1:
        raise UsageError("WIENERSEQ_JOBS must be positive, got %d" % jobs)
    return jobs


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wienerseq",
        description="Distance sequences, Wiener-type indices, and exhaustive "
        "dominance verification for small graphs.",
    )
    parser.add_argument(
        "--version", action="version", version="wienerseq %s" % wienerseq.__version__
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser, *, inputs: bool = False) -> None:
        if inputs:
            p.add_argument(
                "--input",
                action="append",
                default=[],
                metavar="SRC",
                help="graph source: a file path, an inline graph6 record, or - for stdin",
            )
            p.add_argument(
                "--family",
                action="append",
                default=[],
                metavar="SPEC",
                help="constructed graph, e.g. pk:6,8 cyclepow:8,2 pathpow:6,2 "
                "oddcat:6 star:5 path:5 cycle:5 complete:5",
            )
        p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
        p.add_argument("--format", dest="fmt", help="output format")

    p = sub.add_parser("compute", help="distance sequence and index values of one graph")
    add_io(p, inputs=True)
    p.add_argument(
        "--index",
        action="append",
        default=[],
        metavar="NAME[:LAMBDA]",
        help="index to evaluate; repeatable",
    )

    p = sub.add_parser("compare", help="dominance comparison of two graphs")
    add_io(p, inputs=True)

    p = sub.add_parser("construct", help="emit a constructed family member")
    add_io(p, inputs=True)

    p = sub.add_parser("enumerate", help="stream a graph class as graph6 records")
    p.add_argument("--class", dest="klass", required=True, metavar="SPEC",
                   help="class spec, e.g. connected:6 k_tree:8,2 odd_tree:10")
    p.add_argument("--max-n", type=int, dest="max_n")
    add_io(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, metavar="SPEC",
                   help="suite spec, e.g. order_size:6 connectivity:6,2 "
                   "k_degenerate:6,2[,k_tree] odd_trees:10 deletion:5")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--shards", type=int, default=None)
    p.add_argument("--max-n", type=int, dest="max_n")
    add_io(p)

    p = sub.add_parser("explore", help="search maximal planar graphs for a counterexample")
    p.add_argument("--class", dest="klass", required=True, metavar="SPEC",
                   help="search spec: maximal_planar:n")
    p.add_argument("--apollonian-only", action="store_true",
                   help="restrict to planar 3-trees (partial coverage)")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--shards", type=int, default=None)
    p.add_argument("--max-n", type=int, dest="max_n")
    add_io(p)

    for sp in sub.choices.values():
        sp.add_argument("--seed", type=int, default=None,
                        help="seed recorded in the resolved configuration")
    return parser


def _load_graph(source: str, fmt: str | None) -> Graph:
    if source == "-":
        text = sys.stdin.read()
        return _parse_graph_text(text, fmt)
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return _parse_graph_text(fh.read(), fmt)
    # not a file: treat as an inline graph6 record
    try:
        return parse_graph6(source)
    except GraphFormatError as exc:
        raise InputError("cannot read %r: not a file and not graph6 (%s)" % (source, exc)) from exc


def _parse_graph_text(text: str, fmt: str | None) -> Graph:
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt is not None and fmt not in ("auto",):
        raise UsageError("unknown input format %r" % fmt)
    stripped = text.strip().splitlines()
    if stripped and stripped[0].strip().isdigit():
        return parse_edge_list(text)
    return parse_graph6(text)


def _gather_graphs(args: argparse.Namespace, cfg: RunConfig) -> list[Graph]:
    graphs = []
    for src in args.input:
        graphs.append(_load_graph(src, None))
    for spec in args.family:
        try:
            graphs.append(parse_family_spec(spec))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    return graphs


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _header(cfg: RunConfig) -> dict:
    return {"version": wienerseq.__version__, "config": cfg.to_dict()}


def _cmd_compute(args: argparse.Namespace, cfg: RunConfig) -> int:
    graphs = _gather_graphs(args, cfg)
    if len(graphs) != 1:
        raise UsageError("compute expects exactly one --input or --family")
    g = graphs[0]
    defs = []
    for spec in args.index:
        try:
            defs.append(parse_index_spec(spec))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    seq = distance_sequence(g)
    rows = []
    for defn in defs:
        entry: dict = {"name": defn.name, "value": evaluate(defn, seq)}
        if defn.lam is not None:
            entry["lambda"] = defn.lam
        exact = evaluate_exact(defn, seq)
        if exact is not None:
            entry["exact_value"] = str(exact)
        rows.append(entry)
    if cfg.fmt == "json":
        doc = _header(cfg) | {
            "n": g.n,
            "m": g.m,
            "distance_sequence": seq.to_pairs(),
            "indices": rows,
        }
        _emit(json.dumps(doc, indent=2, sort_keys=True), cfg.out)
    else:
        lines = [
            "graph: n=%d m=%d" % (g.n, g.m),
            "distance sequence: %s" % seq.to_text(),
        ]
        for entry in rows:
            shown = entry["name"]
            if "lambda" in entry:
                shown = "%s:%g" % (shown, entry["lambda"])
            if "exact_value" in entry:
                lines.append("%s = %s" % (shown, entry["exact_value"]))
            else:
                lines.append("%s = %.12g" % (shown, entry["value"]))
        _emit("\n".join(lines), cfg.out)
    return EXIT_OK


def _cmd_compare(args: argparse.Namespace, cfg: RunConfig) -> int:
    graphs = _gather_graphs(args, cfg)
    if len(graphs) != 2:
        raise UsageError("compare expects exactly two graphs (--input/--family)")
    a, b = (distance_sequence(g) for g in graphs)
    try:
        rel = compare(a, b)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if cfg.fmt == "json":
        doc = _header(cfg) | {
            "left": a.to_pairs(),
            "right": b.to_pairs(),
            "relation": rel.tag.value,
            "less_at": rel.less_at,
            "greater_at": rel.greater_at,
        }
        _emit(json.dumps(doc, indent=2, sort_keys=True), cfg.out)
    else:
        lines = [
            "left:  %s" % a.to_text(),
            "right: %s" % b.to_text(),
            "relation: %s" % rel.tag.value,
        ]
        if rel.less_at is not None:
            lines.append("first strictly smaller coordinate: %d" % rel.less_at)
        if rel.greater_at is not None:
            lines.append("first strictly larger coordinate: %d" % rel.greater_at)
        _emit("\n".join(lines), cfg.out)
    return EXIT_VIOLATION if rel.tag == Dominance.INCOMPARABLE else EXIT_OK


def _cmd_construct(args: argparse.Namespace, cfg: RunConfig) -> int:
    graphs = _gather_graphs(args, cfg)
    if len(graphs) != 1 or args.input:
        raise UsageError("construct expects exactly one --family")
    g = graphs[0]
    if cfg.fmt == "edgelist":
        lines = [str(g.n)] + ["%d %d" % e for e in g.edges]
        _emit("\n".join(lines), cfg.out)
    else:
        _emit(write_graph6(g), cfg.out)
    return EXIT_OK


def _parse_suite_spec(spec: str) -> tuple[str, dict]:
    name, sep, arg_text = spec.partition(":")
    name = name.strip()
    if name not in SUITES or name == "maximal_planar":
        raise UsageError("unknown suite %r" % name)
    if not sep:
        raise UsageError("suite %r needs arguments, e.g. %s:6" % (name, name))
    parts = [p.strip() for p in arg_text.split(",")]
    try:
        if name == "order_size" or name == "deletion":
            (n,) = parts
            return name, {"n": int(n)}
        if name == "connectivity":
            n, kappa = parts
            return name, {"n": int(n), "kappa": int(kappa)}
        if name == "odd_trees":
            (n,) = parts
            return name, {"n": int(n)}
        if name == "k_degenerate":
            if len(parts) == 2:
                n, k = parts
                return name, {"n": int(n), "k": int(k)}
            n, k, klass = parts
            return name, {"n": int(n), "k": int(k), "klass": klass}
    except ValueError as exc:
        raise UsageError("bad suite arguments %r" % arg_text) from exc
    raise UsageError("bad suite spec %r" % spec)


def _check_max_n(n: int, max_n: int | None) -> None:
    if max_n is not None and n > max_n:
        raise UsageError("order %d exceeds --max-n %d" % (n, max_n))


def _cmd_enumerate(args: argparse.Namespace, cfg: RunConfig) -> int:
    try:
        name, class_args = parse_class_spec(args.klass)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _check_max_n(class_args[0], cfg.max_n)
    start = time.monotonic()
    try:
        records = [write_graph6(g) for g in enumerate_class(name, class_args)]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    elapsed = time.monotonic() - start
    stream = "\n".join(records)
    summary = {
        "class": name,
        "n": class_args[0],
        "params": list(class_args[1:]),
        "count": len(records),
        "elapsed": elapsed,
    }
    if cfg.out:
        _emit(stream, cfg.out)
        _emit(json.dumps(summary, indent=2, sort_keys=True), None)
    else:
        if records:
            _emit(stream, None)
        sys.stderr.write(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def _run_suite(name: str, kwargs: dict, cfg: RunConfig):
    runner = SUITES[name]
    try:
        return runner(shards=cfg.shards, jobs=cfg.jobs, **kwargs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    name, kwargs = _parse_suite_spec(args.suite)
    _check_max_n(kwargs["n"], cfg.max_n)
    report = _run_suite(name, kwargs, cfg)
    doc = report.to_dict() | _header(cfg)
    if cfg.fmt == "csv":
        _emit(csv_summary([report]), cfg.out)
    else:
        _emit(json.dumps(doc, indent=2, sort_keys=True), cfg.out)
    status = "PASS" if report.passed else "FAIL"
    sys.stderr.write(
        "%s %s: %d graphs, %d violations, %d equality witnesses (%.2fs)\n"
        % (
            status,
            args.suite,
            report.graphs_checked,
            len(report.violations),
            len(report.equality_witnesses),
            report.elapsed_s,
        )
    )
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _cmd_explore(args: argparse.Namespace, cfg: RunConfig) -> int:
    name, sep, n_text = args.klass.partition(":")
    if name.strip() != "maximal_planar" or not sep:
        raise UsageError("explore expects --class maximal_planar:n")
    try:
        n = int(n_text)
    except ValueError:
        raise UsageError("bad order %r" % n_text) from None
    _check_max_n(n, cfg.max_n)
    mode = "apollonian" if args.apollonian_only else "flip"
    report = _run_suite(
        "maximal_planar", {"n": n, "mode": mode}, cfg
    )
    doc = report.to_dict() | _header(cfg)
    if cfg.out:
        _emit(json.dumps(doc, indent=2, sort_keys=True), cfg.out)
    counterexamples = [
        v["graph6"] for v in report.violations if v["kind"] == "dominance"
    ]
    if counterexamples:
        print("counterexample candidates at order %d (coverage = %s):" % (n, report.coverage))
        for record in counterexamples:
            print("  %s" % record)
    else:
        print("no counterexample at order %d, coverage = %s" % (n, report.coverage))
    return EXIT_VIOLATION if report.violations else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        jobs = getattr(args, "jobs", None)
        if jobs is None:
            jobs = _default_jobs()
        elif jobs < 1:
            raise UsageError("--jobs must be positive, got %d" % jobs)
        shards = getattr(args, "shards", None)
        if shards is None:
            shards = max(jobs, 1)
        elif shards < 1:
            raise UsageError("--shards must be positive, got %d" % shards)
        cfg = RunConfig(
            command=args.command,
            inputs=list(getattr(args, "input", [])),
            families=list(getattr(args, "family", [])),
            klass=getattr(args, "klass", None),
            suite=getattr(args, "suite", None),
            indices=list(getattr(args, "index", [])),
            fmt=getattr(args, "fmt", None),
            jobs=jobs,
            shards=shards,
            max_n=getattr(args, "max_n", None),
            out=getattr(args, "out", None),
            seed=getattr(args, "seed", None),
        )
        handler = {
            "compute": _cmd_compute,
            "compare": _cmd_compare,
            "construct": _cmd_construct,
            "enumerate": _cmd_enumerate,
            "verify": _cmd_verify,
            "explore": _cmd_explore,
        }[args.command]
        return handler(args, cfg)
    except UsageError as exc:
        sys.stderr.write("usage error: %s\n" % exc)
        return EXIT_USAGE
    except (GraphFormatError, DisconnectedGraphError, InputError) as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return EXIT_INPUT
    except OSError as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
