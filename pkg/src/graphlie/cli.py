"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage or input error.
Every verb accepts ``--json`` and then writes one JSON document to stdout.
TARGET is a ``.lg`` file path or a catalog name.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable

from . import catalog
from .derivations import (
    build_kmn_distinct_labels,
    build_kmn_single_label,
    der0,
    kmn_dimension_exact,
    kmn_dimension_formula,
)
from .graph_model import (
    GraphError,
    LabeledDigraph,
    component_count_spectral,
    components,
    load,
    serialize,
)
from .lie_core import algebra_to_json, build_lie, verify_axioms
from .morphisms import Counterexample, MorphismError, reversal_isomorphism, sweep_orientations
from .substructures import enumerate_substructures


class UsageError(Exception):
    pass


def _resolve(target: str) -> LabeledDigraph:
    if os.path.exists(target):
        return load(target)
    try:
        return catalog.get(target).graph
    except catalog.CatalogError as exc:
        raise UsageError(f"{target}: no such file or catalog entry ({exc.args[0]})") from None


def _emit(args, doc, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        for line in text_lines:
            print(line)


def cmd_verify(args) -> int:
    alg = build_lie(_resolve(args.target))
    report = verify_axioms(alg)
    lines = [
        f"{c.name:<22} {'PASS' if c.passed else 'FAIL'}"
        + ("" if c.passed else f"  witness={c.witness} {c.detail}")
        for c in report.checks
    ]
    _emit(args, {"passed": report.passed, "checks": [c.as_dict() for c in report.checks]}, lines)
    return 0 if report.passed else 1


def cmd_info(args) -> int:
    alg = build_lie(_resolve(args.target))
    doc = algebra_to_json(alg)
    lines = [
        f"dim={doc['dim']}",
        "g_-1: " + " ".join(doc["generators"]),
        "g_-2: " + " ".join(doc["center"]),
    ] + [
        f"[{r['left']},{r['right']}] = {'-' if r['sign'] < 0 else ''}{r['result']}"
        for r in doc["relations"]
    ]
    _emit(args, doc, lines)
    return 0


def cmd_components(args) -> int:
    g = _resolve(args.target)
    comps = components(g)
    spectral = component_count_spectral(g)
    ok = spectral == len(comps)
    lines = [f"{k}: {' '.join(c)}" for k, c in enumerate(comps, 1)]
    lines.append(f"components={len(comps)} laplacian_nullity={spectral} {'OK' if ok else 'MISMATCH'}")
    _emit(args, {"components": [list(c) for c in comps], "laplacian_nullity": spectral, "agree": ok}, lines)
    return 0 if ok else 1


def cmd_ideals(args) -> int:
    g = _resolve(args.target)
    reports = enumerate_substructures(g, args.max_size)
    if not args.all:
        reports = [r for r in reports if not r.is_trivial]
    lines = [f"{'span':<28} subalgebra graph-ideal trivial"]
    for r in reports:
        lines.append(
            f"{r.describe():<28} {'yes' if r.is_subalgebra else 'no':<10} "
            f"{'yes' if r.is_graph_ideal else 'no':<11} {r.triviality.value or '-'}"
        )
    sub = sum(r.is_subalgebra and not r.is_trivial for r in reports)
    ide = sum(r.is_graph_ideal and not r.is_trivial for r in reports)
    lines.append(f"nontrivial subalgebras={sub} nontrivial graph-ideals={ide}")
    _emit(args, [r.as_dict() for r in reports], lines)
    bad = any(r.combinatorial_ideal and not r.is_graph_ideal for r in reports)
    return 1 if bad else 0


def _map_rows(m):
    return [[str(x) for x in m.row(i)] for i in range(m.rows)]


def cmd_der0(args) -> int:
    space = der0(build_lie(_resolve(args.target)))
    doc = {"dimension": space.dimension}
    lines = [f"dim Der0 = {space.dimension}"]
    if args.basis:
        doc["basis"] = [
            {"block_minus_one": _map_rows(d.block_minus_one), "block_minus_two": _map_rows(d.block_minus_two)}
            for d in space.basis
        ]
        lines.append(json.dumps(doc["basis"]))
    _emit(args, doc, lines)
    return 0


def cmd_kmn(args) -> int:
    builder = build_kmn_single_label if args.labeling == "single" else build_kmn_distinct_labels
    try:
        g = builder(args.m, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    dim = der0(build_lie(g)).dimension
    doc = {"m": args.m, "n": args.n, "labeling": args.labeling, "dim": dim,
           "exact_closed_form": kmn_dimension_exact(args.m, args.n, args.labeling)}
    line = f"dim={dim}"
    code = 0
    if args.check:
        try:
            formula = kmn_dimension_formula(args.m, args.n, args.labeling)
        except ValueError as exc:
            doc.update(formula=None, ok=None, note=str(exc))
            line += f" formula=n/a ({exc})"
        else:
            ok = formula == dim
            doc.update(formula=formula, ok=ok)
            line += f" formula={formula} {'OK' if ok else 'MISMATCH'}"
            code = 0 if ok else 1
    if args.emit:
        line = serialize(g) + line
        doc["graph"] = serialize(g)
    _emit(args, doc, [line])
    return code


def _parse_edge(spec: str) -> tuple[str, str]:
    tail, sep, head = spec.partition(":")
    if not sep or not tail or not head:
        raise UsageError(f"--edge expects TAIL:HEAD, got {spec!r}")
    return tail, head


def cmd_reverse(args) -> int:
    g = _resolve(args.target)
    tail, head = _parse_edge(args.edge)
    result = reversal_isomorphism(g, tail, head)
    if isinstance(result, Counterexample):
        doc = {"verified": False, "witness": list(result.report.witness or ()),
               "detail": result.report.detail, "map": result.candidate.as_dict()}
        _emit(args, doc, [f"counterexample: {result.report.detail}", json.dumps(doc["map"])])
        return 1
    f, g2 = result
    text = serialize(g2)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    doc = {"verified": True, "graph": text, "map": f.as_dict()}
    _emit(args, doc, [text.rstrip("\n"), json.dumps(f.as_dict())])
    return 0


def cmd_orientations(args) -> int:
    g = _resolve(args.target)
    summary = sweep_orientations(g)
    line = f"orientations={summary['orientations']} verified={summary['passed']} failed={summary['failed']}"
    _emit(args, summary, [line])
    return 0 if summary["failed"] == 0 else 1


def cmd_catalog(args) -> int:
    if args.verify_all:
        reports = catalog.verify_all()
        lines = [f"{'entry':<14} {'subalgebras':<66} {'graph-ideals':<40} status"]
        for r in reports:
            d = r.as_dict()
            lines.append(
                f"{r.name:<14} {' '.join(d['subalgebras']) or '---':<66} "
                f"{' '.join(d['graph_ideals']) or '---':<40} "
                f"{'OK' if r.passed else 'MISS ' + '; '.join(r.misses)}"
            )
        misses = sum(len(r.misses) for r in reports)
        lines.append(f"entries={len(reports)} misses={misses}")
        _emit(args, {"entries": [r.as_dict() for r in reports], "misses": misses}, lines)
        return 0 if misses == 0 else 1
    if not args.name:
        _emit(args, {"names": catalog.names()}, catalog.names())
        return 0
    try:
        entry = catalog.get(args.name, p=args.p)
    except catalog.CatalogError as exc:
        raise UsageError(exc.args[0]) from None
    text = serialize(entry.graph)
    if args.emit:
        if args.json:
            _emit(args, {"name": entry.name, "graph": text}, [])
        else:
            sys.stdout.write(text)
        return 0
    doc = {
        "name": entry.name,
        "title": entry.title,
        "source": entry.source,
        "dim": entry.graph.n + entry.graph.m,
        "expected_subalgebras": [catalog._fmt(s) for s in entry.expected_subalgebras],
        "expected_graph_ideals": [catalog._fmt(s) for s in entry.expected_graph_ideals],
        "graph": text,
    }
    _emit(args, doc, [f"{entry.name} ({entry.title}; {entry.source})", text.rstrip("\n")])
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")

    parser = argparse.ArgumentParser(prog="graphlie", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name: str, func: Callable, help: str, target: bool = True):
        p = sub.add_parser(name, parents=[common], help=help)
        if target:
            p.add_argument("target", help=".lg file or catalog name")
        p.set_defaults(func=func)
        return p

    verb("verify", cmd_verify, "check the Lie algebra axioms")
    verb("info", cmd_info, "print basis and brackets")
    verb("components", cmd_components, "connected components and Laplacian nullity")
    p = verb("ideals", cmd_ideals, "subalgebras and graph-ideals from induced subgraphs")
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--all", action="store_true", help="include trivial reports")
    p = verb("der0", cmd_der0, "degree-0 derivations")
    p.add_argument("--basis", action="store_true")
    p = verb("kmn", cmd_kmn, "Der0 of complete bipartite graphs", target=False)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--labeling", choices=("single", "distinct"), required=True)
    p.add_argument("--check", action="store_true", help="compare with the closed formula")
    p.add_argument("--emit", action="store_true", help="also print the graph")
    p = verb("reverse", cmd_reverse, "reverse one uniquely labeled edge")
    p.add_argument("--edge", required=True, metavar="TAIL:HEAD")
    p.add_argument("-o", "--output", help="write the reversed graph here")
    verb("orientations", cmd_orientations, "verify all orientations of a uniquely labeled graph")
    p = verb("catalog", cmd_catalog, "named graphs from the tables", target=False)
    p.add_argument("name", nargs="?")
    p.add_argument("--p", type=int, default=None, help="p for K_p_free")
    p.add_argument("--emit", action="store_true", help="write the .lg text")
    p.add_argument("--verify-all", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, MorphismError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
