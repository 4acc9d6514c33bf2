"""argparse front end.

Exit codes for ``analyze``: 0 Gorenstein, 1 not Gorenstein, 2 unknown.
Any command exits with 3 on input errors, 4 when a search cap is hit and
5 on other failures.  ``oracle`` exits 1 when a cross-check fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from . import oracles
from .canonical import Verdict, canonical_generators
from .cone import build_generators, enumerate_facets
from .errors import CapExceededError, EdgeConeError, GraphError
from .graph import load_graph
from .harness import (
    FILTERS,
    SCHEMA,
    CorpusSpec,
    ResultCache,
    RunConfig,
    analyze,
    facet_stage,
    normality_stage,
    reduction_summary,
    scan,
)
from .semigroup import is_normal, membership

EXIT_BY_VERDICT = {Verdict.GORENSTEIN: 0, Verdict.NOT_GORENSTEIN: 1, Verdict.UNKNOWN: 2}
EXIT_INPUT, EXIT_CAP, EXIT_OTHER = 3, 4, 5


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--degree-bound", type=int, default=None, help="default 2n+2")
    p.add_argument("--cycle-cap", type=int, default=RunConfig.cycle_cap)
    p.add_argument("--cover-cap", type=int, default=RunConfig.cover_cap)
    p.add_argument("--point-cap", type=int, default=RunConfig.point_cap)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache-dir", default=None, help="overrides $EDGECONE_CACHE_DIR")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--assume-normal", action="store_true")
    p.add_argument("--no-timings", action="store_true", help="drop timings for byte-stable output")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="edgecone", description="Gorenstein tests for edge-cone semigroup rings.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in [
        ("analyze", "full pipeline on one graph"),
        ("facets", "facet normals of the cone"),
        ("canonical", "minimal generators of the interior ideal"),
        ("reduce", "reductions and their strength"),
        ("normal", "normality of the semigroup"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("graph", help="edge-list file")
        if name == "canonical":
            sp.add_argument("--method", choices=("auto", "exact", "lattice"), default="auto")
    sp = sub.add_parser("scan", parents=[common], help="probe every connected graph up to n-max")
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--filter", action="append", choices=sorted(FILTERS), default=[])
    sp.add_argument("--source", default=None, help="graph6 file instead of the built-in census")
    sp = sub.add_parser("oracle", parents=[common], help="brute-force cross-checks")
    sp.add_argument("graph", help="edge-list file")
    sp.add_argument("--certificate", default=None, help="scan record or probe JSON to re-verify")
    sp.add_argument("--max-degree", type=int, default=3, help="membership sweep depth")
    return parser


def _config(args) -> RunConfig:
    return RunConfig(args.degree_bound, args.cover_cap, args.cycle_cap, args.point_cap, args.assume_normal)


def _emit(args, payload: dict, text: Optional[str] = None) -> None:
    if args.format == "json" or text is None:
        print(json.dumps(payload, indent=None if args.command == "scan" else 2))
    else:
        print(text)


def _text_report(rep: dict) -> str:
    gv = rep["gorenstein"]
    lines = [
        f"graph {rep['graph_hash']}  n={rep['n']}  q={len(rep['edges'])}",
        f"tau={rep['cover']['tau']}  unmixed={rep['cover']['unmixed']}",
        f"facets: {rep['facets']['m']} ell + {len(rep['facets']['coordinate'])} coordinate",
        f"normality: {rep['normality']['verdict']}",
        f"verdict: {gv['verdict']} via {gv['provenance']}",
    ]
    if gv.get("generator"):
        lines.append(f"generator: {tuple(gv['generator'])}")
    red = rep.get("reduction") or {}
    if red.get("first"):
        lines.append(f"reduction strong: {red['first']['strong']['strong']}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    g = load_graph(args.graph)
    cache = ResultCache.from_env(args.cache_dir, args.no_cache)
    rep = analyze(g, _config(args), cache).to_json(timings=not args.no_timings)
    _emit(args, rep, _text_report(rep))
    return EXIT_BY_VERDICT[Verdict(rep["gorenstein"]["verdict"])]


def cmd_facets(args) -> int:
    g = load_graph(args.graph)
    fs = facet_stage(g, ResultCache.from_env(args.cache_dir, args.no_cache))
    text = "\n".join(["coordinate: " + " ".join(f"x{i}" for i in range(1, g.n + 1))]
                     + ["ell: (" + ", ".join(str(x) for x in ell) + ")" for ell in fs.ells])
    _emit(args, {"schema": SCHEMA, "m": fs.m} | fs.to_json(), text)
    return 0


def cmd_canonical(args) -> int:
    g = load_graph(args.graph)
    normality = None if args.assume_normal else normality_stage(g, ResultCache.from_env(args.cache_dir, args.no_cache))
    cg = canonical_generators(g, args.degree_bound, method=args.method, normality=normality,
                              assume_normal=args.assume_normal, point_cap=args.point_cap)
    text = "\n".join([f"{len(cg.generators)} generator(s), complete={cg.complete}, method={cg.method}"]
                     + [str(tuple(w)) for w in cg.generators])
    _emit(args, {"schema": SCHEMA} | cg.to_json(), text)
    return 0


def cmd_reduce(args) -> int:
    g = load_graph(args.graph)
    out = reduction_summary(g, _config(args))
    _emit(args, {"schema": SCHEMA} | out, json.dumps(out, indent=2))
    return 0


def cmd_normal(args) -> int:
    g = load_graph(args.graph)
    rep = is_normal(g, args.degree_bound, point_cap=args.point_cap)
    _emit(args, {"schema": SCHEMA} | rep.to_json(), f"{rep.verdict.value} (checked {rep.lattice_points_checked} points)")
    return 0


def cmd_scan(args) -> int:
    spec = CorpusSpec(args.n_max, tuple(args.filter), args.source)
    cache = ResultCache.from_env(args.cache_dir, args.no_cache)
    root = None if cache.root is None else str(cache.root)
    for rec in scan(spec, _config(args), root, args.jobs):
        if args.format == "json":
            print(json.dumps(rec), flush=True)
        elif "summary" in rec:
            print(f"summary: {rec['summary']}")
        else:
            status = rec["probe"]["status"] if "probe" in rec else "error: " + rec["error"]
            print(f"{rec['graph6']:<10} n={rec['n']}  {status}", flush=True)
    return 0


def cmd_oracle(args) -> int:
    g = load_graph(args.graph)
    checks = []
    if args.certificate:
        with open(args.certificate) as fh:
            data = json.load(fh)
        certs = data.get("probe", data).get("certificates", data)
        checks = oracles.verify_probe_certificate(g, certs)
        if not checks:
            checks = [("certificate contains claims", False)]
    else:
        fs = enumerate_facets(build_generators(g))
        fast = {f.vector for f in fs.normals}
        checks.append(("facets match exhaustive search", fast == oracles.brute_force_facets(g)))
        bad = [w for b in range(args.max_degree + 1) for w in oracles.lattice_box(g.n, b)
               if (membership(g, w) is not None) != oracles.brute_membership(g, w)]
        checks.append((f"membership agrees up to degree {args.max_degree}", not bad))
    ok = all(flag for _, flag in checks)
    payload = {"schema": SCHEMA, "verified": ok, "checks": [{"claim": c, "ok": f} for c, f in checks]}
    _emit(args, payload, "\n".join(f"[{'ok' if f else 'FAIL'}] {c}" for c, f in checks))
    return 0 if ok else 1


COMMANDS = {
    "analyze": cmd_analyze,
    "facets": cmd_facets,
    "canonical": cmd_canonical,
    "reduce": cmd_reduce,
    "normal": cmd_normal,
    "scan": cmd_scan,
    "oracle": cmd_oracle,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (GraphError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except EdgeConeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OTHER


if __name__ == "__main__":
    sys.exit(main())
