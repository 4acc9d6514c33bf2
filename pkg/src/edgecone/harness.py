"""Pipeline driver: per-graph analysis, persistent result cache and corpus scans."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Iterator, Optional

from .canonical import Verdict, default_degree_bound, gorenstein_decide
from .census import HARD_N_LIMIT, canonical_hash, census, read_graph6_lines, to_graph6
from .cone import FacetSet, build_generators, enumerate_facets
from .conjectures import conjecture_probe
from .errors import CapExceededError, EdgeConeError
from .graph import DEFAULT_COVER_CAP, DEFAULT_CYCLE_CAP, Graph, cover_report, is_bipartite
from .reduction import DEFAULT_SCAN_POINT_CAP, find_reduction, find_strong_reduction, is_strong
from .semigroup import NormalityReport, is_normal

SCHEMA = "ecl/1"
CACHE_ENV = "EDGECONE_CACHE_DIR"

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunConfig:
    degree_bound: Optional[int] = None
    cover_cap: int = DEFAULT_COVER_CAP
    cycle_cap: int = DEFAULT_CYCLE_CAP
    point_cap: int = DEFAULT_SCAN_POINT_CAP
    assume_normal: bool = False

    def bound_for(self, g: Graph) -> int:
        return self.degree_bound if self.degree_bound is not None else default_degree_bound(g)

    def to_json(self) -> dict:
        return {
            "degree_bound": self.degree_bound,
            "cover_cap": self.cover_cap,
            "cycle_cap": self.cycle_cap,
            "point_cap": self.point_cap,
            "assume_normal": self.assume_normal,
        }


# -- cache ------------------------------------------------------------------------


class ResultCache:
    """Content-addressed JSON store; ``root=None`` disables it entirely."""

    def __init__(self, root: Optional[os.PathLike] = None):
        self.root = None if root is None else Path(root)
        self.hits = 0
        self.misses = 0

    @classmethod
    def from_env(cls, flag: Optional[str] = None, disabled: bool = False) -> "ResultCache":
        if disabled:
            return cls(None)
        return cls(flag or os.environ.get(CACHE_ENV) or None)

    @staticmethod
    def key(g: Graph, stage: str, config: dict) -> str:
        # results depend on vertex and edge labels, so the key uses the labeled graph
        blob = json.dumps({"schema": SCHEMA, "stage": stage, "n": g.n, "edges": [list(e) for e in g.edges],
                           "config": config}, sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.json"

    def get(self, key: str) -> Optional[dict]:
        if self.root is None:
            return None
        path = self._path(key)
        if not path.exists():
            return None
        try:
            record = json.loads(path.read_text())
        except (OSError, ValueError) as exc:
            log.warning("corrupt cache entry %s (%s); recomputing", path, exc)
            return None
        if not isinstance(record, dict) or record.get("schema") != SCHEMA or record.get("key") != key:
            log.warning("stale cache entry %s; recomputing", path)
            return None
        return record["value"]

    def put(self, key: str, value: dict) -> None:
        if self.root is None:
            return
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump({"schema": SCHEMA, "key": key, "value": value}, fh, sort_keys=True)
        os.replace(tmp, path)

    def fetch(self, g: Graph, stage: str, config: dict, compute: Callable[[], dict]) -> dict:
        key = self.key(g, stage, config)
        value = self.get(key)
        if value is not None:
            self.hits += 1
            return value
        self.misses += 1
        value = compute()
        self.put(key, value)
        return value


# -- single-graph analysis ----------------------------------------------------------


@dataclass
class AnalysisReport:
    graph_hash: str
    n: int
    edges: list
    cover: dict
    facets: dict
    normality: dict
    gorenstein: dict
    reduction: Optional[dict]
    timings: dict = field(default_factory=dict)

    @property
    def verdict(self) -> Verdict:
        return Verdict(self.gorenstein["verdict"])

    def to_json(self, timings: bool = True) -> dict:
        out = {
            "schema": SCHEMA,
            "graph_hash": self.graph_hash,
            "n": self.n,
            "edges": self.edges,
            "cover": self.cover,
            "facets": self.facets,
            "normality": self.normality,
            "gorenstein": self.gorenstein,
            "reduction": self.reduction,
        }
        if timings:
            out["timings_ms"] = self.timings
        return out


class _Stopwatch:
    def __init__(self):
        self.ms = {}

    def run(self, name: str, fn: Callable):
        t = time.perf_counter()
        out = fn()
        self.ms[name] = round((time.perf_counter() - t) * 1000, 3)
        return out


def facet_stage(g: Graph, cache: ResultCache) -> FacetSet:
    data = cache.fetch(g, "facets", {}, lambda: enumerate_facets(build_generators(g)).to_json())
    return FacetSet.from_json(g.n, data)


def normality_stage(g: Graph, cache: ResultCache) -> NormalityReport:
    data = cache.fetch(g, "normality", {}, lambda: is_normal(g).to_json())
    return NormalityReport.from_json(data)


def reduction_summary(g: Graph, config: RunConfig) -> dict:
    found = find_reduction(g)
    out = {"status": found.status.value, "first": None, "strong": None}
    if found.reduction is not None:
        first = found.reduction
        out["first"] = first.to_json() | {"strong": is_strong(g, first, cycle_cap=config.cycle_cap).to_json()}
        search = find_strong_reduction(g, cycle_cap=config.cycle_cap)
        out["strong"] = None if search.strong is None else search.strong.to_json()
        out["examined"] = len(search.examined)
    return out


def analyze(g: Graph, config: RunConfig = RunConfig(), cache: Optional[ResultCache] = None) -> AnalysisReport:
    cache = cache or ResultCache(None)
    sw = _Stopwatch()
    bound = config.bound_for(g)
    cover = sw.run("cover", lambda: cover_report(g, config.cover_cap))
    fs = sw.run("facets", lambda: facet_stage(g, cache))
    if config.assume_normal:
        normality = None
        norm_json = {"verdict": "Assumed"}
    else:
        normality = sw.run("normality", lambda: normality_stage(g, cache))
        norm_json = normality.to_json()
    conf = config.to_json() | {"degree_bound": bound}

    def decide():
        return gorenstein_decide(g, bound, assume_normal=config.assume_normal, normality=normality,
                                 facets=fs, cover_cap=config.cover_cap, cycle_cap=config.cycle_cap).to_json()

    verdict = sw.run("gorenstein", lambda: cache.fetch(g, "gorenstein", conf, decide))
    red = sw.run("reduction", lambda: reduction_summary(g, config))
    return AnalysisReport(
        graph_hash=canonical_hash(g),
        n=g.n,
        edges=[list(e) for e in g.edges],
        cover=cover.to_json(),
        facets={"m": fs.m} | fs.to_json(),
        normality=norm_json,
        gorenstein=verdict,
        reduction=red,
        timings=sw.ms,
    )


# -- corpus scans -------------------------------------------------------------------

FILTERS = {
    "unmixed": lambda g: cover_report(g).unmixed,
    "non-bipartite": lambda g: not is_bipartite(g),
    "tau-ceil-half": lambda g: cover_report(g).tau == (g.n + 1) // 2,
}


@dataclass(frozen=True)
class CorpusSpec:
    n_max: int
    filters: tuple = ()
    source: Optional[str] = None  # graph6 file; None means the internal generator
    hard_limit: int = HARD_N_LIMIT

    def __post_init__(self):
        if self.n_max > self.hard_limit:
            raise EdgeConeError(f"n_max={self.n_max} exceeds the hard limit {self.hard_limit}")
        unknown = set(self.filters) - set(FILTERS)
        if unknown:
            raise EdgeConeError(f"unknown filters: {sorted(unknown)}")

    def graphs(self) -> list:
        if self.source is None:
            pool: Iterable[Graph] = census(self.n_max)
        else:
            with open(self.source) as fh:
                pool = [h for h in read_graph6_lines(fh) if h.n <= self.n_max]
        # one representative per class, in canonical-hash order
        by_hash = {}
        for h in pool:
            if all(FILTERS[f](h) for f in self.filters):
                by_hash.setdefault(canonical_hash(h), h)
        return [by_hash[k] for k in sorted(by_hash)]


def scan_one(g: Graph, config: RunConfig, cache_root: Optional[str]) -> dict:
    cache = ResultCache(cache_root)
    record = {"graph6": to_graph6(g), "graph_hash": canonical_hash(g), "n": g.n,
              "edges": [list(e) for e in g.edges]}
    bound = config.bound_for(g)

    def probe():
        return conjecture_probe(g, bound, point_cap=config.point_cap, cover_cap=config.cover_cap,
                                cycle_cap=config.cycle_cap).to_json()

    try:
        record["probe"] = cache.fetch(g, "probe", config.to_json() | {"degree_bound": bound}, probe)
    except CapExceededError as exc:
        log.warning("%s: %s", record["graph6"], exc)
        record["error"] = str(exc)
    return record


def scan(spec: CorpusSpec, config: RunConfig = RunConfig(), cache_root: Optional[str] = None,
         jobs: int = 1) -> Iterator[dict]:
    """Yield one record per graph in canonical order, then a summary record."""
    graphs = spec.graphs()
    counts = {}
    candidates = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = pool.map(scan_one, graphs, [config] * len(graphs), [cache_root] * len(graphs),
                               chunksize=4)
            records = list(records)
    else:
        records = (scan_one(g, config, cache_root) for g in graphs)
    for rec in records:
        status = rec["probe"]["status"] if "probe" in rec else "CapExceeded"
        counts[status] = counts.get(status, 0) + 1
        if status == "CounterexampleCandidate":
            candidates.append(rec["graph6"])
        yield rec
    yield {"summary": {"graphs": len(graphs), "counts": dict(sorted(counts.items())),
                       "candidates": candidates, "n_max": spec.n_max, "filters": list(spec.filters)}}
