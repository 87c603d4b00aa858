"""Isomorph-free exhaustive search for ex(n,F), ex_lambda(n,F), ex_q(n,F).

Generation is by canonical augmentation: representatives on n vertices are
obtained by attaching a new vertex to each (n-1)-vertex representative with
every neighborhood mask, keeping a child iff deleting its canonically-last
vertex reproduces the parent.  Parents are independent, so levels split
across workers with a deterministic merge (children sorted per parent,
parents kept in order).  All three measures are edge-monotone, so the
edge-maximal mode is exact for extremal values; ``equivalence_check`` keeps
that honest.
"""

from __future__ import annotations

import hashlib
import json
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, asdict
from pathlib import Path
from typing import Optional

from . import graphs, spectra
from .graphs import Graph
from .patterns import ForbiddenPattern, Matcher

MEASURES = ("edges", "lambda", "q")
ALL_GRAPHS = "all"
MAXIMAL_ONLY = "maximal"

HARD_CAP_ALL = 12
HARD_CAP_MAXIMAL = 14

VALUE_TOL = 1e-9


@dataclass
class SearchConfig:
    max_n: int = 12
    mode: str = ALL_GRAPHS
    workers: int = 1
    cache_dir: Optional[str] = None
    tol: float = 1e-10
    budget: int = 10**8


@dataclass
class ExtremalRecord:
    n: int
    pattern: str
    measure: str
    value: float
    witnesses: list
    graphs_examined: int
    wallclock: float


class SearchError(ValueError):
    pass


class BudgetExceededError(RuntimeError):
    """Enumeration budget exhausted; ``progress`` maps level -> class count."""

    def __init__(self, message: str, progress: dict):
        super().__init__(message)
        self.progress = progress


# level cache: (pattern_key, n) -> (tuple of canonical Graphs, examined at level)
_LEVELS: dict = {}
_LEVELS_LOCK = threading.Lock()
_MATCHERS: dict = {}


def clear_caches():
    with _LEVELS_LOCK:
        _LEVELS.clear()
        _MATCHERS.clear()


def _pattern_key(f: Optional[ForbiddenPattern]) -> str:
    return "none" if f is None else f.canonical()


def _matcher_for(f: Optional[ForbiddenPattern]):
    if f is None:
        return None
    key = f.canonical()
    with _LEVELS_LOCK:
        m = _MATCHERS.get(key)
        if m is None:
            m = Matcher(f)
            _MATCHERS[key] = m
    return m


def _extend(parent: Graph, mask: int) -> Graph:
    n = parent.n
    rows = []
    for i in range(n):
        row = parent.adj[i]
        if (mask >> i) & 1:
            row |= 1 << n
        rows.append(row)
    rows.append(mask)
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n + 1)
    object.__setattr__(g, "adj", tuple(rows))
    return g


def _children(parent: Graph, parent_canon: str, matcher) -> tuple:
    """Accepted canonical child strings (sorted) plus candidates examined."""
    n = parent.n
    accepted = set()
    examined = 0
    for mask in range(1 << n):
        child = _extend(parent, mask)
        examined += 1
        if matcher is not None and matcher.creates_at(child, n):
            continue
        cstr, perm = graphs._canonical(child.n, child.adj)
        if cstr in accepted:
            continue
        w = perm[child.n - 1]
        if graphs.canonical_form(child.delete_vertex(w)) == parent_canon:
            accepted.add(cstr)
    return sorted(accepted), examined


def _level(f: Optional[ForbiddenPattern], n: int, config: SearchConfig):
    """Representatives of F-free classes on n vertices, with examined count."""
    key = (_pattern_key(f), n)
    with _LEVELS_LOCK:
        hit = _LEVELS.get(key)
    if hit is not None:
        return hit
    matcher = _matcher_for(f)
    if n == 1:
        g = graphs.empty(1)
        reps = () if (matcher is not None and matcher.contains(g)) else (g,)
        result = (reps, 1)
    else:
        parents, _ = _level(f, n - 1, config)
        parent_canons = [graphs.to_graph6(p) for p in parents]

        def work(idx):
            return _children(parents[idx], parent_canons[idx], matcher)

        if config.workers > 1 and len(parents) > 1:
            with ThreadPoolExecutor(max_workers=config.workers) as pool:
                results = list(pool.map(work, range(len(parents))))
        else:
            results = [work(i) for i in range(len(parents))]
        reps = []
        examined = 0
        for strs, cnt in results:
            examined += cnt
            reps.extend(graphs.from_graph6(s) for s in strs)
        result = (tuple(reps), examined)
    with _LEVELS_LOCK:
        _LEVELS[key] = result
    return result


def _total_examined(f, n) -> int:
    total = 0
    for k in range(1, n + 1):
        total += _LEVELS[(_pattern_key(f), k)][1]
    return total


def _check_caps(n: int, mode: str, config: SearchConfig):
    hard = HARD_CAP_ALL if mode == ALL_GRAPHS else HARD_CAP_MAXIMAL
    cap = min(hard, config.max_n)
    if n > cap:
        raise SearchError(f"n={n} exceeds the {mode} cap of {cap}")


def _is_edge_maximal(g: Graph, matcher) -> bool:
    if matcher is None:
        return g.edge_count() == g.n * (g.n - 1) // 2
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                # new copies of F must pass through the new edge, so the
                # anchored check at u is exact here
                if not matcher.creates_at(g.add_edge(u, v), u):
                    return False
    return True


def enumerate_free(
    n: int,
    f: Optional[ForbiddenPattern] = None,
    mode: str = ALL_GRAPHS,
    config: Optional[SearchConfig] = None,
):
    """One canonical representative per isomorphism class of F-free graphs.

    ``mode="maximal"`` keeps only the edge-maximal (F-saturated) classes.
    """
    config = config or SearchConfig()
    if mode not in (ALL_GRAPHS, MAXIMAL_ONLY):
        raise SearchError(f"unknown mode {mode!r}")
    _check_caps(n, mode, config)
    budget_used = 0
    progress = {}
    for k in range(1, n + 1):
        reps, examined = _level(f, k, config)
        budget_used += examined
        progress[k] = len(reps)
        if budget_used > config.budget:
            raise BudgetExceededError(
                f"examined {budget_used} graphs, budget {config.budget}", progress
            )
    reps = list(_LEVELS[(_pattern_key(f), n)][0])
    if mode == MAXIMAL_ONLY:
        matcher = _matcher_for(f)
        reps = [g for g in reps if _is_edge_maximal(g, matcher)]
    return reps


def _evaluate(g: Graph, measure: str) -> float:
    if measure == "edges":
        return float(g.edge_count())
    if measure == "lambda":
        return spectra.dense_lambda_value(g)
    if measure == "q":
        return spectra.dense_q_value(g)
    raise SearchError(f"unknown measure {measure!r}; known: {MEASURES}")


def _config_hash(f, n, measure, config: SearchConfig) -> str:
    payload = json.dumps(
        {
            "pattern": _pattern_key(f),
            "n": n,
            "measure": measure,
            "mode": config.mode,
            "tol": config.tol,
            "budget": config.budget,
            "max_n": config.max_n,
        },
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode()).hexdigest()


def _cache_path(f, n, measure, config: SearchConfig) -> Path:
    label = f.name if f.name else "g6-" + f.canonical().encode().hex()
    return Path(config.cache_dir) / label / measure / f"n={n}.json"


def extremal(
    n: int,
    f: ForbiddenPattern,
    measure: str = "q",
    config: Optional[SearchConfig] = None,
) -> ExtremalRecord:
    """Exact maximum of the measure over n-vertex F-free graphs, with
    all witnesses attaining it (within 1e-9) as sorted canonical graph6."""
    config = config or SearchConfig()
    if measure not in MEASURES:
        raise SearchError(f"unknown measure {measure!r}; known: {MEASURES}")
    chash = _config_hash(f, n, measure, config)
    cache_file = None
    if config.cache_dir:
        cache_file = _cache_path(f, n, measure, config)
        if cache_file.exists():
            blob = json.loads(cache_file.read_text())
            if blob.get("config_hash") == chash:
                return ExtremalRecord(**blob["record"])
    start = time.perf_counter()
    reps = enumerate_free(n, f, config.mode, config)
    if not reps:
        raise SearchError(f"no {f.label()}-free graphs on {n} vertices")

    def eval_chunk(chunk):
        return [_evaluate(g, measure) for g in chunk]

    if config.workers > 1 and len(reps) > 64:
        size = (len(reps) + config.workers - 1) // config.workers
        chunks = [reps[i : i + size] for i in range(0, len(reps), size)]
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            values = [v for part in pool.map(eval_chunk, chunks) for v in part]
    else:
        values = eval_chunk(reps)
    best = max(values)
    witnesses = sorted(
        graphs.to_graph6(g) for g, v in zip(reps, values) if v >= best - VALUE_TOL
    )
    record = ExtremalRecord(
        n=n,
        pattern=f.label(),
        measure=measure,
        value=best,
        witnesses=witnesses,
        graphs_examined=_total_examined(f, n),
        wallclock=time.perf_counter() - start,
    )
    if cache_file is not None:
        cache_file.parent.mkdir(parents=True, exist_ok=True)
        cache_file.write_text(
            json.dumps({"config_hash": chash, "record": asdict(record)}, indent=1)
        )
    return record


def equivalence_check(n: int, f: ForbiddenPattern, measure: str) -> bool:
    """True iff full and edge-maximal enumeration agree on the extremum."""
    full = extremal(n, f, measure, SearchConfig(mode=ALL_GRAPHS))
    maximal = extremal(n, f, measure, SearchConfig(mode=MAXIMAL_ONLY))
    return abs(full.value - maximal.value) <= VALUE_TOL
