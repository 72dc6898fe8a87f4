"""Randomized probe of the leaf-plus-cyclomatic upper bound on general graphs.

The bound mdim(G) <= L1(G) + 2 c(G) is a theorem on cacti and conjectured
for every connected graph other than the bare cycle.  This module grows
seeded random trees, cacti, and connected graphs, evaluates the bound with
the formula (cactus inputs) or the brute-force oracle (everything else),
and streams the verdicts to an append-only JSONL campaign file.
"""

from __future__ import annotations

import hashlib
import heapq
import json
import random
from dataclasses import dataclass
from pathlib import Path

from .errors import InfeasibleEdgeCountError, InvalidSpecError, TooSmallError
from .exact import mdim_exact
from .graph import Graph, build_graph, graph_stats
from .oracle import brute_force_mdim
from .structure import GraphClassTag, classify


@dataclass(frozen=True)
class CactusSpec:
    """Growth recipe for a random cactus: cycles and pendant edges."""

    cycle_count: int
    cycle_length_range: tuple[int, int]
    extra_tree_edges: int
    seed: int


@dataclass(frozen=True)
class ConjectureRecord:
    """Verdict of the bound mdim <= l1 + 2 * cyclomatic on one graph.

    The bare cycle C_n is outside the conjecture's scope and is tagged
    excluded instead of counting as a violation.
    """

    graph_id: str
    n: int
    m: int
    l1: int
    cyclomatic: int
    mdim: int
    mdim_source: str
    bound: int
    holds: bool
    gap: int
    excluded: bool

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "l1": self.l1,
            "cyclomatic": self.cyclomatic,
            "mdim": self.mdim,
            "mdim_source": self.mdim_source,
            "bound": self.bound,
            "holds": self.holds,
            "gap": self.gap,
            "excluded": self.excluded,
        }


@dataclass(frozen=True)
class ThreeConnectedReport:
    applicable: bool
    strict: bool


@dataclass(frozen=True)
class CampaignConfig:
    """Settings for a seeded campaign; identical configs replay identically."""

    count: int
    output_path: str
    seed: int = 0
    n_range: tuple[int, int] = (4, 10)
    m_strategy: str = "density"  # "density", "fixed", or "cactus"
    density: float = 0.4
    fixed_m: int | None = None
    max_n: int = 16


@dataclass(frozen=True)
class CampaignSummary:
    count: int
    holds: int
    excluded: int
    min_gap: int | None
    violations: tuple[ConjectureRecord, ...]

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "holds": self.holds,
            "excluded": self.excluded,
            "min_gap": self.min_gap,
            "violations": [r.to_dict() for r in self.violations],
        }


def _prufer_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    # Decoding a uniform random length-(n-2) sequence yields a uniform
    # labeled tree.  n >= 3 here; n == 2 is the single edge.
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on n vertices, deterministic in seed."""
    if n < 2:
        raise TooSmallError(f"need at least 2 vertices, got {n}")
    if n == 2:
        return build_graph(2, [(0, 1)])
    return build_graph(n, _prufer_edges(n, random.Random(seed)))


def random_cactus(spec: CactusSpec) -> Graph:
    """Grow a random cactus by attaching cycles and pendant edges.

    Each cycle of random length in range attaches through one uniformly
    random existing vertex, so cycles stay edge disjoint by construction;
    each pendant edge hangs a fresh leaf on a random existing vertex.
    """
    lo, hi = spec.cycle_length_range
    if spec.cycle_count < 0 or spec.extra_tree_edges < 0:
        raise InvalidSpecError("counts must be nonnegative")
    if spec.cycle_count > 0 and not 3 <= lo <= hi:
        raise InvalidSpecError(f"cycle lengths must satisfy 3 <= lo <= hi, got [{lo}, {hi}]")
    if spec.cycle_count == 0 and spec.extra_tree_edges == 0:
        raise InvalidSpecError("a single vertex is not a graph we analyze")

    rng = random.Random(spec.seed)
    ops = ["cycle"] * spec.cycle_count + ["leaf"] * spec.extra_tree_edges
    rng.shuffle(ops)
    n = 1
    edges: list[tuple[int, int]] = []
    for op in ops:
        attach = rng.randrange(n)
        if op == "leaf":
            edges.append((attach, n))
            n += 1
        else:
            length = rng.randint(lo, hi)
            ring = [attach] + list(range(n, n + length - 1))
            n += length - 1
            edges.extend((ring[i], ring[(i + 1) % length]) for i in range(length))
    g = build_graph(n, edges)
    info = classify(g)
    assert info.in_cactus_family and info.cycle_count == spec.cycle_count
    return g


def random_connected_graph(n: int, m: int, seed: int) -> Graph:
    """Random spanning tree plus m - n + 1 distinct random chords."""
    if n < 2:
        raise TooSmallError(f"need at least 2 vertices, got {n}")
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise InfeasibleEdgeCountError(
            f"m = {m} outside [{n - 1}, {n * (n - 1) // 2}] for n = {n}"
        )
    rng = random.Random(seed)
    tree = [(0, 1)] if n == 2 else _prufer_edges(n, rng)
    present = {(min(u, v), max(u, v)) for u, v in tree}
    non_edges = sorted(
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present
    )
    chords = rng.sample(non_edges, m - (n - 1))
    return build_graph(n, tree + chords)


def _graph_digest(g: Graph) -> str:
    payload = f"{g.n}|" + ";".join(f"{u},{v}" for u, v in g.edges)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _mdim_value(g: Graph, max_n: int) -> tuple[int, str]:
    if classify(g).in_cactus_family:
        return mdim_exact(g).total, "formula"
    return brute_force_mdim(g, max_n=max_n).value, "oracle"


def evaluate_conjecture(g: Graph, max_n: int = 16) -> ConjectureRecord:
    """Check mdim <= l1 + 2 * cyclomatic on one graph.

    Cactus-classified inputs use the exact formula, everything else the
    brute-force oracle (TooLargeError past max_n).
    """
    stats = graph_stats(g)
    mdim, source = _mdim_value(g, max_n)
    bound = stats.l1 + 2 * stats.cyclomatic
    return ConjectureRecord(
        graph_id=_graph_digest(g),
        n=g.n,
        m=g.m,
        l1=stats.l1,
        cyclomatic=stats.cyclomatic,
        mdim=mdim,
        mdim_source=source,
        bound=bound,
        holds=mdim <= bound,
        gap=bound - mdim,
        excluded=classify(g).tag is GraphClassTag.CYCLE,
    )


def check_3connected(g: Graph, max_n: int = 16) -> ThreeConnectedReport:
    """Probe the strict bound mdim < 2 * cyclomatic for 3-connected graphs."""
    stats = graph_stats(g)
    mdim, _ = _mdim_value(g, max_n)
    return ThreeConnectedReport(
        applicable=stats.is_3_connected,
        strict=mdim < 2 * stats.cyclomatic,
    )


def _campaign_graph(config: CampaignConfig, index: int) -> Graph:
    rng = random.Random(f"{config.seed}:{index}")
    lo, hi = config.n_range
    n = rng.randint(lo, hi)
    child_seed = rng.randrange(2**62)
    if config.m_strategy == "cactus":
        return random_cactus(CactusSpec(
            cycle_count=rng.randint(1, 3),
            cycle_length_range=(3, max(3, min(6, n - 1))),
            extra_tree_edges=rng.randint(0, 3),
            seed=child_seed,
        ))
    max_m = n * (n - 1) // 2
    if config.m_strategy == "fixed":
        if config.fixed_m is None:
            raise InvalidSpecError("fixed strategy needs fixed_m")
        m = min(max(config.fixed_m, n - 1), max_m)
    elif config.m_strategy == "density":
        m = min(max(round(config.density * max_m), n - 1), max_m)
    else:
        raise InvalidSpecError(f"unknown m_strategy {config.m_strategy!r}")
    return random_connected_graph(n, m, child_seed)


def run_campaign(config: CampaignConfig) -> CampaignSummary:
    """Stream one ConjectureRecord per generated graph to a JSONL file.

    The file is append-only: rerunning an identical config replays the
    same byte stream, and a partially written file resumes where the seed
    sequence left off.  The summary aggregates every record in the file.
    """
    path = Path(config.output_path)
    done = 0
    if path.exists():
        with path.open("r", encoding="utf-8") as fh:
            done = sum(1 for line in fh if line.strip())
    with path.open("a", encoding="utf-8") as fh:
        for index in range(done, config.count):
            record = evaluate_conjecture(_campaign_graph(config, index), config.max_n)
            fh.write(json.dumps(record.to_dict(), sort_keys=True, separators=(",", ":")))
            fh.write("\n")

    records = []
    with path.open("r", encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                records.append(ConjectureRecord(**json.loads(line)))
    live = [r for r in records if not r.excluded]
    return CampaignSummary(
        count=len(records),
        holds=sum(r.holds for r in records),
        excluded=sum(r.excluded for r in records),
        min_gap=min((r.gap for r in live), default=None),
        violations=tuple(r for r in live if not r.holds),
    )
