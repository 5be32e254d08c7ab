"""Random G-Borsuk graphs on the circle (Z_m rotations) and spheres (antipodal Z_2)."""
from __future__ import annotations

import csv
import io
import json
import math
import time
import warnings
from collections import deque
from dataclasses import asdict, dataclass, field, replace
from typing import Sequence

import numpy as np
from scipy.spatial import cKDTree

from . import solver
from .quotient import QuotGraph


@dataclass(frozen=True)
class AnalyticSpace:
    """``circle`` of radius 1 with Z_m rotating by 2pi/m, or the unit ``sphere``
    S^d with the antipodal Z_2.  Points are unit vectors in R^(d+1)."""

    kind: str
    m: int = 2
    d: int = 1

    def __post_init__(self):
        if self.kind == "circle":
            object.__setattr__(self, "d", 1)
            if self.m < 2:
                raise ValueError("circle needs a group of order >= 2")
        elif self.kind == "sphere":
            if self.m != 2:
                raise ValueError("spheres carry the antipodal Z_2 only")
            if self.d < 1:
                raise ValueError("sphere dimension must be >= 1")
        else:
            raise ValueError(f"unknown space kind {self.kind!r}")

    @classmethod
    def circle(cls, m: int) -> "AnalyticSpace":
        return cls("circle", m, 1)

    @classmethod
    def sphere(cls, d: int) -> "AnalyticSpace":
        return cls("sphere", 2, d)

    @property
    def diameter(self) -> float:
        return math.pi

    @property
    def dense_target(self) -> int:
        """cov of the space: m+1 on the circle, d+2 on S^d."""
        return self.m + 1 if self.kind == "circle" else self.d + 2

    @property
    def sparse_target(self) -> int:
        """cov one dimension lower: m colours on the circle, d+1 on S^d."""
        return self.m if self.kind == "circle" else self.d + 1

    def act(self, g: int, x: np.ndarray) -> np.ndarray:
        g %= self.m
        if self.kind == "sphere":
            return -x if g else x.copy()
        a = 2 * math.pi * g / self.m
        rot = np.array([[math.cos(a), -math.sin(a)], [math.sin(a), math.cos(a)]])
        return x @ rot.T

    @staticmethod
    def distance(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Geodesic (great-circle) distance."""
        dot = np.clip(np.sum(np.asarray(x) * np.asarray(y), axis=-1), -1.0, 1.0)
        return np.arccos(dot)


def chord(eps: float) -> float:
    return 2 * math.sin(min(eps, math.pi) / 2)


def sample_uniform(space: AnalyticSpace, n: int, seed) -> np.ndarray:
    """n i.i.d. uniform points as unit vectors (angles for the circle are arctan2 of rows)."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    if n == 0:
        return np.zeros((0, space.d + 1))
    if space.kind == "circle":
        theta = rng.uniform(0.0, 2 * math.pi, size=n)
        return np.column_stack([np.cos(theta), np.sin(theta)])
    x = rng.standard_normal((n, space.d + 1))
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def angles(points: np.ndarray) -> np.ndarray:
    return np.mod(np.arctan2(points[:, 1], points[:, 0]), 2 * math.pi)


def borsuk_graph(space: AnalyticSpace, points: np.ndarray, eps: float) -> QuotGraph:
    """x ~ y iff d(x, g y) <= eps for some g != 1 (KD-tree on chord distance)."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    n = len(points)
    if n == 0:
        return QuotGraph.from_edges(0, [], source="empty sample")
    tree = cKDTree(points)
    r = chord(eps) * (1 + 1e-9)
    ii, jj = [], []
    for g in range(1, space.m):
        img = cKDTree(space.act(g, points))
        pairs = tree.sparse_distance_matrix(img, r, output_type="ndarray")
        geo = 2 * np.arcsin(np.clip(pairs["v"] / 2, 0.0, 1.0))
        keep = geo <= eps
        ii.append(pairs["i"][keep])
        jj.append(pairs["j"][keep])
    i = np.concatenate(ii) if ii else np.zeros(0, dtype=int)
    j = np.concatenate(jj) if jj else np.zeros(0, dtype=int)
    loops = sorted(set(i[i == j].tolist()))
    lo, hi = np.minimum(i, j), np.maximum(i, j)
    mask = lo != hi
    es = np.unique(np.column_stack([lo[mask], hi[mask]]), axis=0) if mask.any() else np.zeros((0, 2), int)
    edges = [(int(a), int(b)) for a, b in es]
    return QuotGraph.from_edges(n, edges, loops,
                                source=f"{space.kind} m={space.m} d={space.d} n={n} eps={eps!r}")


def eps_from_rule(coef: float, n: int, d: int) -> float:
    if n < 2:
        return coef
    return coef * (math.log(n) / n) ** (1.0 / d)


@dataclass(frozen=True)
class ExperimentConfig:
    space: AnalyticSpace
    n: int
    coef: float = 6.0
    trials: int = 1
    seed: int = 0
    mode: str = "exact"  # exact | kcolor | bipartite | clique
    eps: float | None = None
    target: int | None = None
    budget: int = solver.DEFAULT_BUDGET
    record_timing: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.n < 0 or self.trials < 1 or self.coef <= 0:
            raise ValueError("need n >= 0, trials >= 1 and a positive coefficient")
        if self.mode not in ("exact", "kcolor", "bipartite", "clique"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "bipartite" and not (self.space.kind == "circle" and self.space.m == 2):
            raise ValueError("bipartite mode only applies to circle/Z_2 (sparse target of 2 colours)")

    @property
    def epsilon(self) -> float:
        return self.eps if self.eps is not None else eps_from_rule(self.coef, self.n, self.space.d)

    @property
    def resolved_target(self) -> int:
        if self.target is not None:
            return self.target
        if self.mode == "exact":
            return self.space.dense_target
        if self.mode == "kcolor":
            return self.space.sparse_target
        if self.mode == "clique":
            return self.space.m
        return 2

    def trial_seed(self, trial: int) -> int:
        return int(np.random.SeedSequence([self.seed, trial]).generate_state(1, dtype=np.uint64)[0])

    def to_dict(self) -> dict:
        d = asdict(self)
        d["epsilon"] = self.epsilon
        d["target"] = self.resolved_target
        return d


@dataclass
class TrialRecord:
    trial: int
    seed: int
    n: int
    eps: float
    edges: int
    verdict: str
    omega: int | None
    ms: float | None = None
    success: bool | None = None
    arc_witness: bool | None = None


CSV_FIELDS = ["trial", "seed", "n", "eps", "edges", "verdict", "omega", "ms"]


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    records: list[TrialRecord] = field(default_factory=list)

    @property
    def decided(self) -> list[TrialRecord]:
        return [r for r in self.records if r.verdict != "timeout"]

    @property
    def timeouts(self) -> int:
        return len(self.records) - len(self.decided)

    @property
    def success_fraction(self) -> float:
        dec = self.decided
        return sum(bool(r.success) for r in dec) / len(dec) if dec else float("nan")

    def fraction(self, verdict: str) -> float:
        dec = self.decided
        return sum(r.verdict == verdict for r in dec) / len(dec) if dec else float("nan")

    def verdict_counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for r in self.records:
            out[r.verdict] = out.get(r.verdict, 0) + 1
        return dict(sorted(out.items()))

    def summary(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "trials": len(self.records),
            "timeouts": self.timeouts,
            "verdicts": self.verdict_counts(),
            "success_fraction": self.success_fraction,
        }

    def to_json(self) -> str:
        return json.dumps(self.summary(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in self.records:
            w.writerow([r.trial, r.seed, r.n, repr(r.eps), r.edges, r.verdict,
                        "" if r.omega is None else r.omega, "" if r.ms is None else f"{r.ms:.1f}"])
        return buf.getvalue()


# ------------------------------------------------------------------ checks
def is_bipartite(graph: QuotGraph) -> bool:
    if graph.loops:
        return False
    side = [-1] * graph.n
    adj = graph.adj
    for s in range(graph.n):
        if side[s] != -1:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for w in adj[v]:
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    q.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def components(graph: QuotGraph) -> list[list[int]]:
    seen = [False] * graph.n
    out = []
    for s in range(graph.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        q = deque([s])
        while q:
            v = q.popleft()
            for w in graph.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    q.append(w)
        out.append(sorted(comp))
    return out


def induced(graph: QuotGraph, verts: Sequence[int]) -> QuotGraph:
    idx = {v: i for i, v in enumerate(verts)}
    es = [(idx[u], idx[v]) for u, v in graph.edges if u in idx and v in idx]
    return QuotGraph.from_edges(len(verts), es)


def clique_number(graph: QuotGraph, budget: int = solver.DEFAULT_BUDGET) -> int:
    """Maximum clique size, searching each connected component separately."""
    if graph.n == 0:
        return 0
    comps = components(graph)
    if len(comps) == 1:
        return len(solver.max_clique(graph, budget))
    best = 1
    for comp in comps:
        if len(comp) <= best:
            continue
        best = max(best, len(solver.max_clique(induced(graph, comp), budget)))
    return best


def arc_coloring(space: AnalyticSpace, points: np.ndarray) -> list[int]:
    """The (m+1)-arc colouring floor(angle (m+1) / 2pi) of circle points."""
    th = angles(points)
    return [int(c) % (space.m + 1) for c in np.floor(th * (space.m + 1) / (2 * math.pi))]


# ------------------------------------------------------------------ trials
def random_borsuk(config: ExperimentConfig, trial: int = 0) -> QuotGraph:
    """One trial's graph; the sample comes from the trial's own seed."""
    pts = sample_uniform(config.space, config.n, config.trial_seed(trial))
    return borsuk_graph(config.space, pts, config.epsilon)


def _chromatic_by_components(graph: QuotGraph, budget: int) -> int:
    best = 1 if graph.n else 0
    for comp in components(graph):
        if len(comp) < 2:
            continue
        chi, _ = solver.exact_chromatic(induced(graph, comp), budget)
        best = max(best, chi)
    return best


def _k_colorable_by_components(graph: QuotGraph, k: int, budget: int) -> bool:
    for comp in components(graph):
        if len(comp) <= k:
            continue
        if solver.k_colorable(induced(graph, comp), k, budget, cliques=[]) is None:
            return False
    return True


def run_trial(config: ExperimentConfig, trial: int) -> TrialRecord:
    space = config.space
    seed = config.trial_seed(trial)
    t0 = time.perf_counter()
    pts = sample_uniform(space, config.n, seed)
    eps = config.epsilon
    graph = borsuk_graph(space, pts, eps)
    target = config.resolved_target
    rec = TrialRecord(trial, seed, config.n, eps, graph.num_edges, "", None)
    try:
        if graph.loops:
            rec.verdict = "loop"
            rec.success = False
        elif config.mode == "bipartite":
            bip = is_bipartite(graph)
            rec.verdict = "bipartite" if bip else "odd_cycle"
            rec.success = bip
        elif config.mode == "clique":
            rec.omega = clique_number(graph, config.budget)
            rec.verdict = f"omega={rec.omega}"
            rec.success = rec.omega == target
        elif config.mode == "kcolor":
            ok = _k_colorable_by_components(graph, target, config.budget)
            rec.verdict = f"{target}-colorable" if ok else f"not-{target}-colorable"
            rec.success = ok
        else:
            if space.kind == "circle":
                cols = arc_coloring(space, pts)
                rec.arc_witness = all(cols[u] != cols[v] for u, v in graph.edges)
            rec.omega = clique_number(graph, config.budget)
            chi = _chromatic_by_components(graph, config.budget)
            if rec.arc_witness and chi > space.m + 1:
                raise AssertionError("exact solver exceeded a proper arc colouring")
            rec.verdict = f"chi={chi}"
            rec.success = chi == target
    except solver.SolverTimeout:
        rec.verdict = "timeout"
        rec.success = None
    if config.record_timing:
        rec.ms = (time.perf_counter() - t0) * 1000
    return rec


def _run(config: ExperimentConfig) -> ExperimentResult:
    if config.workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(config.workers) as ex:
            recs = list(ex.map(run_trial, [config] * config.trials, range(config.trials)))
    else:
        recs = [run_trial(config, t) for t in range(config.trials)]
    res = ExperimentResult(config, sorted(recs, key=lambda r: r.trial))
    if res.timeouts:
        warnings.warn(f"{res.timeouts} trial(s) hit the solver budget and were excluded")
    return res


def threshold_sweep(config: ExperimentConfig) -> ExperimentResult:
    """Chromatic verdicts per trial (exact chi, k-colourability or bipartiteness)."""
    if config.mode == "clique":
        config = replace(config, mode="exact")
    return _run(config)


def clique_sweep(config: ExperimentConfig) -> ExperimentResult:
    """Clique number per trial; success means omega = |G|."""
    return _run(replace(config, mode="clique"))


# --------------------------------------------------------------------- nets
@dataclass(frozen=True)
class NetCertificate:
    delta: float
    size: int
    min_separation: float
    covering_radius: float
    probes: int

    @property
    def ok(self) -> bool:
        return self.min_separation > self.delta and self.covering_radius <= self.delta


def _probe_points(space: AnalyticSpace, delta: float, density: int) -> np.ndarray:
    if space.kind == "circle" or space.d == 1:
        k = max(8, int(math.ceil(density * 2 * math.pi / delta)))
        th = 2 * math.pi * np.arange(k) / k
        return np.column_stack([np.cos(th), np.sin(th)])
    if space.d == 2:
        k = max(32, int(math.ceil(density ** 2 * 4 * math.pi / delta ** 2)))
        i = np.arange(k) + 0.5
        z = 1 - 2 * i / k
        r = np.sqrt(1 - z * z)
        phi = math.pi * (3 - math.sqrt(5)) * i
        return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])
    rng = np.random.default_rng(0)
    k = max(64, int(math.ceil((density / delta) ** space.d * 10)))
    x = rng.standard_normal((k, space.d + 1))
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def greedy_net(space: AnalyticSpace, delta: float, seed=0, density: int = 8):
    """Greedy maximal delta-separated set over a shuffled probe set.

    Picks the next probe not yet within delta of a chosen point, so chosen
    points are pairwise more than delta apart and every probe ends within
    delta of the net.  Returns ``(points, NetCertificate)``.
    """
    if delta <= 0:
        raise ValueError("delta must be positive")
    rng = np.random.default_rng(seed)
    probes = _probe_points(space, delta, density)
    order = rng.permutation(len(probes))
    tree = cKDTree(probes)
    covered = np.zeros(len(probes), dtype=bool)
    chosen = []
    r = chord(delta) * (1 + 1e-12)
    for i in order:
        if covered[i]:
            continue
        chosen.append(i)
        near = tree.query_ball_point(probes[i], r)
        near = [j for j in near if space.distance(probes[i], probes[j]) <= delta]
        covered[near] = True
    net = probes[np.array(chosen, dtype=int)]
    if len(net) > 1:
        ntree = cKDTree(net)
        dd, _ = ntree.query(net, k=2)
        sep = float(2 * np.arcsin(np.clip(dd[:, 1].min() / 2, 0, 1)))
    else:
        sep = math.inf
    dcov, _ = cKDTree(net).query(probes, k=1)
    cover = float(2 * np.arcsin(np.clip(dcov.max() / 2, 0, 1)))
    return net, NetCertificate(delta, len(net), sep, cover, len(probes))
