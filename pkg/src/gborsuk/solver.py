"""Graph colouring: DSATUR heuristic, exact branch-and-bound, clique search,
precolouring extension and text exports for external ILP solvers."""
from __future__ import annotations

import heapq
import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .quotient import LoopyGraph, QuotGraph, export_dimacs, parse_dimacs  # noqa: F401

DEFAULT_BUDGET = 10 ** 8
TABU_ITERS = 20000
PROBE_NODES = 5000


class ImproperPrecoloring(ValueError):
    pass


class SolverTimeout(RuntimeError):
    """Search budget exhausted.  Never a proof of infeasibility."""

    def __init__(self, message: str, lower: int | None = None, upper: int | None = None,
                 best: "Coloring | None" = None, nodes: int = 0):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.best = best
        self.nodes = nodes


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @property
    def num_colors_used(self) -> int:
        return len(set(self.colors))

    def conflicts(self, graph: QuotGraph) -> list[tuple[int, int]]:
        c = self.colors
        return sorted((u, v) for u, v in graph.edges if c[u] == c[v])

    def is_proper(self, graph: QuotGraph) -> bool:
        return len(self.colors) == graph.n and not graph.loops and not self.conflicts(graph)


@dataclass(frozen=True)
class ColoringProblem:
    graph: QuotGraph
    num_colors: int
    precolored: Mapping[int, int] = field(default_factory=dict)
    symmetry_hint: tuple | None = None

    def __post_init__(self):
        self.graph.require_loop_free()
        if self.num_colors < 1:
            raise ValueError("num_colors must be positive")
        for v, c in self.precolored.items():
            if not 0 <= v < self.graph.n:
                raise ValueError(f"precolored vertex {v} not in graph")
            if not 0 <= c < self.num_colors:
                raise ValueError(f"precolor {c} of vertex {v} out of range")


def verify_coloring(graph: QuotGraph, colors: Sequence[int], num_colors: int | None = None,
                    precolored: Mapping[int, int] | None = None) -> list[str]:
    """Independent properness check; returns a list of problems (empty = proper)."""
    problems = []
    if len(colors) != graph.n:
        problems.append(f"coloring has {len(colors)} entries for {graph.n} vertices")
        return problems
    if graph.loops:
        problems.append(f"graph has loops at {sorted(graph.loops)[:5]}")
    for u, v in sorted(graph.edges):
        if colors[u] == colors[v]:
            problems.append(f"edge ({u}, {v}) is monochromatic with color {colors[u]}")
            break
    if num_colors is not None:
        bad = [v for v, c in enumerate(colors) if not 0 <= c < num_colors]
        if bad:
            problems.append(f"vertex {bad[0]} uses color {colors[bad[0]]} >= {num_colors}")
    for v, c in (precolored or {}).items():
        if colors[v] != c:
            problems.append(f"vertex {v} should keep precolor {c}, has {colors[v]}")
    return problems


# ------------------------------------------------------------------ heuristics
def dsatur_upper(graph: QuotGraph) -> Coloring:
    """Greedy DSATUR; ties broken by degree, then lowest vertex id."""
    graph.require_loop_free()
    adj = graph.adj
    n = graph.n
    color = [-1] * n
    seen: list[set] = [set() for _ in range(n)]
    deg = [len(a) for a in adj]
    heap = [(0, -deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    while heap:
        negsat, _, v = heapq.heappop(heap)
        if color[v] != -1 or -negsat != len(seen[v]):
            continue
        c = 0
        while c in seen[v]:
            c += 1
        color[v] = c
        for w in adj[v]:
            if color[w] == -1 and c not in seen[w]:
                seen[w].add(c)
                heapq.heappush(heap, (-len(seen[w]), -deg[w], w))
    return Coloring(tuple(color))


def _degeneracy_order(adj) -> list[int]:
    """Repeatedly remove a vertex of least remaining degree (lowest id on ties)."""
    n = len(adj)
    deg = [len(a) for a in adj]
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    gone = [False] * n
    out = []
    while heap:
        d, v = heapq.heappop(heap)
        if gone[v] or d != deg[v]:
            continue
        gone[v] = True
        out.append(v)
        for w in adj[v]:
            if not gone[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return out


def max_clique(graph: QuotGraph, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Exact maximum clique.

    Vertices are taken in degeneracy order and each one's later neighbours
    are searched by branch-and-bound with greedy-colouring bounds, so the
    bitsets stay as small as the degeneracy.
    """
    graph.require_loop_free()
    n = graph.n
    if n == 0:
        return []
    adj = graph.adj
    adjset = [set(a) for a in adj]
    order = _degeneracy_order(adj)
    rank = [0] * n
    for i, v in enumerate(order):
        rank[v] = i
    best: list[int] = [order[0]]
    nodes = 0

    for v in order:
        later = [w for w in adj[v] if rank[w] > rank[v]]
        if len(later) + 1 <= len(best):
            continue
        later.sort(key=lambda w: (-len(adj[w]), w))
        pos = {w: i for i, w in enumerate(later)}
        lset = set(later)
        nbr = []
        for w in later:
            m = 0
            for x in adjset[w] & lset:
                m |= 1 << pos[x]
            nbr.append(m)
        local: list[int] = []
        need = len(best) - 1  # local clique must beat this size

        def colour_sort(p: int) -> tuple[list[int], list[int]]:
            verts, bounds = [], []
            k = 0
            while p:
                k += 1
                q = p
                while q:
                    low = q & -q
                    i = low.bit_length() - 1
                    verts.append(i)
                    bounds.append(k)
                    q &= ~nbr[i] & ~low
                    p &= ~low
            return verts, bounds

        def expand(clique: list[int], p: int) -> None:
            nonlocal local, need, nodes
            verts, bounds = colour_sort(p)
            for j in range(len(verts) - 1, -1, -1):
                if len(clique) + bounds[j] <= need:
                    return
                nodes += 1
                if nodes > budget:
                    raise SolverTimeout("max_clique budget exceeded", lower=len(best), nodes=nodes)
                i = verts[j]
                clique.append(i)
                np_ = p & nbr[i]
                if np_:
                    expand(clique, np_)
                elif len(clique) > need:
                    local = list(clique)
                    need = len(clique)
                clique.pop()
                p &= ~(1 << i)

        expand([], (1 << len(later)) - 1)
        if local and len(local) + 1 > len(best):
            best = [v] + [later[i] for i in local]
    return sorted(best)


# ---------------------------------------------------------------- exact search
class _Search:
    """k-colouring by DSATUR-ordered backtracking.

    Propagation: forward checking, singleton domains, and for every supplied
    clique of exactly k vertices, each colour must occur in it exactly once.
    """

    def __init__(self, adj, k: int, cliques=(), budget: int = DEFAULT_BUDGET):
        n = len(adj)
        self.adj = adj
        self.n = n
        self.k = k
        self.full = (1 << k) - 1
        self.color = [-1] * n
        self.cnt = [[0] * k for _ in range(n)]
        self.forb = [0] * n
        self.usage = [0] * k
        self.deg = [len(a) for a in adj]
        self.trail: list[int] = []
        self.budget = budget
        self.nodes = 0
        self.cliques = [tuple(c) for c in cliques if len(c) == k]
        self.vcl: list[list[int]] = [[] for _ in range(n)]
        for i, c in enumerate(self.cliques):
            for v in c:
                self.vcl[v].append(i)
        self.ncolored = 0

    def _assign(self, v: int, c: int) -> None:
        self.color[v] = c
        self.usage[c] += 1
        self.ncolored += 1
        self.trail.append(v)
        bit = 1 << c
        cnt = self.cnt
        forb = self.forb
        for w in self.adj[v]:
            row = cnt[w]
            row[c] += 1
            if row[c] == 1:
                forb[w] |= bit

    def _undo(self, mark: int) -> None:
        trail = self.trail
        cnt = self.cnt
        forb = self.forb
        while len(trail) > mark:
            v = trail.pop()
            c = self.color[v]
            self.color[v] = -1
            self.usage[c] -= 1
            self.ncolored -= 1
            mask = ~(1 << c)
            for w in self.adj[v]:
                row = cnt[w]
                row[c] -= 1
                if row[c] == 0:
                    forb[w] &= mask

    def _propagate(self, v: int, c: int) -> bool:
        color, forb, full = self.color, self.forb, self.full
        pending = [(v, c)]
        while pending:
            v, c = pending.pop()
            cur = color[v]
            if cur != -1:
                if cur != c:
                    return False
                continue
            if forb[v] >> c & 1:
                return False
            self._assign(v, c)
            dirty = [v]
            for w in self.adj[v]:
                if color[w] == -1:
                    f = forb[w]
                    if f == full:
                        return False
                    rest = full & ~f
                    if rest & (rest - 1) == 0:
                        pending.append((w, rest.bit_length() - 1))
                    dirty.append(w)
            if self.cliques:
                done = set()
                for u in dirty:
                    for qi in self.vcl[u]:
                        if qi in done:
                            continue
                        done.add(qi)
                        if not self._hall(self.cliques[qi], pending):
                            return False
        return True

    def _hall(self, q, pending) -> bool:
        color, forb = self.color, self.forb
        placed = 0
        free = []
        for u in q:
            if color[u] == -1:
                free.append(u)
            else:
                placed |= 1 << color[u]
        for c in range(self.k):
            if placed >> c & 1:
                continue
            cand = -1
            count = 0
            for u in free:
                if not forb[u] >> c & 1:
                    count += 1
                    cand = u
                    if count > 1:
                        break
            if count == 0:
                return False
            if count == 1:
                pending.append((cand, c))
        return True

    def _select(self) -> int:
        color, forb, deg = self.color, self.forb, self.deg
        best, key = -1, None
        for v in range(self.n):
            if color[v] == -1:
                kv = (forb[v].bit_count(), deg[v])
                if key is None or kv > key:
                    best, key = v, kv
        return best

    def _choices(self, v: int) -> list[int]:
        avail = self.full & ~self.forb[v]
        out = []
        fresh = False
        for c in range(self.k):
            if avail >> c & 1:
                if self.usage[c]:
                    out.append(c)
                elif not fresh:
                    out.append(c)
                    fresh = True
        return out

    def solve(self, precolored: Mapping[int, int]) -> list[int] | None:
        for v, c in sorted(precolored.items()):
            if not self._propagate(v, c):
                return None
        for q in self.cliques:
            if not self._hall(q, pending := []) or not all(self._propagate(u, c) for u, c in pending):
                return None
        stack: list[list] = []
        while True:
            if self.ncolored == self.n:
                return list(self.color)
            v = self._select()
            stack.append([v, self._choices(v), 0, len(self.trail)])
            while stack:
                frame = stack[-1]
                v, choices, i, mark = frame
                self._undo(mark)
                if i >= len(choices):
                    stack.pop()
                    continue
                frame[2] = i + 1
                self.nodes += 1
                if self.nodes > self.budget:
                    raise SolverTimeout(f"search budget of {self.budget} nodes exceeded",
                                        nodes=self.nodes)
                if self._propagate(v, choices[i]):
                    break
            else:
                return None


def _tabucol(adj, k: int, fixed: Mapping[int, int], iters: int, seed: int = 0) -> list[int] | None:
    """Tabu search for a proper k-colouring keeping ``fixed`` vertices; None if not found."""
    import random

    n = len(adj)
    if n == 0:
        return []
    rng = random.Random(seed)
    free = [v for v in range(n) if v not in fixed]
    color = [0] * n
    for v, c in fixed.items():
        color[v] = c
    # greedy start respecting the fixed colours
    for v in free:
        seen = [0] * k
        for w in adj[v]:
            if w in fixed or w < v:
                seen[color[w]] += 1
        color[v] = min(range(k), key=lambda c: (seen[c], c))
    gamma = [[0] * k for _ in range(n)]
    for v in range(n):
        for w in adj[v]:
            gamma[v][color[w]] += 1
    conflicts = sum(gamma[v][color[v]] for v in range(n)) // 2
    tabu: dict[tuple[int, int], int] = {}
    best = conflicts
    for it in range(iters):
        if conflicts == 0:
            return color
        cand = None
        cval = None
        for v in free:
            cv = color[v]
            gv = gamma[v]
            if gv[cv] == 0:
                continue
            for c in range(k):
                if c == cv:
                    continue
                delta = gv[c] - gv[cv]
                if tabu.get((v, c), -1) >= it and conflicts + delta >= best:
                    continue
                key = (delta, rng.random())
                if cval is None or key < cval:
                    cand, cval = (v, c), key
        if cand is None:
            continue
        v, c = cand
        old = color[v]
        conflicts += gamma[v][c] - gamma[v][old]
        color[v] = c
        for w in adj[v]:
            gamma[w][old] -= 1
            gamma[w][c] += 1
        tabu[(v, old)] = it + int(0.6 * conflicts) + rng.randrange(10)
        best = min(best, conflicts)
    return color if conflicts == 0 else None


def _decide(adj, k: int, cliques, pre: Mapping[int, int], budget: int) -> list[int] | None:
    """Short exact probe, then tabu search, then the full exact search."""
    probe = min(budget, PROBE_NODES)
    try:
        return _Search(adj, k, cliques, probe).solve(pre)
    except SolverTimeout:
        if probe >= budget:
            raise
    found = _tabucol(adj, k, pre, iters=TABU_ITERS)
    if found is not None:
        return found
    return _Search(adj, k, cliques, budget).solve(pre)


def _orbit_cliques(graph: QuotGraph, action) -> list[tuple[int, ...]]:
    if action is None:
        return []
    out = []
    seen = set()
    for v in range(graph.n):
        orb = tuple(sorted({perm[v] for perm in action}))
        if orb in seen:
            continue
        seen.add(orb)
        if all(graph.has_edge(a, b) for i, a in enumerate(orb) for b in orb[i + 1:]):
            out.append(orb)
    return out


def k_colorable(graph: QuotGraph, k: int, budget: int = DEFAULT_BUDGET,
                cliques=None) -> Coloring | None:
    """Exact decision; returns a proper k-colouring or None."""
    graph.require_loop_free()
    if graph.n == 0:
        return Coloring(())
    if cliques is None:
        cliques = _orbit_cliques(graph, graph.action)
    q = max(cliques, key=len) if cliques else max_clique(graph, budget)
    if len(q) > k:
        return None
    pre = {v: i for i, v in enumerate(sorted(q))}
    res = _Search(graph.adj, k, list(cliques) + [tuple(q)], budget).solve(pre)
    return Coloring(tuple(res)) if res is not None else None


def exact_chromatic(graph: QuotGraph, budget: int = DEFAULT_BUDGET) -> tuple[int, Coloring]:
    """Chromatic number with a proper witness.

    Lower bound from a maximum clique, upper bound from DSATUR, then
    k-colourability is decided for k = lower, lower+1, ... .
    """
    graph.require_loop_free()
    if graph.n == 0:
        return 0, Coloring(())
    upper = dsatur_upper(graph)
    ub = upper.num_colors_used
    try:
        q = max_clique(graph, budget)
    except SolverTimeout as exc:
        raise SolverTimeout(str(exc), lower=exc.lower, upper=ub, best=upper) from None
    cliques = [tuple(q)] + _orbit_cliques(graph, graph.action)
    pre = {v: i for i, v in enumerate(q)}
    for k in range(len(q), ub):
        try:
            res = _decide(graph.adj, k, cliques, pre, budget)
        except SolverTimeout as exc:
            raise SolverTimeout(str(exc), lower=k, upper=ub, best=upper,
                                nodes=exc.nodes) from None
        if res is not None:
            return k, Coloring(tuple(res))
    return ub, upper


def extend_precoloring(p: ColoringProblem, budget: int = DEFAULT_BUDGET,
                       method: str = "bnb", time_limit: float | None = None) -> Coloring | None:
    """Extend ``p.precolored`` to a proper colouring with ``p.num_colors`` colours.

    Returns None when no extension exists (search completed); raises
    SolverTimeout when the budget runs out.  ``method="milp"`` hands the same
    assignment model to the HiGHS solver bundled with SciPy.
    """
    g = p.graph
    for v, c in p.precolored.items():
        for w in g.adj[v]:
            if p.precolored.get(w) == c:
                raise ImproperPrecoloring(f"adjacent vertices {v} and {w} both precolored {c}")
    if method == "milp":
        return _solve_milp(p, time_limit)
    if method != "bnb":
        raise ValueError(f"unknown method {method!r}")
    cliques = _orbit_cliques(g, p.symmetry_hint)
    res = _decide(g.adj, p.num_colors, cliques, dict(p.precolored), budget)
    return Coloring(tuple(res)) if res is not None else None


def _solve_milp(p: ColoringProblem, time_limit: float | None) -> Coloring | None:
    import numpy as np
    from scipy.optimize import Bounds, LinearConstraint, milp
    from scipy.sparse import coo_matrix

    n, k = p.graph.n, p.num_colors
    nv = n * k
    rows, cols, vals = [], [], []
    r = 0
    for v in range(n):
        for c in range(k):
            rows.append(r)
            cols.append(v * k + c)
            vals.append(1)
        r += 1
    n_assign = r
    for u, v in sorted(p.graph.edges):
        for c in range(k):
            rows += [r, r]
            cols += [u * k + c, v * k + c]
            vals += [1, 1]
            r += 1
    a = coo_matrix((vals, (rows, cols)), shape=(r, nv)).tocsr()
    lb = np.zeros(r)
    lb[:n_assign] = 1
    ub = np.ones(r)
    lo = np.zeros(nv)
    for v, c in p.precolored.items():
        lo[v * k + c] = 1
    options = {"time_limit": time_limit} if time_limit else {}
    res = milp(np.zeros(nv), constraints=LinearConstraint(a, lb, ub), integrality=np.ones(nv),
               bounds=Bounds(lo, np.ones(nv)), options=options)
    if res.status == 0:
        x = np.asarray(res.x).reshape(n, k)
        return Coloring(tuple(int(i) for i in np.argmax(x, axis=1)))
    if res.status == 2:
        return None
    raise SolverTimeout(f"MILP solver stopped: {res.message}")


# --------------------------------------------------------------------- exports
def export_ilp(p: ColoringProblem) -> str:
    """CPLEX-LP assignment model: x_v_c binary, one colour per vertex,
    no monochromatic edge, precoloured variables fixed to 1."""
    n, k = p.graph.n, p.num_colors
    x = lambda v, c: f"x_{v}_{c}"  # noqa: E731
    out = ["\\ gborsuk precoloring extension", f"\\ vertices {n} colors {k} edges {p.graph.num_edges}",
           "Minimize", f" obj: 0 {x(0, 0)}" if n else " obj:", "Subject To"]
    for v in range(n):
        out.append(f" a_{v}: " + " + ".join(x(v, c) for c in range(k)) + " = 1")
    for u, v in sorted(p.graph.edges):
        for c in range(k):
            out.append(f" e_{u}_{v}_{c}: {x(u, c)} + {x(v, c)} <= 1")
    out.append("Bounds")
    for v, c in sorted(p.precolored.items()):
        out.append(f" {x(v, c)} = 1")
    out.append("Binary")
    for v in range(n):
        out.append(" " + " ".join(x(v, c) for c in range(k)))
    out.append("End")
    return "\n".join(out) + "\n"


_SOL_LINE = re.compile(r"^\s*v\s+(\d+)\s+(\d+)\s*$")
_VAR_LINE = re.compile(r"^\s*x_(\d+)_(\d+)\s+([0-9.eE+-]+)\s*$")


def parse_solution(text: str, n: int) -> list[int]:
    """Read ``v <vertex> <color>`` lines; ``x_v_c <value>`` lines are also accepted."""
    colors = [-1] * n
    for line in text.splitlines():
        m = _SOL_LINE.match(line)
        if m:
            v, c = int(m.group(1)), int(m.group(2))
        else:
            m = _VAR_LINE.match(line)
            if not m or float(m.group(3)) < 0.5:
                continue
            v, c = int(m.group(1)), int(m.group(2))
        if not 0 <= v < n:
            raise ValueError(f"solution mentions unknown vertex {v}")
        if colors[v] not in (-1, c):
            raise ValueError(f"vertex {v} assigned two colors")
        colors[v] = c
    missing = [v for v, c in enumerate(colors) if c < 0]
    if missing:
        raise ValueError(f"solution leaves {len(missing)} vertices uncolored, e.g. {missing[0]}")
    return colors


def import_solution(p: ColoringProblem, text: str) -> Coloring:
    """Parse an external solution and verify it against the problem."""
    colors = parse_solution(text, p.graph.n)
    problems = verify_coloring(p.graph, colors, p.num_colors, p.precolored)
    if problems:
        raise ValueError("imported solution rejected: " + "; ".join(problems))
    return Coloring(tuple(colors))


def format_solution(coloring: Coloring) -> str:
    return "".join(f"v {v} {c}\n" for v, c in enumerate(coloring.colors))
