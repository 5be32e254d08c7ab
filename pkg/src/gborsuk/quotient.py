"""Quotient graphs of G-triangulations and G-Borsuk graphs on point samples."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .complex import GComplex
from .group import GroupTable


class LoopyGraph(ValueError):
    """Raised when an operation requires a loop-free graph."""


@dataclass(frozen=True)
class QuotGraph:
    n: int
    edges: frozenset  # of (u, v) with u < v
    loops: frozenset = frozenset()
    action: tuple | None = field(default=None, compare=False)
    source: str = field(default="", compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], loops=(), action=None,
                   source: str = "") -> "QuotGraph":
        es = set()
        ls = set(loops)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                ls.add(u)
            else:
                es.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(es), frozenset(ls), action, source)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nb: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].append(v)
            nb[v].append(u)
        return tuple(tuple(sorted(x)) for x in nb)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges if u < v else (v, u) in self.edges

    def require_loop_free(self) -> None:
        if self.loops:
            raise LoopyGraph(f"graph has {len(self.loops)} loop(s), e.g. at vertex {min(self.loops)}")

    def orbits(self) -> list[tuple[int, ...]]:
        """Vertex orbits under the attached group action (empty when none)."""
        if self.action is None:
            return []
        seen = [False] * self.n
        out = []
        for v in range(self.n):
            if not seen[v]:
                orb = sorted({perm[v] for perm in self.action})
                for w in orb:
                    seen[w] = True
                out.append(tuple(orb))
        return out

    def is_invariant(self) -> bool:
        if self.action is None:
            return True
        for perm in self.action:
            for u, v in self.edges:
                if not self.has_edge(perm[u], perm[v]):
                    return False
            if {perm[v] for v in self.loops} != set(self.loops):
                return False
        return True


def quotient_graph(t: GComplex) -> QuotGraph:
    """u ~ v iff {u, g v} is a simplex of ``t`` for some g != 1.

    The singleton case ``g v = u`` counts as a simplex, so every vertex is
    adjacent to its orbit mates.  Pairs with u = v are recorded as loops.
    """
    act = t.vertex_action
    grp = t.group
    inv_perms = [act[grp.inv(g)] for g in grp.nonidentity]
    edges: set[tuple[int, int]] = set()
    loops: set[int] = set()

    def add(u: int, v: int) -> None:
        if u == v:
            loops.add(u)
        elif u < v:
            edges.add((u, v))
        else:
            edges.add((v, u))

    for a, b in t.edges():
        for p in inv_perms:
            add(a, p[b])
            add(b, p[a])
    for p in inv_perms:
        for v in range(t.num_vertices):
            add(p[v], v)
    return QuotGraph(t.num_vertices, frozenset(edges), frozenset(loops), tuple(act),
                     source=f"quotient of {t.describe()}")


def quotient_witness(t: GComplex, u: int, v: int) -> int | None:
    """A non-identity g with g v = u or {u, g v} an edge of ``t``, if any."""
    act = t.vertex_action
    es = t.edge_set
    for g in t.group.nonidentity:
        w = act[g][v]
        if w == u or (min(u, w), max(u, w)) in es:
            return g
    return None


def borsuk_graph_points(points: Sequence, action: Callable, metric: Callable, eps: float,
                        group: GroupTable | int) -> QuotGraph:
    """G-Borsuk graph on an explicit sample by direct pairwise comparison.

    ``action(g, x)`` applies group element ``g`` to a point and
    ``metric(x, y)`` is the distance.  x ~ y iff some g != 1 has
    ``metric(x, action(g, y)) <= eps``.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    order = group if isinstance(group, int) else group.order
    n = len(points)
    images = [[action(g, y) for y in points] for g in range(1, order)]
    edges = []
    loops = []
    for i in range(n):
        x = points[i]
        for j in range(i, n):
            if any(metric(x, img[j]) <= eps for img in images):
                if i == j:
                    loops.append(i)
                else:
                    edges.append((i, j))
    return QuotGraph.from_edges(n, edges, loops, source=f"point sample n={n} eps={eps}")


def export_dimacs(graph: QuotGraph, allow_loops: bool = False) -> str:
    """DIMACS ``p edge`` text, 1-based; loops only appear as flagged comments."""
    if graph.loops and not allow_loops:
        graph.require_loop_free()
    lines = []
    if graph.loops:
        lines.append(f"c ERROR: graph has {len(graph.loops)} loop(s); not a valid coloring instance")
    lines.append(f"c {graph.source}" if graph.source else "c gborsuk graph")
    lines.append(f"p edge {graph.n} {graph.num_edges}")
    for u, v in sorted(graph.edges):
        lines.append(f"e {u + 1} {v + 1}")
    for v in sorted(graph.loops):
        lines.append(f"c loop {v + 1}")
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> QuotGraph:
    n = None
    edges = []
    loops = []
    for raw in text.splitlines():
        line = raw.split()
        if not line:
            continue
        if line[0] == "p":
            n = int(line[2])
        elif line[0] == "e":
            edges.append((int(line[1]) - 1, int(line[2]) - 1))
        elif line[0] == "c" and len(line) == 3 and line[1] == "loop":
            loops.append(int(line[2]) - 1)
    if n is None:
        raise ValueError("missing 'p edge' line")
    return QuotGraph.from_edges(n, edges, loops, source="dimacs")
