"""Cells of the Hom complex Hom(K_m, H) and the free action of a group of order m."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .group import GroupTable
from .quotient import QuotGraph

CELL_LIMIT = 10 ** 6


class TooLarge(RuntimeError):
    pass


class SizeMismatch(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ProdCell:
    parts: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, parts: Sequence[Sequence[int]]) -> "ProdCell":
        return cls(tuple(tuple(sorted(p)) for p in parts))

    @property
    def dim(self) -> int:
        return sum(len(p) - 1 for p in self.parts)

    @property
    def m(self) -> int:
        return len(self.parts)

    def is_cell_of(self, h: QuotGraph) -> bool:
        if any(not p for p in self.parts):
            return False
        for i, j in itertools.permutations(range(self.m), 2):
            for u in self.parts[i]:
                for v in self.parts[j]:
                    if u == v and u not in h.loops:
                        return False
                    if u != v and not h.has_edge(u, v):
                        return False
        return True


def _nonempty_subsets(cands: Sequence[int], max_size: int) -> Iterator[tuple[int, ...]]:
    for r in range(1, min(len(cands), max_size) + 1):
        yield from itertools.combinations(cands, r)


def iter_cells(m: int, h: QuotGraph, max_dim: int | None = None) -> Iterator[ProdCell]:
    """Cells in lexicographic order: sigma_i ranges over subsets of the common
    neighbourhood of sigma_1, ..., sigma_{i-1}."""
    h.require_loop_free()
    if m < 1:
        raise ValueError("m must be positive")
    n = h.n
    nbr = [frozenset(a) for a in h.adj]
    cap = n * m if max_dim is None else max_dim

    def rec(i: int, cands: frozenset, parts: list, dim: int):
        if i == m:
            yield ProdCell(tuple(parts))
            return
        # each later part needs at least one vertex
        for s in _nonempty_subsets(sorted(cands), cap - dim + 1):
            common = cands.difference(s)
            for v in s:
                common &= nbr[v]
            if i + 1 < m and not common:
                continue
            parts.append(s)
            yield from rec(i + 1, common, parts, dim + len(s) - 1)
            parts.pop()

    # first part: any nonempty set of vertices that still leaves room for the others
    for s in _nonempty_subsets(range(n), cap + 1):
        common = frozenset(range(n)).difference(s)
        for v in s:
            common &= nbr[v]
        if m > 1 and not common:
            continue
        yield from rec(1, common, [s], len(s) - 1)


def hom_cells(m: int, h: QuotGraph, max_dim: int | None = None, limit: int = CELL_LIMIT) -> list[ProdCell]:
    """All cells of Hom(K_m, h) (up to ``max_dim``); raises TooLarge past ``limit``."""
    out = []
    for c in iter_cells(m, h, max_dim):
        out.append(c)
        if len(out) > limit:
            raise TooLarge(f"more than {limit} cells")
    return out


def complete_graph(t: int) -> QuotGraph:
    return QuotGraph.from_edges(t, itertools.combinations(range(t), 2), source=f"K{t}")


def hom_dimension_complete(m: int, t: int, limit: int = CELL_LIMIT) -> tuple[int, ProdCell]:
    """Maximum cell dimension of Hom(K_m, K_t) by enumeration, and a cell of that
    dimension of the form ({0}, ..., {m-2}, {m-1, ..., t-1})."""
    if not 1 <= m <= t:
        raise ValueError("need 1 <= m <= t")
    h = complete_graph(t)
    best = -1
    for c in iter_cells(m, h):
        best = max(best, c.dim)
        limit -= 1
        if limit < 0:
            raise TooLarge("enumeration guard exceeded")
    witness = ProdCell.of([[i] for i in range(m - 1)] + [list(range(m - 1, t))])
    if witness.dim != best or not witness.is_cell_of(h):
        raise AssertionError("staircase witness does not attain the maximum dimension")
    return best, witness


def act_on_cell(g: GroupTable, elem: int, cell: ProdCell) -> ProdCell:
    """(g sigma)_i = sigma_{pi(i)} where g_i * g = g_{pi(i)}."""
    if cell.m != g.order:
        raise SizeMismatch(f"cell has {cell.m} parts but the group has order {g.order}")
    return ProdCell(tuple(cell.parts[g.mul(i, elem)] for i in range(cell.m)))


def cells_disjoint(a: ProdCell, b: ProdCell) -> bool:
    """Componentwise: a_i and b_i share no vertex, for every i."""
    return all(not set(x) & set(y) for x, y in zip(a.parts, b.parts))


def hom_one_skeleton(m: int, h: QuotGraph, limit: int = CELL_LIMIT) -> tuple[QuotGraph, list[tuple[int, ...]]]:
    """Graph on the homomorphisms K_m -> h, adjacent when they differ in one value."""
    verts = [tuple(p[0] for p in c.parts) for c in hom_cells(m, h, max_dim=0, limit=limit)]
    index = {v: i for i, v in enumerate(verts)}
    edges = []
    for i, v in enumerate(verts):
        for pos in range(m):
            for x in range(h.n):
                if x == v[pos]:
                    continue
                w = v[:pos] + (x,) + v[pos + 1:]
                j = index.get(w)
                if j is not None and i < j:
                    edges.append((i, j))
    return QuotGraph.from_edges(len(verts), edges, source=f"Hom(K{m}, H) 1-skeleton"), verts


def cells_to_json(cells: Sequence[ProdCell]) -> str:
    return json.dumps([[list(p) for p in c.parts] for c in cells])


def cells_from_json(text: str) -> list[ProdCell]:
    return [ProdCell.of(c) for c in json.loads(text)]
