"""SVG pictures of covers of Z_m * S^1: one disk per cone, coloured by nearest vertex."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .covers import CoverColoring, _cycle_position, split_join_label

PALETTE = ("#e6194b", "#3cb44b", "#4363d8", "#ffe119", "#f58231", "#911eb4",
           "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#9a6324")


class NotAConeComplex(ValueError):
    pass


@dataclass(frozen=True)
class RenderSpec:
    cover: CoverColoring
    radius: float = 3.0      # disk centres sit on a regular m-gon of this radius
    mesh: int = 200          # grid points per disk side
    palette: tuple = PALETTE
    scale: float = 100.0     # SVG units per unit length


def cone_structure(cover: CoverColoring) -> tuple[int, tuple[int, ...]]:
    """(m, cycle order of the base atoms) for a subdivided Z_m * cycle, or raise."""
    t = cover.triangulation
    m = t.group.order
    na = t.num_atoms
    base = list(range(m, na))
    if len(base) < 3 and not (m == 2 and len(base) == 4):
        raise NotAConeComplex("base is not a cycle")
    pairs = set()
    for lab in t.labels:
        apex = [a for a, _ in lab if a < m]
        if len(apex) > 1:
            raise NotAConeComplex("a vertex lies between two apex points")
        foot = sorted(a for a, _ in lab if a >= m)
        if len(foot) == 2:
            pairs.add(tuple(foot))
        elif len(foot) > 2:
            raise NotAConeComplex("base is more than one-dimensional")
    for u, v in t.edge_set:
        lu, lv = t.labels[u], t.labels[v]
        if len(lu) == 1 and len(lv) == 1 and lu[0][0] >= m and lv[0][0] >= m:
            pairs.add(tuple(sorted((lu[0][0], lv[0][0]))))
    nbrs: dict[int, list[int]] = {a: [] for a in base}
    for a, b in pairs:
        nbrs[a].append(b)
        nbrs[b].append(a)
    if any(len(v) != 2 for v in nbrs.values()):
        raise NotAConeComplex("base atoms do not form a single cycle")
    order = [base[0]]
    prev, cur = None, base[0]
    nxt = min(nbrs[cur])
    while nxt != base[0]:
        order.append(nxt)
        prev, cur = cur, nxt
        a, b = nbrs[cur]
        nxt = a if b == prev else b
    if len(order) != len(base):
        raise NotAConeComplex("base atoms do not form a single cycle")
    return m, tuple(order)


def render_cover(spec: RenderSpec) -> str:
    """Deterministic SVG; the cover is drawn as given, without re-verification."""
    cover = spec.cover
    t = cover.triangulation
    m, order = cone_structure(cover)
    if len(spec.palette) < cover.num_colors:
        raise ValueError("palette has fewer entries than colours")
    local = [a - m for a in order]
    centres = [(spec.radius * math.cos(2 * math.pi * k / m), spec.radius * math.sin(2 * math.pi * k / m))
               for k in range(m)]
    per_disk: list[list[tuple[float, float, int]]] = [[] for _ in range(m)]
    for v, lab in enumerate(t.labels):
        ap, tt, foot = split_join_label(lab, m)
        if foot is None:
            per_disk[ap].append((0.0, 0.0, cover.colors[v]))
            continue
        theta = 2 * math.pi * float(_cycle_position(foot, local))
        r = 1.0 - float(tt)
        pt = (r * math.cos(theta), r * math.sin(theta), cover.colors[v])
        if ap is None:
            for k in range(m):
                per_disk[k].append(pt)
        else:
            per_disk[ap].append(pt)

    n = spec.mesh
    step = 2.0 / n
    xs = -1.0 + step * (np.arange(n) + 0.5)
    gx, gy = np.meshgrid(xs, xs)
    inside = gx ** 2 + gy ** 2 <= 1.0
    s = spec.scale
    extent = spec.radius + 1.25
    size = 2 * extent * s
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0f}" height="{size:.0f}" '
           f'viewBox="{-extent * s:.2f} {-extent * s:.2f} {size:.2f} {size:.2f}">']
    for k in range(m):
        pts = np.array([(x, y) for x, y, _ in per_disk[k]])
        cols = np.array([c for _, _, c in per_disk[k]])
        _, idx = cKDTree(pts).query(np.column_stack([gx[inside], gy[inside]]))
        grid = np.full((n, n), -1)
        grid[inside] = cols[idx]
        cx, cy = centres[k]
        out.append(f'<g id="disk{k}">')
        for row in range(n):
            col = 0
            while col < n:
                c = grid[row, col]
                end = col
                while end + 1 < n and grid[row, end + 1] == c:
                    end += 1
                if c >= 0:
                    x0 = (cx + xs[col] - step / 2) * s
                    y0 = -(cy + xs[row] + step / 2) * s
                    out.append(f'<rect x="{x0:.2f}" y="{y0:.2f}" width="{(end - col + 1) * step * s:.2f}" '
                               f'height="{step * s:.2f}" fill="{spec.palette[c]}"/>')
                col = end + 1
        out.append(f'<circle cx="{cx * s:.2f}" cy="{-cy * s:.2f}" r="{s:.2f}" fill="none" '
                   f'stroke="black" stroke-width="1"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
