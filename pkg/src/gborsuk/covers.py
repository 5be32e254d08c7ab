"""G-covers as vertex colourings of triangulations.

A cover is certified by colouring the vertices of a G-triangulation T so that
the quotient graph H(T) is properly coloured; the closed sets are then the
unions of barycentric stars of equally coloured vertices.

Every constructed cover also carries an exact *point rule*: a colour for any
rational point of the underlying space.  The rule restricted to the vertices
of T is the certified colouring, and it is what lets a cover of L be carried
over to finer subdivisions, or to the join G * L.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .complex import (GComplex, Label, atom_label, barycentric, check_free, classifying_space,
                      combine, cycle_complex, group_complex, join, medial_subdivide)
from .group import GroupTable
from .quotient import QuotGraph, quotient_graph
from . import solver as _solver

PointRule = Callable[[Label], int]


class IncompatibleRefinement(ValueError):
    pass


class PrecoloringNotDistinct(ValueError):
    pass


class BaseUnverified(ValueError):
    pass


class MaxKExceeded(RuntimeError):
    def __init__(self, message: str, report: "PipelineReport"):
        super().__init__(message)
        self.report = report


class PipelineTimeout(_solver.SolverTimeout):
    def __init__(self, message: str, report: "PipelineReport"):
        super().__init__(message)
        self.report = report


UNVERIFIED, VERIFIED, FAILED = "unverified", "verified", "failed"


@dataclass(frozen=True, eq=False)
class CoverColoring:
    triangulation: GComplex
    colors: tuple[int, ...]
    num_colors: int
    status: str = UNVERIFIED
    witness: tuple | None = None  # (u, v, g) or ("loop", v, g)
    point_rule: PointRule | None = field(default=None, repr=False)
    note: str = ""

    @property
    def verified(self) -> bool:
        return self.status == VERIFIED

    @property
    def num_colors_used(self) -> int:
        return len(set(self.colors))

    def point_color(self, label: Label) -> int:
        """Colour of an arbitrary rational point of the triangulated space."""
        if self.point_rule is not None:
            return self.point_rule(label)
        return self._locator().color(label)

    def _locator(self) -> "_Locator":
        loc = self.__dict__.get("_loc")
        if loc is None:
            loc = _Locator(self.triangulation, self.colors)
            object.__setattr__(self, "_loc", loc)
        return loc

    def to_dict(self) -> dict:
        return {
            "triangulation": self.triangulation.to_dict(),
            "colors": list(self.colors),
            "num_colors": self.num_colors,
            "status": self.status,
            "witness": list(self.witness) if self.witness else None,
            "note": self.note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "CoverColoring":
        t = GComplex.from_dict(data["triangulation"])
        w = data.get("witness")
        return cls(t, tuple(data["colors"]), int(data["num_colors"]),
                   data.get("status", UNVERIFIED), tuple(w) if w else None, note=data.get("note", ""))

    @classmethod
    def from_json(cls, text: str) -> "CoverColoring":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class CoverBounds:
    lower: int
    upper: int
    conjectured: int


def bounds(g: GroupTable, k: int) -> CoverBounds:
    """Lower k+|G|, upper k(|G|-1)+2, conjectured |G|+k.

    At k = 0 the upper formula gives 2, below the trivial value |G|; the
    0-dimensional case is exact, so the upper bound is reported as |G| there.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    m = g.order
    upper = m if k == 0 else k * (m - 1) + 2
    return CoverBounds(lower=k + m, upper=upper, conjectured=m + k)


# ------------------------------------------------------------- verification
def verify_cover(c: CoverColoring, graph: QuotGraph | None = None) -> CoverColoring:
    """Check that the colouring is proper on the quotient graph of its triangulation."""
    t = c.triangulation
    h = graph if graph is not None else quotient_graph(t)
    if len(c.colors) != t.num_vertices:
        return replace(c, status=FAILED, witness=("size", len(c.colors), t.num_vertices))
    if h.loops:
        v = min(h.loops)
        return replace(c, status=FAILED, witness=("loop", v, _witness_g(t, v, v)))
    cols = c.colors
    for u, v in sorted(h.edges):
        if cols[u] == cols[v]:
            return replace(c, status=FAILED, witness=(u, v, _witness_g(t, u, v)))
    if any(not 0 <= x < c.num_colors for x in cols):
        return replace(c, status=FAILED, witness=("range", max(cols), c.num_colors))
    return replace(c, status=VERIFIED, witness=None)


def _witness_g(t: GComplex, u: int, v: int) -> int | None:
    from .quotient import quotient_witness
    return quotient_witness(t, u, v)


def extract_regions(c: CoverColoring) -> list[tuple[int, list[tuple[int, ...]]]]:
    """Barycentric facets grouped by the colour of their unique original vertex.

    Facets are vertex-id tuples of ``barycentric(c.triangulation)``, whose
    first ``num_vertices`` ids are the original vertices.
    """
    t = c.triangulation
    b = barycentric(t)
    nv = t.num_vertices
    groups: dict[int, list] = {}
    for f in b.faces:
        orig = [v for v in f if v < nv]
        if len(orig) != 1:
            raise AssertionError("barycentric facet without a unique original vertex")
        groups.setdefault(c.colors[orig[0]], []).append(f)
    return sorted((col, sorted(fs)) for col, fs in groups.items())


# ------------------------------------------------------------- point rules
def _cycle_position(label: Label, order: Sequence[int]) -> Fraction:
    """Position in [0, 1) of a point on the cycle through ``order`` (atoms)."""
    n = len(order)
    pos = {a: i for i, a in enumerate(order)}
    if len(label) == 1:
        return Fraction(pos[label[0][0]], n)
    (a, wa), (b, wb) = label
    ia, ib = pos[a], pos[b]
    if (ia + 1) % n == ib:
        return Fraction(ia, n) + wb / n
    if (ib + 1) % n == ia:
        return Fraction(ib, n) + wa / n
    raise ValueError("label is not on an edge of the cycle")


def arc_rule(order: Sequence[int], m: int, shift: int = 0) -> PointRule:
    """Colour floor(pos*(m+1)) for points on a cycle of atoms with Z_m rotating it."""
    order = tuple(order)

    def rule(label: Label) -> int:
        p = _cycle_position(label, order)
        return (math.floor(p * (m + 1)) + shift) % (m + 1)
    return rule


def point_rule_identity(label: Label) -> int:
    """Cover of G by singletons: the colour of element g is g."""
    if len(label) != 1:
        raise ValueError("point cover is only defined on group elements")
    return label[0][0]


def base_cover(g: GroupTable, d: int) -> tuple[GComplex, PointRule, int]:
    """A model L of E_d G with an (|G|+d)-colour point rule for d in {0, 1}."""
    m = g.order
    if d == 0:
        return group_complex(g), point_rule_identity, m
    if d != 1:
        raise ValueError("analytic base covers exist for d <= 1 only")
    if g.is_cyclic and m >= 3:
        return classifying_space(g, 1), arc_rule(range(m), m), m + 1
    if m == 2:
        return classifying_space(g, 1), arc_rule((0, 2, 1, 3), 2), 3
    cover = one_dim_cover(g)
    return classifying_space(g, 1), cover.point_rule, m + 1


class _Locator:
    """Exact point location in a triangulation, colouring by the nearest
    barycentric star (largest coordinate, ties to the smaller colour)."""

    def __init__(self, t: GComplex, colors: Sequence[int]):
        self.t = t
        self.colors = colors
        self.index = t.label_index
        groups: dict[frozenset, list] = {}
        for f in t.faces:
            sup = frozenset().union(*(t.support(v) for v in f))
            groups.setdefault(sup, []).append(f)
        self.groups = []
        for sup, fs in groups.items():
            atoms = sorted(sup)
            pos = {a: i for i, a in enumerate(atoms)}
            mats = np.zeros((len(fs), len(atoms), len(fs[0])))
            for k, f in enumerate(fs):
                for j, v in enumerate(f):
                    for a, w in t.labels[v]:
                        mats[k, pos[a], j] = float(w)
            pinv = np.linalg.pinv(mats)
            self.groups.append((sup, atoms, pos, fs, pinv))

    def color(self, label: Label) -> int:
        v = self.index.get(label)
        if v is not None:
            return self.colors[v]
        sup = {a for a, _ in label}
        for gsup, atoms, pos, fs, pinv in self.groups:
            if not sup <= gsup:
                continue
            x = np.zeros(len(atoms))
            for a, w in label:
                x[pos[a]] = float(w)
            lam = pinv @ x
            for k in np.nonzero(lam.min(axis=1) > -1e-9)[0]:
                exact = self._exact(fs[k], label)
                if exact is not None:
                    best = max(exact)
                    return min(self.colors[v] for v, l in zip(fs[k], exact) if l == best)
        raise ValueError("point is not in the triangulation")

    def _exact(self, face, label: Label) -> list[Fraction] | None:
        labels = self.t.labels
        atoms = sorted({a for v in face for a, _ in labels[v]} | {a for a, _ in label})
        r = len(face)
        rows = []
        for a in atoms:
            row = [dict(labels[v]).get(a, Fraction(0)) for v in face]
            rows.append(row + [dict(label).get(a, Fraction(0))])
        sol = _solve_exact(rows, r)
        if sol is None or any(x < 0 for x in sol):
            return None
        return sol


def _solve_exact(rows: list[list[Fraction]], r: int) -> list[Fraction] | None:
    rows = [list(map(Fraction, row)) for row in rows]
    piv_cols = []
    ri = 0
    for col in range(r):
        p = next((i for i in range(ri, len(rows)) if rows[i][col] != 0), None)
        if p is None:
            continue
        rows[ri], rows[p] = rows[p], rows[ri]
        pv = rows[ri][col]
        rows[ri] = [x / pv for x in rows[ri]]
        for i in range(len(rows)):
            if i != ri and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[ri])]
        piv_cols.append(col)
        ri += 1
    if any(all(x == 0 for x in row[:r]) and row[r] != 0 for row in rows):
        return None
    if len(piv_cols) < r:
        return None
    return [rows[i][r] for i in range(r)]


# ------------------------------------------------------------ circle covers
def circle_cover(m: int, refinement: int | None = None) -> CoverColoring:
    """(m+1)-arc cover of the circle C_N with Z_m rotating by N/m steps.

    ``refinement`` is the cycle length N (default m(m+1)); it must be a
    multiple of m(m+1) so that arc ends and orbit points are vertices.
    Vertex i gets colour floor(i(m+1)/N).
    """
    if m < 2:
        raise ValueError("circle_cover needs m >= 2")
    n = m * (m + 1) if refinement is None else refinement
    if n < 3 or n % (m * (m + 1)):
        raise IncompatibleRefinement(f"cycle length {n} is not a multiple of m(m+1) = {m * (m + 1)}")
    t = cycle_complex(n, order=m)
    colors = tuple(i * (m + 1) // n for i in range(n))
    c = CoverColoring(t, colors, m + 1, point_rule=arc_rule(range(n), m),
                      note=f"circle cover m={m} N={n}")
    return verify_cover(c)


def _fragment_color(i: int, k: int, u: Fraction, colors: Sequence[int], new: int) -> int:
    """Pull-back of the (k+1)-arc circle cover along edge i -> i+1 of a Z_k edge cycle.

    Vertex a_i sits at angle fraction i/k, which lies in arc i; arc k holds
    no vertex and takes the new colour.  ``u`` in [0, 1] runs along the edge.
    """
    if i < k - 1:
        return colors[i] if u < Fraction(k - i, k + 1) else colors[i + 1]
    if u >= 1:
        return colors[0]
    return colors[k - 1] if u < Fraction(1, k + 1) else new


def cyclic_join_cover(k: int, endpoint_colors: Sequence[int], new_color: int = 0,
                      refinement: int = 0) -> CoverColoring:
    """Colour one Z_k-cycle of edges a_i ~ b_{i+1} inside Z_k * Z_k.

    Both a_i and b_i carry ``endpoint_colors[i]``; the edges use those colours
    plus ``new_color``.  Each edge is cut into (k+1)*2^refinement pieces.
    """
    cols = list(endpoint_colors)
    if len(cols) != k or len(set(cols)) != k or new_color in cols:
        raise PrecoloringNotDistinct("need k distinct endpoint colours, all different from the new colour")
    from .group import build_cyclic
    g = build_cyclic(k)
    pieces = (k + 1) * 2 ** refinement
    action = [[(a + h) % k for a in range(k)] + [k + (a + h) % k for a in range(k)] for h in range(k)]
    labels: list[Label] = [atom_label(a) for a in range(2 * k)]
    colors = list(cols) + list(cols)
    index = {lab: i for i, lab in enumerate(labels)}
    faces = []
    for i in range(k):
        a, b = i, k + (i + 1) % k
        prev = a
        for p in range(1, pieces + 1):
            u = Fraction(p, pieces)
            if p == pieces:
                v = b
            else:
                lab = combine([(1 - u, atom_label(a)), (u, atom_label(b))])
                v = len(labels)
                labels.append(lab)
                index[lab] = v
                colors.append(_fragment_color(i, k, u, cols, new_color))
            faces.append((prev, v))
            prev = v
    t = GComplex.build(g, action, labels, faces, name=f"Z{k}-edge-cycle")

    def rule(label: Label) -> int:
        if len(label) == 1:
            return cols[label[0][0] % k]
        (a, wa), (b, wb) = label
        return _fragment_color(a, k, wb, cols, new_color)

    return verify_cover(CoverColoring(t, tuple(colors), max(cols + [new_color]) + 1,
                                      point_rule=rule, note=f"edge-cycle fragment k={k}"))


# ------------------------------------------------------------ one dimension
def _one_dim_data(g: GroupTable):
    """Per edge orbit h (edge x ~ bar(xh)): cycle length k, cycle count r,
    cycle index and position of every x."""
    m = g.order
    data = {}
    for h in g.elements:
        k = g.element_order(h)
        r = m // k
        where = {}
        j = 0
        for x in g.elements:
            if x in where:
                continue
            y = x
            for i in range(k):
                where[y] = (j, i)
                y = g.mul(y, h)
            j += 1
        data[h] = (k, r, where)
    return data


def one_dim_cover(g: GroupTable, refinement: int | None = None, max_refinement: int = 6) -> CoverColoring:
    """(|G|+1)-colour cover of G * G following the edge-orbit construction.

    Element x (and its copy bar x) gets colour x+1; colour 0 is the extra
    colour.  The orbit of edge x ~ bar(xh) splits into the cosets of <h>,
    each a cycle of k = ord(h) edges; the r = |G|/k cycles are numbered and
    cycle j uses the j-th of r equal subintervals for the edge-cycle fragment,
    the left colour before it and the right colour after it.  Each subinterval
    is cut into (k+1)*2^t pieces; t is increased until the quotient colouring
    verifies (or fixed by ``refinement``).
    """
    m = g.order
    data = _one_dim_data(g)

    def param_color(x: int, h: int, s: Fraction) -> int:
        k, r, where = data[h]
        y = g.mul(x, h)
        if s <= 0:
            return x + 1
        if s >= 1:
            return y + 1
        j, i = where[x]
        piece = math.floor(s * r)
        if piece < j:
            return x + 1
        if piece > j:
            return y + 1
        cyc = []
        z = x
        for _ in range(i):
            z = g.mul(z, g.inv(h))
        for _ in range(k):
            cyc.append(z + 1)
            z = g.mul(z, h)
        return _fragment_color(i, k, s * r - j, cyc, 0)

    def rule(label: Label) -> int:
        if len(label) == 1:
            return label[0][0] % m + 1
        (a, wa), (b, wb) = label
        x, y = a, b - m
        return param_color(x, g.mul(g.inv(x), y), wb)

    tries = [refinement] if refinement is not None else range(max_refinement + 1)
    last = None
    for t in tries:
        labels: list[Label] = [atom_label(a) for a in range(2 * m)]
        colors = [x + 1 for x in range(m)] * 2
        faces = []
        for x in g.elements:
            for h in g.elements:
                k, r, _ = data[h]
                pieces = r * (k + 1) * 2 ** t
                y = g.mul(x, h)
                prev = x
                for p in range(1, pieces + 1):
                    s = Fraction(p, pieces)
                    if p == pieces:
                        v = m + y
                    else:
                        labels.append(combine([(1 - s, atom_label(x)), (s, atom_label(m + y))]))
                        colors.append(param_color(x, h, s))
                        v = len(labels) - 1
                    faces.append((prev, v))
                    prev = v
        base = join(group_complex(g), group_complex(g))
        tri = GComplex.build(g, base.atom_action, labels, faces, name="G*G subdivided")
        last = verify_cover(CoverColoring(tri, tuple(colors), m + 1, point_rule=rule,
                                          note=f"one-dimensional cover, refinement {t}"))
        if last.verified:
            return last
    return last


# ------------------------------------------------------------------- joins
def split_join_label(label: Label, n_apex: int):
    """Write a point of G * M as t*apex + (1-t)*foot.

    Returns ``(apex or None, t, foot label on M's atoms or None)``.
    """
    apex = [(a, w) for a, w in label if a < n_apex]
    foot = [(a - n_apex, w) for a, w in label if a >= n_apex]
    if len(apex) > 1:
        raise ValueError("label touches two apex points")
    t = apex[0][1] if apex else Fraction(0)
    ap = apex[0][0] if apex else None
    if not foot:
        return ap, t, None
    s = 1 - t
    return ap, t, tuple((a, w / s) for a, w in foot)


def join_rule(g: GroupTable, base_rule: PointRule, k: int) -> PointRule:
    """Colouring of G * M from a k-colour rule on M: feet keep their colour on
    the identity cone and on the lower halves (t <= 1/2) of the other cones;
    the upper half of the cone over g_i (i >= 1) gets colour k+i-1."""
    n = g.order
    half = Fraction(1, 2)

    def rule(label: Label) -> int:
        ap, t, foot = split_join_label(label, n)
        if ap is not None and ap != 0 and t > half:
            return k + ap - 1
        if foot is None:
            return 0
        return base_rule(foot)
    return rule


def join_cover(g: GroupTable, base: CoverColoring, extra_subdivisions: int = 0) -> CoverColoring:
    """(k+|G|-1)-colour cover of G * M from a verified k-colour cover of M."""
    if not base.verified:
        raise BaseUnverified("join_cover needs a verified base cover")
    if base.triangulation.group != g:
        raise BaseUnverified("base cover carries a different group")
    k = base.num_colors
    rule = join_rule(g, base.point_color, k)
    t = medial_subdivide(join(group_complex(g), base.triangulation), 1 + extra_subdivisions)
    colors = tuple(rule(lab) for lab in t.labels)
    c = CoverColoring(t, colors, k + g.order - 1, point_rule=rule,
                      note=f"join cover, {extra_subdivisions} extra subdivisions")
    return verify_cover(c)


# ---------------------------------------------------------------- pipeline
@dataclass
class PipelineStep:
    k: int
    vertices: int
    base_proper: bool
    outcome: str  # skipped | sat | unsat | timeout | exported
    colors_used: int | None = None
    seconds: float = 0.0

    def to_dict(self, include_timing: bool = False) -> dict:
        out = dict(self.__dict__)
        if not include_timing:
            del out["seconds"]
        return out


@dataclass
class PipelineReport:
    group: GroupTable
    target_dim: int
    trace: list[PipelineStep]
    cover: CoverColoring | None
    bounds: CoverBounds
    problem: _solver.ColoringProblem | None = None
    base_complex: GComplex | None = None  # the unsubdivided G * L

    @property
    def achieved(self) -> int | None:
        return self.cover.num_colors_used if self.cover is not None else None

    @property
    def certified_equal(self) -> bool:
        return self.cover is not None and self.cover.verified and self.achieved == self.bounds.lower

    def to_dict(self, include_cover: bool = True, include_timing: bool = False) -> dict:
        """Timing is left out by default so that reports are reproducible byte for byte."""
        out = {
            "group": json.loads(self.group.to_json()),
            "target_dim": self.target_dim,
            "trace": [s.to_dict(include_timing) for s in self.trace],
            "bounds": dict(self.bounds.__dict__),
            "achieved": self.achieved,
            "certified_equal": self.certified_equal,
        }
        if include_cover:
            out["cover"] = self.cover.to_dict() if self.cover is not None else None
        return out

    def to_json(self, include_cover: bool = True, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_cover, include_timing))


def pipeline_instance(g: GroupTable, target_dim: int, k: int, base_rule: PointRule,
                      base_colors: int, L: GComplex):
    """The subdivided join, its quotient graph and the forced partial colouring."""
    n = g.order
    K = medial_subdivide(join(group_complex(g), L), k)
    h = quotient_graph(K)
    new = base_colors
    pre = {}
    for v, lab in enumerate(K.labels):
        ap, t, foot = split_join_label(lab, n)
        if ap is None:
            pre[v] = base_rule(foot)
        elif ap == 0:
            pre[v] = new
    return K, h, pre


def _base_for(g: GroupTable, target_dim: int, max_k: int, budget: int, method: str,
              time_limit: float | None):
    d = target_dim - 1
    if d <= 1:
        L, rule, ncol = base_cover(g, d)
        return L, rule, ncol
    # lower stages are always solved; only the top stage may be exported
    inner = "bnb" if method == "export" else method
    rep = pipeline(g, d, max_k=max_k, budget=budget, method=inner, time_limit=time_limit)
    c = rep.cover
    return rep.base_complex, c.point_color, c.num_colors


def pipeline(g: GroupTable, target_dim: int, max_k: int = 4, budget: int = _solver.DEFAULT_BUDGET,
             method: str = "bnb", time_limit: float | None = None, min_k: int = 0,
             base: tuple | None = None) -> PipelineReport:
    """Search for a (|G|+target_dim)-colour cover of G * L by subdividing and extending.

    L is a model of E_{d-1} G with a known (|G|+d-1)-colour cover (analytic
    for d <= 2, found recursively above that).  For k = min_k..max_k: skip k
    while the inherited colouring of the subdivided L is not proper; otherwise
    fix L's colours, give the identity cone the new colour, and extend.
    ``method="export"`` stops at the first admissible k and returns the
    colouring problem for an external ILP solver instead of solving it.
    """
    import time

    if target_dim < 1:
        raise ValueError("target_dim must be at least 1")
    if base is None:
        L, rule, ncol = _base_for(g, target_dim, max_k, budget, method, time_limit)
    else:
        L, rule, ncol = base
    ncolors = ncol + 1
    report = PipelineReport(g, target_dim, [], None, bounds(g, target_dim),
                            base_complex=join(group_complex(g), L))
    for k in range(min_k, max_k + 1):
        t0 = time.perf_counter()
        Lk = medial_subdivide(L, k)
        hl = quotient_graph(Lk)
        cl = [rule(lab) for lab in Lk.labels]
        proper = not hl.loops and all(cl[u] != cl[v] for u, v in hl.edges)
        if not proper:
            report.trace.append(PipelineStep(k, Lk.num_vertices, False, "skipped",
                                             seconds=time.perf_counter() - t0))
            continue
        K, h, pre = pipeline_instance(g, target_dim, k, rule, ncol, L)
        step = PipelineStep(k, K.num_vertices, True, "")
        report.trace.append(step)
        if h.loops:
            step.outcome = "loops"
            step.seconds = time.perf_counter() - t0
            continue
        prob = _solver.ColoringProblem(h, ncolors, pre, symmetry_hint=h.action)
        if method == "export":
            step.outcome = "exported"
            step.seconds = time.perf_counter() - t0
            report.problem = prob
            return report
        try:
            col = _solver.extend_precoloring(prob, budget=budget, method=method, time_limit=time_limit)
        except _solver.SolverTimeout as exc:
            step.outcome = "timeout"
            step.seconds = time.perf_counter() - t0
            raise PipelineTimeout(f"solver stopped at k={k}: {exc}", report) from None
        step.seconds = time.perf_counter() - t0
        if col is None:
            step.outcome = "unsat"
            continue
        step.outcome = "sat"
        step.colors_used = col.num_colors_used
        cover = verify_cover(CoverColoring(K, col.colors, ncolors,
                                           note=f"pipeline d={target_dim} k={k}"), graph=h)
        report.cover = cover
        report.problem = prob
        return report
    raise MaxKExceeded(f"no extension found for k <= {max_k} (inconclusive)", report)


__all__ = [
    "CoverColoring", "CoverBounds", "bounds", "verify_cover", "extract_regions", "circle_cover",
    "cyclic_join_cover", "one_dim_cover", "join_cover", "pipeline", "PipelineReport",
    "PipelineStep", "MaxKExceeded", "PipelineTimeout", "IncompatibleRefinement",
    "PrecoloringNotDistinct", "BaseUnverified", "arc_rule", "base_cover", "check_free",
    "split_join_label", "join_rule", "pipeline_instance",
]
