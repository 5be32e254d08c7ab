"""Free geometric G-simplicial complexes with exact rational vertex labels.

A triangulation vertex is a convex combination of *atoms* (the vertices of
the unsubdivided complex), stored as a sorted tuple of ``(atom, Fraction)``
pairs.  The group acts on atoms by a permutation table and on labels by
relabelling the support, so the action on triangulation vertices is exact.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .group import GroupTable, build_cyclic

Label = tuple  # tuple[tuple[int, Fraction], ...], sorted by atom

ONE = Fraction(1)


class ComplexError(ValueError):
    pass


class GroupMismatch(ComplexError):
    pass


class DimensionTooHigh(ComplexError):
    pass


class NotInvariant(ComplexError):
    pass


def atom_label(a: int) -> Label:
    return ((a, ONE),)


def apply_label(label: Label, perm: Sequence[int]) -> Label:
    return tuple(sorted((perm[a], w) for a, w in label))


def average(labels: Sequence[Label]) -> Label:
    acc: dict[int, Fraction] = {}
    for lab in labels:
        for a, w in lab:
            acc[a] = acc.get(a, 0) + w
    k = len(labels)
    return tuple(sorted((a, w / k) for a, w in acc.items()))


def combine(pairs: Iterable[tuple[Fraction, Label]]) -> Label:
    """Convex combination ``sum(coef * label)``."""
    acc: dict[int, Fraction] = {}
    for coef, lab in pairs:
        if coef == 0:
            continue
        for a, w in lab:
            acc[a] = acc.get(a, 0) + coef * w
    return tuple(sorted((a, w) for a, w in acc.items() if w != 0))


def label_to_json(label: Label) -> dict[str, str]:
    return {str(a): str(w) for a, w in label}


def label_from_json(data: dict) -> Label:
    return tuple(sorted((int(a), Fraction(w)) for a, w in data.items()))


@dataclass(frozen=True, eq=False)
class GComplex:
    """Simplicial complex stored by its maximal faces, with a G-action on atoms."""

    group: GroupTable
    atom_action: tuple  # atom_action[g][a] = g.a
    labels: tuple       # labels[v] is the Label of triangulation vertex v
    faces: tuple        # maximal faces, sorted tuples of vertex ids
    name: str = ""

    @classmethod
    def build(cls, group: GroupTable, atom_action, labels, faces, name: str = "",
              check: bool = True) -> "GComplex":
        action = tuple(tuple(int(x) for x in row) for row in atom_action)
        labs = tuple(labels)
        fs = _maximal(tuple(sorted(set(f))) for f in faces)
        cx = cls(group, action, labs, fs, name)
        if check:
            cx.validate()
        return cx

    def validate(self) -> None:
        g = self.group
        na = self.num_atoms
        if len(self.atom_action) != g.order:
            raise ComplexError("atom action needs one permutation per group element")
        for row in self.atom_action:
            if sorted(row) != list(range(na)):
                raise ComplexError("atom action rows must be permutations")
        if list(self.atom_action[0]) != list(range(na)):
            raise ComplexError("identity must act trivially on atoms")
        for a in g.elements:
            for b in g.elements:
                ab = self.atom_action[g.mul(a, b)]
                ra, rb = self.atom_action[a], self.atom_action[b]
                if any(ab[x] != ra[rb[x]] for x in range(na)):
                    raise ComplexError(f"atom action is not a group action at ({a}, {b})")
        for v, lab in enumerate(self.labels):
            if not lab or any(w <= 0 for _, w in lab) or sum(w for _, w in lab) != 1:
                raise ComplexError(f"vertex {v} label is not a positive convex combination")
            if any(not (0 <= a < na) for a, _ in lab):
                raise ComplexError(f"vertex {v} label refers to unknown atoms")
        if len(set(self.labels)) != len(self.labels):
            raise ComplexError("duplicate vertex labels")
        used = {v for f in self.faces for v in f}
        if used != set(range(len(self.labels))):
            raise ComplexError("every vertex must lie in some face")
        act = self.vertex_action  # raises NotInvariant on vertices
        facets = set(self.faces)
        for g in self.group.nonidentity:
            for f in self.faces:
                img = tuple(sorted(act[g][v] for v in f))
                if img not in facets:
                    raise NotInvariant(f"face {list(f)} maps to {list(img)}, not a face")

    # ------------------------------------------------------------------ queries
    @property
    def num_atoms(self) -> int:
        return len(self.atom_action[0])

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    @cached_property
    def dim(self) -> int:
        return max(len(f) for f in self.faces) - 1

    @cached_property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.faces}) == 1

    @cached_property
    def label_index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def vertex_action(self) -> tuple:
        """``vertex_action[g][v]`` is the id of g.v."""
        idx = self.label_index
        out = []
        for perm in self.atom_action:
            row = []
            for v, lab in enumerate(self.labels):
                img = apply_label(lab, perm)
                try:
                    row.append(idx[img])
                except KeyError:
                    raise NotInvariant(f"image of vertex {v} is not a vertex") from None
            out.append(tuple(row))
        return tuple(out)

    def faces_of_dim(self, k: int) -> set:
        out = set()
        for f in self.faces:
            if len(f) > k:
                out.update(itertools.combinations(f, k + 1))
        return out

    def all_faces(self) -> set:
        out = set()
        for f in self.faces:
            for r in range(1, len(f) + 1):
                out.update(itertools.combinations(f, r))
        return out

    def edges(self) -> set:
        return self.edge_set

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.faces_of_dim(1))

    def f_vector(self) -> list[int]:
        return [len(self.faces_of_dim(k)) for k in range(self.dim + 1)]

    def describe(self) -> str:
        nm = self.name or "complex"
        return f"{nm} (V={self.num_vertices}, dim={self.dim}, facets={len(self.faces)})"

    def support(self, v: int) -> frozenset:
        return frozenset(a for a, _ in self.labels[v])

    # --------------------------------------------------------------- serialise
    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "group": json.loads(self.group.to_json()),
            "atoms": [{"id": a, "action": [row[a] for row in self.atom_action]}
                      for a in range(self.num_atoms)],
            "vertices": [label_to_json(lab) for lab in self.labels],
            "faces": [list(f) for f in self.faces],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "GComplex":
        group = GroupTable.from_json(json.dumps(data["group"]))
        atoms = sorted(data["atoms"], key=lambda a: a["id"])
        action = [[atoms[a]["action"][g] for a in range(len(atoms))] for g in range(group.order)]
        labels = [label_from_json(v) for v in data["vertices"]]
        return cls.build(group, action, labels, data["faces"], name=data.get("name", ""))

    @classmethod
    def from_json(cls, text: str) -> "GComplex":
        return cls.from_dict(json.loads(text))


def _maximal(faces: Iterable[tuple]) -> tuple:
    fs = sorted(set(faces), key=lambda f: (-len(f), f))
    kept: list[tuple] = []
    kept_sets: list[frozenset] = []
    by_vertex: dict[int, list[int]] = {}
    for f in fs:
        s = frozenset(f)
        cands = by_vertex.get(f[0], [])
        if any(s <= kept_sets[i] for i in cands):
            continue
        kept.append(f)
        kept_sets.append(s)
        for v in f:
            by_vertex.setdefault(v, []).append(len(kept) - 1)
    return tuple(sorted(kept))


class _Pool:
    """Vertex labels with exact-equality deduplication."""

    def __init__(self, labels: Sequence[Label]):
        self.labels = list(labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}

    def get(self, lab: Label) -> int:
        i = self.index.get(lab)
        if i is None:
            i = len(self.labels)
            self.labels.append(lab)
            self.index[lab] = i
        return i


# ---------------------------------------------------------------- constructors
def group_complex(g: GroupTable) -> GComplex:
    action = [[g.mul(h, a) for a in g.elements] for h in g.elements]
    labels = [atom_label(a) for a in g.elements]
    return GComplex.build(g, action, labels, [(a,) for a in g.elements], name=f"G{g.order}")


def cycle_complex(n: int, order: int | None = None, group: GroupTable | None = None) -> GComplex:
    """The n-cycle with a cyclic group of ``order`` acting by rotation by n/order steps."""
    if n < 3:
        raise ComplexError("a simplicial cycle needs at least 3 vertices")
    if group is None:
        group = build_cyclic(order if order is not None else n)
    m = group.order
    if order is not None and order != m:
        raise ComplexError("order disagrees with the supplied group")
    if n % m:
        raise ComplexError(f"rotation group of order {m} does not act on C_{n}")
    gen = group.cyclic_generator()
    if gen is None:
        raise ComplexError("cycle_complex needs a cyclic group")
    power = {}
    x = 0
    for j in range(m):
        power[x] = j
        x = group.mul(x, gen)
    step = n // m
    action = [[(a + power[h] * step) % n for a in range(n)] for h in group.elements]
    labels = [atom_label(a) for a in range(n)]
    faces = [(i, (i + 1) % n) for i in range(n)]
    return GComplex.build(group, action, labels, faces, name=f"C{n}")


def join(k: GComplex, l: GComplex) -> GComplex:
    if k.group != l.group:
        raise GroupMismatch("join needs both complexes to carry the same group")
    ak, vk = k.num_atoms, k.num_vertices
    action = [list(rk) + [ak + x for x in rl] for rk, rl in zip(k.atom_action, l.atom_action)]
    labels = list(k.labels) + [tuple((a + ak, w) for a, w in lab) for lab in l.labels]
    faces = [s + tuple(v + vk for v in t) for s in k.faces for t in l.faces]
    return GComplex.build(k.group, action, labels, faces,
                          name=f"({k.name or 'K'}*{l.name or 'L'})")


def classifying_space(g: GroupTable, d: int) -> GComplex:
    """Iterated join model of E_d G (C_m as the 1-dimensional layer for cyclic m >= 3)."""
    if d < 0:
        raise ComplexError("dimension must be non-negative")
    pts = group_complex(g)
    if d == 0:
        return pts
    if g.is_cyclic and g.order >= 3:
        e = cycle_complex(g.order, group=g)
    else:
        e = join(pts, pts)
    for _ in range(d - 1):
        e = join(pts, e)
    return e


# ----------------------------------------------------------------- subdivision
def _medial(t: GComplex, max_dim: int) -> GComplex:
    if t.dim > max_dim:
        raise DimensionTooHigh(f"medial subdivision supports dim <= {max_dim}, got {t.dim}")
    pool = _Pool(t.labels)
    labels = pool.labels
    mids: dict[tuple[int, int], int] = {}

    def mid(a: int, b: int) -> int:
        key = (a, b) if a < b else (b, a)
        i = mids.get(key)
        if i is None:
            i = pool.get(average((labels[a], labels[b])))
            mids[key] = i
        return i

    out = []
    for f in t.faces:
        if len(f) == 1:
            out.append(f)
        elif len(f) == 2:
            a, b = f
            m = mid(a, b)
            out += [(a, m), (m, b)]
        elif len(f) == 3:
            v1, v2, v3 = f
            m12, m13, m23 = mid(v1, v2), mid(v1, v3), mid(v2, v3)
            out += [(v1, m12, m13), (v2, m12, m23), (v3, m13, m23), (m12, m23, m13)]
        else:
            v1, v2, v3, v4 = f
            m12, m13, m14 = mid(v1, v2), mid(v1, v3), mid(v1, v4)
            m23, m24, m34 = mid(v2, v3), mid(v2, v4), mid(v3, v4)
            w = pool.get(average([labels[v] for v in f]))
            out += [
                (v1, m12, m13, m14), (v2, m12, m23, m24), (v3, m13, m23, m34), (v4, m14, m24, m34),
                (m12, m13, m14, w), (m12, m23, m24, w), (m13, m23, m34, w), (m14, m24, m34, w),
                (m12, m14, m24, w), (m12, m13, m23, w), (m13, m14, m34, w), (m23, m24, m34, w),
            ]
    return GComplex.build(t.group, t.atom_action, pool.labels, out, name=t.name, check=False)


def medial_subdivide_2d(t: GComplex) -> GComplex:
    """Halve every edge; split each triangle into its 4 medial triangles."""
    return _medial(t, 2)


def medial_subdivide_3d(t: GComplex) -> GComplex:
    """Medial rule plus centroid: each tetrahedron becomes 12 tetrahedra."""
    return _medial(t, 3)


def medial_subdivide(t: GComplex, times: int = 1) -> GComplex:
    for _ in range(times):
        t = _medial(t, 3)
    return t


def barycentric(t: GComplex) -> GComplex:
    """Barycentric subdivision; vertices of ``t`` keep their ids."""
    pool = _Pool(t.labels)
    labels = t.labels
    centre: dict[tuple, int] = {}

    def vid(face: tuple) -> int:
        i = centre.get(face)
        if i is None:
            i = pool.get(average([labels[v] for v in face]))
            centre[face] = i
        return i

    out = []
    for f in t.faces:
        for perm in itertools.permutations(f):
            out.append(tuple(vid(tuple(sorted(perm[:r]))) for r in range(1, len(f) + 1)))
    return GComplex.build(t.group, t.atom_action, pool.labels, out,
                          name=f"Bar({t.name})" if t.name else "Bar", check=False)


# ------------------------------------------------------------------- freeness
def check_free(t: GComplex, strict: bool = True):
    """Freeness of the action; returns ``(ok, witness)``.

    ``strict`` tests that every face is disjoint from each of its non-identity
    translates.  ``strict=False`` only asks that no non-identity element fix
    a point of the realisation, i.e. that no face is mapped onto itself.  The
    witness is ``(face, g)`` for the first violation.
    """
    act = t.vertex_action
    for f in t.faces:
        fs = set(f)
        for g in t.group.nonidentity:
            perm = act[g]
            img = {perm[v] for v in f}
            if strict:
                if fs & img:
                    return False, (f, g)
                continue
            s = fs
            while True:
                nxt = s & {perm[v] for v in s}
                if nxt == s:
                    break
                s = nxt
            if s:
                return False, (tuple(sorted(s)), g)
    return True, None
