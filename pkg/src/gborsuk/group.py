"""Finite groups stored as explicit multiplication tables.

Elements are the integers ``0..order-1`` and the identity is always ``0``.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field


class GroupError(ValueError):
    pass


class NotLatinSquare(GroupError):
    pass


class NoIdentity(GroupError):
    pass


class NotAssociative(GroupError):
    pass


@dataclass(frozen=True)
class GroupTable:
    order: int
    table: tuple[tuple[int, ...], ...]
    inverses: tuple[int, ...]
    labels: tuple[str, ...] = field(default=(), compare=False)

    identity = 0

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def nonidentity(self) -> range:
        return range(1, self.order)

    @property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in self.elements for b in range(a))

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def cyclic_generator(self) -> int | None:
        """Lowest-index element generating the whole group, if any."""
        for a in self.elements:
            if self.element_order(a) == self.order:
                return a
        return None

    @property
    def is_cyclic(self) -> bool:
        return self.cyclic_generator() is not None

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def to_json(self) -> str:
        data = {"order": self.order, "table": [list(r) for r in self.table]}
        if self.labels:
            data["labels"] = list(self.labels)
        return json.dumps(data)

    @classmethod
    def from_json(cls, text: str) -> "GroupTable":
        data = json.loads(text)
        g = build_from_table(data["table"], labels=data.get("labels"))
        if g.order != data.get("order", g.order):
            raise GroupError("order field disagrees with table size")
        return g


def build_from_table(table, labels=None) -> GroupTable:
    """Validate a Cayley table and wrap it; the identity must sit at index 0."""
    rows = [list(map(int, r)) for r in table]
    m = len(rows)
    if m == 0 or any(len(r) != m for r in rows):
        raise GroupError("table must be a non-empty square array")
    full = set(range(m))
    for r in rows:
        if set(r) != full:
            raise NotLatinSquare(f"row {r} is not a permutation of 0..{m - 1}")
    for j in range(m):
        if {rows[i][j] for i in range(m)} != full:
            raise NotLatinSquare(f"column {j} is not a permutation of 0..{m - 1}")
    if rows[0] != list(range(m)) or any(rows[a][0] != a for a in range(m)):
        raise NoIdentity("element 0 is not a two-sided identity")
    for a, b, c in itertools.product(range(m), repeat=3):
        if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
            raise NotAssociative(f"({a}*{b})*{c} != {a}*({b}*{c})")
    inverses = tuple(r.index(0) for r in rows)
    if labels is not None and len(labels) != m:
        raise GroupError("labels must have one entry per element")
    return GroupTable(m, tuple(tuple(r) for r in rows), inverses,
                      tuple(labels) if labels else ())


def build_cyclic(m: int) -> GroupTable:
    if m < 1:
        raise GroupError("cyclic group order must be positive")
    table = [[(a + b) % m for b in range(m)] for a in range(m)]
    return build_from_table(table, labels=[str(a) for a in range(m)])


def build_product(a: GroupTable, b: GroupTable) -> GroupTable:
    """Direct product; the pair (i, j) becomes element ``i*|b| + j``."""
    nb = b.order
    n = a.order * nb
    table = [[0] * n for _ in range(n)]
    for x in range(n):
        i1, j1 = divmod(x, nb)
        for y in range(n):
            i2, j2 = divmod(y, nb)
            table[x][y] = a.table[i1][i2] * nb + b.table[j1][j2]
    labels = [f"({a.label(i)},{b.label(j)})" for i in range(a.order) for j in range(nb)]
    return build_from_table(table, labels=labels)


def build_symmetric(n: int) -> GroupTable:
    """S_n via composition of permutations, identity first (lexicographic order)."""
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    labels = ["".join(str(x + 1) for x in p) for p in perms]
    return build_from_table(table, labels=labels)


def parse_group(name: str) -> GroupTable:
    """Parse names like ``Z3``, ``Z2xZ2``, ``S3`` (case-insensitive)."""
    parts = [p.strip() for p in name.replace("×", "x").split("x") if p.strip()]
    if not parts:
        raise GroupError(f"cannot parse group name {name!r}")
    groups = []
    for p in parts:
        kind, num = p[0].upper(), p[1:]
        if not num.isdigit():
            raise GroupError(f"cannot parse group factor {p!r}")
        if kind == "Z":
            groups.append(build_cyclic(int(num)))
        elif kind == "S":
            groups.append(build_symmetric(int(num)))
        else:
            raise GroupError(f"unknown group factor {p!r}")
    g = groups[0]
    for h in groups[1:]:
        g = build_product(g, h)
    return g
