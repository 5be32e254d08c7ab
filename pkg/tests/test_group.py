import itertools

import pytest

from gborsuk.group import (GroupTable, NoIdentity, NotAssociative, NotLatinSquare, build_cyclic,
                           build_from_table, build_product, build_symmetric, parse_group)
from oracles import compose_table, isomorphic


def s3_table():
    return compose_table(list(itertools.permutations(range(3))))


def test_cyclic_tables():
    assert build_cyclic(2).table == ((0, 1), (1, 0))
    assert build_cyclic(3).table[1][2] == 0
    z6 = build_cyclic(6)
    assert z6.order == 6 and z6.inverses == (0, 5, 4, 3, 2, 1)
    assert z6.is_cyclic and z6.is_abelian


def test_cyclic_rejects_nonpositive():
    with pytest.raises(ValueError):
        build_cyclic(0)


def test_klein_four():
    v = build_product(build_cyclic(2), build_cyclic(2))
    assert v.order == 4
    assert all(v.inv(a) == a for a in v.nonidentity)
    assert not v.is_cyclic


def test_z2_times_z3_is_z6():
    p = build_product(build_cyclic(2), build_cyclic(3))
    assert isomorphic([list(r) for r in p.table], [list(r) for r in build_cyclic(6).table])
    assert not isomorphic([list(r) for r in p.table], s3_table())


def test_trivial_factor():
    g = build_cyclic(5)
    assert build_product(build_cyclic(1), g).table == g.table


def test_from_table_s3():
    g = build_from_table(s3_table())
    assert g.order == 6 and not g.is_abelian
    assert isomorphic([list(r) for r in build_symmetric(3).table], s3_table())


def test_from_table_errors():
    with pytest.raises(NotLatinSquare):
        build_from_table([[0, 1], [0, 1]])
    with pytest.raises(NoIdentity):
        build_from_table([[1, 0], [0, 1]])
    # Latin square with identity 0 that is not associative
    bad = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAssociative):
        build_from_table(bad)


def test_element_orders_and_generator():
    g = build_cyclic(6)
    assert [g.element_order(a) for a in g.elements] == [1, 6, 3, 2, 3, 6]
    assert g.cyclic_generator() == 1


def test_parse_and_json_roundtrip():
    for name, order in (("Z3", 3), ("Z2xZ2", 4), ("S3", 6), ("Z2xZ3", 6)):
        g = parse_group(name)
        assert g.order == order
        assert GroupTable.from_json(g.to_json()) == g
    with pytest.raises(ValueError):
        parse_group("Q8")
