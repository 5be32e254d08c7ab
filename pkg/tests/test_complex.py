from fractions import Fraction

import pytest

from gborsuk.complex import (DimensionTooHigh, GComplex, GroupMismatch, NotInvariant, barycentric,
                             check_free, classifying_space, cycle_complex, group_complex, join,
                             medial_subdivide, medial_subdivide_2d, medial_subdivide_3d)
from gborsuk.group import build_cyclic, build_product, build_symmetric
from oracles import brute_free


def simplex(n_atoms):
    g = build_cyclic(1)
    return GComplex.build(g, [list(range(n_atoms))], [((a, Fraction(1)),) for a in range(n_atoms)],
                          [tuple(range(n_atoms))], name="simplex")


def perms(t):
    return t.vertex_action


def test_group_complex():
    z2 = group_complex(build_cyclic(2))
    assert z2.num_vertices == 2 and z2.dim == 0 and perms(z2)[1] == (1, 0)
    z3 = group_complex(build_cyclic(3))
    assert perms(z3)[1] == (1, 2, 0)
    s3 = group_complex(build_symmetric(3))
    assert s3.num_vertices == 6
    assert brute_free(s3.faces, perms(s3))


def test_cycle_complex():
    c3 = cycle_complex(3)
    assert c3.num_vertices == 3 and len(c3.edges()) == 3
    c6 = cycle_complex(6)
    assert {perms(c6)[1][0], perms(c6)[1][1]} == {1, 2}
    c4 = cycle_complex(4, order=2)
    assert brute_free(c4.faces, perms(c4))
    assert check_free(c4) == (True, None)
    with pytest.raises(ValueError):
        cycle_complex(2)


def test_join_counts():
    z2 = group_complex(build_cyclic(2))
    sq = join(z2, z2)
    assert sq.num_vertices == 4 and sq.dim == 1 and len(sq.faces) == 4
    z3 = build_cyclic(3)
    j = join(group_complex(z3), cycle_complex(3))
    assert j.num_vertices == 6 and j.dim == 2 and len(j.faces_of_dim(2)) == 9
    with pytest.raises(GroupMismatch):
        join(z2, group_complex(z3))


def test_classifying_space():
    z2 = build_cyclic(2)
    e1 = classifying_space(z2, 1)
    assert e1.num_vertices == 4 and e1.dim == 1 and all(len(e1.support(v)) == 1 for v in range(4))
    e2 = classifying_space(build_cyclic(3), 2)
    assert e2.num_vertices == 6 and len(e2.faces_of_dim(2)) == 9
    g = build_product(z2, z2)
    assert classifying_space(g, 0).faces == group_complex(g).faces
    assert classifying_space(g, 1).num_vertices == 8


def test_medial_2d_counts():
    t = simplex(3)
    t1 = medial_subdivide_2d(t)
    assert t1.num_vertices == 6 and len(t1.faces) == 4
    v, e, f = 3, 3, 1
    t2 = t
    for _ in range(2):
        v, e, f = v + e, 2 * e + 3 * f, 4 * f
        t2 = medial_subdivide_2d(t2)
    assert (t2.num_vertices, len(t2.edges()), len(t2.faces)) == (v, e, f) == (15, 30, 16)


def test_medial_halves_cycles():
    for m in (3, 4, 5):
        t = medial_subdivide_2d(cycle_complex(m))
        assert t.num_vertices == 2 * m and len(t.faces) == 2 * m
        assert check_free(t, strict=False)[0]


def test_medial_3d():
    t = medial_subdivide_3d(simplex(4))
    assert t.num_vertices == 11 and len(t.faces) == 12
    tri = simplex(3)
    assert medial_subdivide_3d(tri).faces == medial_subdivide_2d(tri).faces
    assert medial_subdivide_3d(tri).labels == medial_subdivide_2d(tri).labels
    with pytest.raises(DimensionTooHigh):
        medial_subdivide_2d(simplex(4))


def test_barycentric_counts():
    t = barycentric(simplex(3))
    assert t.num_vertices == 7 and len(t.faces) == 6
    e = barycentric(simplex(2))
    assert e.num_vertices == 3 and len(e.faces) == 2


def test_check_free():
    c3 = cycle_complex(3)
    assert check_free(c3, strict=False) == (True, None)
    ok, (face, g) = check_free(c3)       # edges meet their translates in a vertex
    assert not ok and g in (1, 2)
    bad = GComplex.build(build_cyclic(3), [[0, 1, 2], [0, 2, 1], [0, 1, 2]], c3.labels, c3.faces,
                         check=False)
    ok, (face, g) = check_free(bad, strict=False)
    assert not ok and face == (0,)
    for t in (medial_subdivide(c3, 1), classifying_space(build_cyclic(2), 2)):
        assert check_free(t)[0] == brute_free(t.faces, perms(t))


def test_validate_rejects_non_invariant():
    c4 = cycle_complex(4, order=2)
    with pytest.raises(NotInvariant):
        GComplex.build(c4.group, c4.atom_action, c4.labels, [(0, 1), (1, 2), (2, 3)])


def test_subdivision_preserves_action():
    t = classifying_space(build_cyclic(3), 2)
    for k in range(3):
        s = medial_subdivide(t, k)
        assert check_free(s)[0] == (k >= 1)
        assert s.is_pure


def test_json_roundtrip():
    t = medial_subdivide(classifying_space(build_cyclic(2), 2), 1)
    u = GComplex.from_json(t.to_json())
    assert u.faces == t.faces and u.labels == t.labels and u.atom_action == t.atom_action
    assert u.to_json() == t.to_json()


def test_f_vector_euler():
    # S^2 model: Euler characteristic 2
    t = medial_subdivide(classifying_space(build_cyclic(2), 2), 2)
    f = t.f_vector()
    assert f[0] - f[1] + f[2] == 2
