from fractions import Fraction

import pytest

from gborsuk.complex import GComplex, cycle_complex
from gborsuk.covers import (BaseUnverified, CoverColoring, IncompatibleRefinement, MaxKExceeded,
                            PrecoloringNotDistinct, bounds, circle_cover, cyclic_join_cover,
                            extract_regions, join_cover, one_dim_cover, pipeline, verify_cover)
from gborsuk.group import build_cyclic, build_product, build_symmetric, parse_group
from gborsuk.quotient import quotient_graph
from oracles import brute_quotient, circulant, proper

Z2, Z3, Z4 = build_cyclic(2), build_cyclic(3), build_cyclic(4)


def oracle_proper(c):
    t = c.triangulation
    edges, loops = brute_quotient(t.num_vertices, t.faces, t.vertex_action)
    return not loops and proper(edges, c.colors)


def test_bounds():
    assert bounds(Z3, 2) == bounds(Z3, 2).__class__(5, 6, 5)
    for d in range(5):
        b = bounds(Z2, d)
        assert b.lower == b.upper == d + 2
    for g in (Z3, build_symmetric(3)):
        b = bounds(g, 0)
        assert b.lower == b.conjectured == g.order
    b = bounds(build_cyclic(5), 2)
    assert (b.lower, b.upper, b.conjectured) == (7, 10, 7)
    with pytest.raises(ValueError):
        bounds(Z2, -1)


def test_circle_covers():
    c = circle_cover(2, 6)
    assert c.colors == (0, 0, 1, 1, 2, 2) and c.verified and oracle_proper(c)
    c = circle_cover(3, 12)
    assert c.verified and c.num_colors_used == 4
    assert set(quotient_graph(c.triangulation).edges) == circulant(12, (3, 4, 5))
    assert [c.colors.count(x) for x in range(4)] == [3, 3, 3, 3]
    c = circle_cover(5, 30)
    assert c.verified and c.num_colors_used == 6 and oracle_proper(c)
    assert circle_cover(3, 24).verified
    with pytest.raises(IncompatibleRefinement):
        circle_cover(3, 14)


def test_cyclic_join_fragments():
    c = cyclic_join_cover(3, [1, 2, 3])
    assert c.verified and set(c.colors) == {0, 1, 2, 3} and oracle_proper(c)
    c = cyclic_join_cover(2, [1, 2])
    assert c.verified and set(c.colors) == {0, 1, 2}
    with pytest.raises(PrecoloringNotDistinct):
        cyclic_join_cover(3, [1, 1, 2])
    with pytest.raises(PrecoloringNotDistinct):
        cyclic_join_cover(2, [0, 1])


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "S3"])
def test_one_dim_cover(name):
    g = parse_group(name)
    c = one_dim_cover(g)
    assert c.verified and c.num_colors_used == g.order + 1


def test_one_dim_small_cases_oracle():
    for g in (Z2, build_product(Z2, Z2)):
        assert oracle_proper(one_dim_cover(g))


def test_join_covers():
    c = join_cover(Z3, circle_cover(3), 1)
    assert c.verified and c.num_colors_used == 6 and oracle_proper(c)
    c = join_cover(Z2, one_dim_cover(Z2), 1)
    assert c.verified and c.num_colors_used == 4
    unverified = CoverColoring(cycle_complex(6, order=2), (0,) * 6, 1)
    with pytest.raises(BaseUnverified):
        join_cover(Z2, unverified)
    with pytest.raises(BaseUnverified):
        join_cover(Z2, circle_cover(3))


def test_verify_cover_failures():
    t = cycle_complex(6, order=3)
    bad = verify_cover(CoverColoring(t, tuple(i % 2 for i in range(6)), 2))
    assert bad.status == "failed"
    u, v, g = bad.witness
    assert bad.colors[u] == bad.colors[v] and g in (1, 2)
    loopy = verify_cover(CoverColoring(cycle_complex(3), (0, 1, 2), 3))
    assert loopy.status == "failed" and loopy.witness[0] == "loop"
    short = verify_cover(CoverColoring(t, (0, 1), 6))
    assert short.witness[0] == "size"
    assert verify_cover(circle_cover(3)).verified


def trivial(n_atoms, faces):
    g = build_cyclic(1)
    return GComplex.build(g, [list(range(n_atoms))], [((a, Fraction(1)),) for a in range(n_atoms)],
                          faces)


def test_extract_regions():
    edge = CoverColoring(trivial(2, [(0, 1)]), (0, 1), 2)
    regions = extract_regions(edge)
    assert [(col, len(fs)) for col, fs in regions] == [(0, 1), (1, 1)]
    regions = extract_regions(circle_cover(2))
    assert [(col, len(fs)) for col, fs in regions] == [(0, 4), (1, 4), (2, 4)]
    tri = CoverColoring(trivial(3, [(0, 1, 2)]), (0, 1, 2), 3)
    assert [len(fs) for _, fs in extract_regions(tri)] == [2, 2, 2]


def test_point_color_matches_vertices():
    c = join_cover(Z3, circle_cover(3), 1)
    for v in range(0, c.triangulation.num_vertices, 7):
        assert c.point_color(c.triangulation.labels[v]) == c.colors[v]
    # the barycentric locator agrees on vertices as well
    bare = CoverColoring(c.triangulation, c.colors, c.num_colors)
    for v in range(0, c.triangulation.num_vertices, 11):
        assert bare.point_color(c.triangulation.labels[v]) == c.colors[v]


def test_cover_json_roundtrip():
    c = circle_cover(3)
    d = CoverColoring.from_json(c.to_json())
    assert d.colors == c.colors and d.status == "verified"
    assert verify_cover(d).verified


def test_pipeline_z2_z3():
    rep = pipeline(Z2, 1)
    assert rep.cover.verified and rep.achieved == 3 and rep.certified_equal
    rep = pipeline(Z3, 2)
    assert rep.cover.verified and rep.achieved == 5 and rep.certified_equal
    assert [s.outcome for s in rep.trace][-1] == "sat"
    assert rep.to_json() == pipeline(Z3, 2).to_json()


def test_pipeline_z4():
    rep = pipeline(Z4, 2)
    assert rep.cover.verified and rep.achieved == 6


def test_pipeline_max_k():
    with pytest.raises(MaxKExceeded) as info:
        pipeline(Z3, 2, max_k=1)
    assert [s.outcome for s in info.value.report.trace] == ["skipped", "skipped"]


def test_pipeline_export():
    rep = pipeline(Z3, 2, method="export")
    assert rep.cover is None and rep.problem.num_colors == 5
    assert rep.problem.graph.n == 69
    assert len(set(rep.problem.precolored.values())) == 5
