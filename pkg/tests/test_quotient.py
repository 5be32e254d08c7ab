import math

import pytest

from gborsuk.complex import cycle_complex, medial_subdivide, classifying_space
from gborsuk.group import build_cyclic
from gborsuk.quotient import (LoopyGraph, QuotGraph, borsuk_graph_points, export_dimacs,
                              parse_dimacs, quotient_graph, quotient_witness)
from oracles import brute_quotient, circulant


def angle_dist(x, y):
    d = abs(x - y) % (2 * math.pi)
    return min(d, 2 * math.pi - d)


def rotate(m):
    return lambda g, x: x + 2 * math.pi * g / m


def check_against_oracle(t):
    h = quotient_graph(t)
    edges, loops = brute_quotient(t.num_vertices, t.faces, t.vertex_action)
    assert set(h.edges) == edges and set(h.loops) == loops
    return h


def test_c6_z3_is_k6():
    h = check_against_oracle(cycle_complex(6, order=3))
    assert h.num_edges == 15 and not h.loops


def test_c12_z3_is_circulant():
    h = check_against_oracle(cycle_complex(12, order=3))
    assert set(h.edges) == circulant(12, (3, 4, 5))


def test_c3_z3_loops_everywhere():
    h = check_against_oracle(cycle_complex(3))
    assert h.loops == frozenset({0, 1, 2})
    with pytest.raises(LoopyGraph):
        h.require_loop_free()


def test_subdivided_complexes_match_oracle():
    for t in (medial_subdivide(classifying_space(build_cyclic(2), 2), 1),
              medial_subdivide(classifying_space(build_cyclic(3), 2), 1)):
        h = check_against_oracle(t)
        assert h.is_invariant()


def test_witness():
    t = cycle_complex(6, order=3)
    g = quotient_witness(t, 0, 3)
    assert g is not None
    img = t.vertex_action[g][3]
    assert img == 0 or tuple(sorted((0, img))) in {tuple(f) for f in t.faces}


def test_point_graphs():
    h = borsuk_graph_points([0.0, math.pi], rotate(2), angle_dist, 0.1, 2)
    assert set(h.edges) == {(0, 1)}
    h = borsuk_graph_points([0.0, 2 * math.pi / 3], rotate(3), angle_dist, 0.01, 3)
    assert set(h.edges) == {(0, 1)}
    pts = [k * math.pi / 2 for k in range(4)]
    h = borsuk_graph_points(pts, rotate(2), angle_dist, 0.01, 2)
    assert set(h.edges) == {(0, 2), (1, 3)}
    with pytest.raises(ValueError):
        borsuk_graph_points(pts, rotate(2), angle_dist, 0.0, 2)


def test_dimacs_roundtrip():
    h = quotient_graph(cycle_complex(12, order=3))
    text = export_dimacs(h)
    assert "p edge 12 36" in text
    assert parse_dimacs(text) == h


def test_dimacs_refuses_loops():
    h = quotient_graph(cycle_complex(3))
    with pytest.raises(LoopyGraph):
        export_dimacs(h)
    text = export_dimacs(h, allow_loops=True)
    assert text.startswith("c ERROR") and "c loop 1" in text


def test_from_edges_range_check():
    with pytest.raises(ValueError):
        QuotGraph.from_edges(2, [(0, 2)])
