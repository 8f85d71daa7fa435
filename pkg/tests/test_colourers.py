import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from cliquecol import (
    DimensionMismatch,
    GridParams,
    HexLattice,
    PointSet,
    StripParams,
    build_geometric_graph,
    cell_two_colouring,
    certify_clique_colouring,
    grid_colouring,
    hex_cell_of,
    hex_colouring_R3,
    is_clique_colouring,
    strip_cocomparability_order,
    strip_colouring,
)
from cliquecol.colourers.grid import grid_palette_bound
from cliquecol.colourers.hexagonal import CYLINDER_LATTICE
from cliquecol.colourers.strip import StripReport
from cliquecol.constants import pentagon_vertices


def point_sets(dim, max_n=60, side=4.0):
    return arrays(np.float64, st.tuples(st.integers(1, max_n), st.just(dim)),
                  elements=st.floats(0, side, allow_nan=False))


def _valid(ps, colouring):
    return is_clique_colouring(build_geometric_graph(ps), colouring)[0]


# -- strips --------------------------------------------------------------------

def test_strip_params():
    p = StripParams()
    assert math.isclose(p.strip_height, (0.5 + math.sqrt(3) / 2) / 2)
    assert 0.5 < p.strip_height < 0.8660254
    for bad in (0.5, 0.8660255, 0.3):
        with pytest.raises(ValueError):
            StripParams(bad)


def test_strip_on_pentagon():
    ps = PointSet(pentagon_vertices(1.05), 1.0)
    c = strip_colouring(ps)
    assert c.palette_size <= 9 and _valid(ps, c)


def test_strip_collinear_points():
    ps = PointSet([[0.4 * i, 0.1] for i in range(10)], 1.0)
    report = StripReport()
    c = strip_colouring(ps, report=report)
    assert report.strips == 1
    assert c.palette_size <= 3 and _valid(ps, c)


def test_strip_edge_gets_two_colours():
    c = strip_colouring(PointSet([[0.0, 0.1], [0.5, 0.1]], 1.0))
    assert c[0] != c[1]


def test_strip_rejects_other_dimensions():
    with pytest.raises(DimensionMismatch, match="strip requires dimension 2"):
        strip_colouring(PointSet(np.zeros((3, 3)), 1.0))


@given(point_sets(2), st.floats(0.3, 2.0))
def test_strip_valid_cyclic_palettes(pts, r):
    ps = PointSet(pts, r)
    c = strip_colouring(ps)
    assert c.palette_size <= 9 and _valid(ps, c)
    strip = StripParams().strip_index(pts[:, 1] / r)
    cols = np.array(c.colours)
    assert (cols // 3 == strip % 3).all()
    for s in np.unique(strip):
        assert len(np.unique(cols[strip == s])) <= 3


def test_cocomparability_examples():
    chain = strip_cocomparability_order([[0, 0], [2, 0], [4, 0]])
    assert chain.longest_chain() == 3
    pair = strip_cocomparability_order([[0, 0], [0.3, 0.1]])
    assert not pair.precedes(0, 1) and not pair.precedes(1, 0)


@given(arrays(np.float64, st.tuples(st.integers(1, 30), st.just(2)),
              elements=st.floats(0, 1, allow_nan=False)), st.floats(0.5, 6.0))
def test_cocomparability_order_is_partial_order(unit, width):
    pts = unit * [width, StripParams().strip_height * 0.999]
    order = strip_cocomparability_order(pts)
    assert order.is_strict_partial_order()
    g = build_geometric_graph(PointSet(pts, 1.0))
    inc = order.incomparability_graph()
    for u, v in itertools.combinations(range(len(pts)), 2):
        if pts[u, 0] != pts[v, 0]:
            assert inc.has_edge(u, v) == g.has_edge(u, v)


# -- grid ------------------------------------------------------------------------

def test_grid_palette_bounds():
    assert grid_palette_bound(2) == 18
    assert grid_palette_bound(3) == 54
    for d in range(1, 10):
        p = GridParams(d)
        assert p.k == math.ceil(math.sqrt(d))
        assert p.cell_side * math.sqrt(d) <= 1 + 1e-12


def test_grid_single_cell_is_two_coloured():
    ps = PointSet(np.random.default_rng(1).uniform(0.01, 0.49, (12, 2)), 1.0)
    assert build_geometric_graph(ps).m == 66
    c = grid_colouring(ps)
    assert c.palette_size == 2 and _valid(ps, c)


@pytest.mark.parametrize("dim", [1, 2, 3, 4])
def test_grid_valid_random(dim):
    rng = np.random.default_rng(dim)
    for _ in range(15):
        ps = PointSet(rng.uniform(0, 3, (int(rng.integers(1, 80)), dim)), float(rng.uniform(0.4, 1.5)))
        c = grid_colouring(ps)
        assert c.palette_size <= grid_palette_bound(dim) and _valid(ps, c)


@settings(max_examples=30)
@given(st.integers(1, 4), st.integers(0, 10**6))
def test_grid_family_cells_far_apart(dim, seed):
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-4, 4, (200, dim))
    p = GridParams(dim)
    cells = p.cells(pts)
    fam = p.family_id(cells)
    i, j = np.triu_indices(len(pts), 1)
    same = (fam[i] == fam[j]) & (cells[i] != cells[j]).any(axis=1)
    d = np.linalg.norm(pts[i[same]] - pts[j[same]], axis=1)
    assert (d > 1).all()


# -- hexagonal lattice -----------------------------------------------------------

def test_hex_cell_examples():
    assert hex_cell_of([0.0, 0.0]) == ((0, 0), 0)
    ab, col = hex_cell_of([1.0, 0.0])
    assert ab == (1, 0) and col != 0


def test_hex_cosets_partition_lattice():
    lat = HexLattice()
    assert sorted(int(lat.colour(r)) for r in lat.representatives) == list(range(7))
    for g in lat.sublattice:
        assert lat.colour(g) == 0
    ab = np.array(list(itertools.product(range(-10, 11), repeat=2)))
    counts = np.bincount(lat.colour(ab), minlength=7)
    assert counts.min() > 0
    # neighbouring cells always differ
    for d in ((1, 0), (0, 1), (-1, 1)):
        assert (lat.colour(ab) != lat.colour(ab + d)).all()


def _poly_dist(P, Q):
    def seg(p, a, b):
        ab = b - a
        t = np.clip(np.dot(p - a, ab) / np.dot(ab, ab), 0, 1)
        return np.linalg.norm(p - (a + t * ab))

    return min(min(seg(p, Q[i], Q[(i + 1) % 6]) for p in P for i in range(6)),
               min(seg(q, P[i], P[(i + 1) % 6]) for q in Q for i in range(6)))


def test_same_colour_cells_distance():
    lat = HexLattice()
    h0 = lat.hexagon((0, 0))
    dists = [_poly_dist(h0, lat.hexagon(ab)) for ab in itertools.product(range(-4, 5), repeat=2)
             if ab != (0, 0) and lat.colour(ab) == 0]
    # [PAPER] sqrt(7/3) ~ 1.527525; at least 1.49
    assert math.isclose(min(dists), math.sqrt(7 / 3), abs_tol=1e-9)
    assert min(dists) >= 1.49
    assert min(dists) * CYLINDER_LATTICE.scale > 1.1


@settings(max_examples=30)
@given(st.integers(0, 10**6))
def test_hex_nearest_lattice_point(seed):
    rng = np.random.default_rng(seed)
    lat = HexLattice(scale=float(rng.uniform(0.5, 2)))
    xy = rng.uniform(-5, 5, (200, 2))
    ab, _ = lat.cells(xy)
    cand = np.array(list(itertools.product(range(-20, 21), repeat=2)))
    centres = lat.point(cand)
    d = np.linalg.norm(xy[:, None] - centres[None], axis=2).min(axis=1)
    got = np.linalg.norm(xy - lat.point(ab), axis=1)
    assert np.allclose(got, d)


def test_hex_r3_examples():
    pts = np.random.default_rng(5).uniform(0, 3, (50, 3))
    ps = PointSet(pts, 1.0)
    c = hex_colouring_R3(ps)
    assert c.palette_size <= 21 and _valid(ps, c)
    one = PointSet([[0.01 * i, 0.02 * i, 0.5] for i in range(8)], 1.0)
    c = hex_colouring_R3(one)
    assert build_geometric_graph(one).m == 28
    assert c.palette_size == 2 and _valid(one, c)
    with pytest.raises(DimensionMismatch):
        hex_colouring_R3(PointSet(np.zeros((2, 2)), 1.0))


@settings(max_examples=25)
@given(point_sets(3, max_n=80, side=3.0), st.floats(0.5, 1.5))
def test_hex_r3_valid(pts, r):
    ps = PointSet(pts, r)
    c = hex_colouring_R3(ps)
    assert c.palette_size <= 21 and _valid(ps, c)


# -- dense two-colouring and the certificate -----------------------------------

def test_cell_two_colouring_dense():
    pts = np.random.default_rng(0).uniform(0, 3, (800, 2))
    ps = PointSet(pts, 1.5)
    c, report = cell_two_colouring(ps)
    assert c.palette_size == 2
    assert math.isclose(report.cell_diameter, 1.5 * (1 - math.sqrt(3) / 2))
    # sparse boundary cells defeat the certificate here, so check exactly
    assert _valid(ps, c)


def test_cell_condition_reported():
    pts = np.random.default_rng(2).uniform(0, 20, (20000, 2))
    _, report = cell_two_colouring(PointSet(pts, 15.0), window=([0, 0], [20, 20]))
    assert report.cells_in_window > 0
    assert report.cell_condition == (report.deficient_cells == 0)


@settings(max_examples=60)
@given(point_sets(2, max_n=25, side=2.5), st.floats(0.4, 1.5), st.data())
def test_certificate_is_sound(pts, r, data):
    colours = data.draw(st.lists(st.integers(0, 2), min_size=len(pts), max_size=len(pts)))
    cert = certify_clique_colouring(pts, r, colours)
    if cert.certified:
        assert _valid(PointSet(pts, r), colours)


def test_certificate_grid_path_agrees(monkeypatch):
    import cliquecol.certificate as certmod

    pts = np.random.default_rng(4).uniform(0, 4, (600, 2))
    c, _ = cell_two_colouring(PointSet(pts, 2.0))
    direct = certify_clique_colouring(pts, 2.0, c.colours)
    monkeypatch.setattr(certmod, "DIRECT_EDGE_LIMIT", 0)
    gridded = certify_clique_colouring(pts, 2.0, c.colours)
    assert direct.certified == gridded.certified
    bad = np.zeros(len(pts), dtype=int)
    assert not certify_clique_colouring(pts, 2.0, bad).certified
