import random
from itertools import combinations_with_replacement

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from cornerminors.combinatorics import (Minor, MinorCollection, ParseError, ValidationError, canonical_cycle,
                                        cycle_binomial, enumerate_chordless_cycles, enumerate_cycles, ideal_of,
                                        interval_decomposition, interval_graph, parse_collection, toric_ideal,
                                        toric_map_image)
from cornerminors.groebner import graded_slice, ideal_equals, is_groebner_basis, membership, saturate
from cornerminors.poly import Cell, row_major_revlex
from cornerminors.suites import hexagon_example, random_corner, random_corner_interval


def collections():
    return st.builds(lambda seed, m, n, k: random_corner_interval(random.Random(seed), m, n, k),
                     st.integers(0, 10**6), st.integers(2, 5), st.integers(2, 5), st.integers(1, 6))


def test_parse_roundtrip_and_errors():
    c = hexagon_example()
    assert parse_collection(c.to_dict()) == c
    with pytest.raises(ParseError):
        parse_collection("{not json")
    with pytest.raises(ParseError):
        parse_collection({"m": 2, "n": 2})
    with pytest.raises(ParseError):
        parse_collection({"m": 2, "n": 2, "minors": [[1, 2, 1]]})
    with pytest.raises(ValidationError):
        parse_collection({"m": 2, "n": 2, "minors": [[1, 3, 1, 2]]})
    with pytest.raises(ValidationError):
        parse_collection({"m": 3, "n": 3, "minors": [[1, 2, 2, 3]]})
    relaxed = parse_collection({"m": 3, "n": 3, "minors": [[1, 2, 2, 3]], "cornerIntervalOnly": False})
    assert len(relaxed) == 1


def test_hexagon_example_intervals_and_cycle():
    c = hexagon_example()
    vert, horiz = interval_decomposition(c)
    assert (len(vert), len(horiz)) == (5, 4)
    g = interval_graph(c)
    ring = c.ring()
    long = [s for s in enumerate_chordless_cycles(g) if len(s) == 6]
    assert len(long) == 1
    want = ring.binomial([Cell(1, 2), Cell(2, 3), Cell(3, 4)], [Cell(1, 4), Cell(2, 2), Cell(3, 3)])
    f = cycle_binomial(long[0], g, ring)
    assert f == want or f == -want


@settings(max_examples=60)
@given(collections())
def test_interval_partition(c):
    for ivs in interval_decomposition(c):
        cells = [x for iv in ivs for x in iv.cells]
        assert sorted(cells) == sorted(c.vertices)
    vert, horiz = interval_decomposition(c)
    assert all(len({x.col for x in iv.cells}) == 1 for iv in vert)
    assert all(len({x.row for x in iv.cells}) == 1 for iv in horiz)
    # maximality: no edge of the collection joins two different intervals
    owner = {x: k for k, iv in enumerate(vert) for x in iv.cells}
    for m in c.minors:
        for a, b in m.vertical_edges:
            assert owner[a] == owner[b]


@settings(max_examples=60)
@given(collections())
def test_column_one_touches_every_row(c):
    g = interval_graph(c)
    col1 = [k for k, iv in enumerate(g.v_nodes) if iv.line == 1]
    adj = g.adjacency
    for k in range(len(g.h_nodes)):
        assert any(("v", j) in adj[("h", k)] for j in col1)
    if len(col1) == 1:
        assert len(adj[("v", col1[0])]) == len(g.h_nodes)


@settings(max_examples=40)
@given(st.integers(0, 10**6), st.integers(2, 4), st.integers(2, 4))
def test_corner_h1_touches_every_column(seed, m, n):
    c = random_corner(random.Random(seed), m, n)
    g = interval_graph(c)
    h1 = g.node_of(Cell(1, 1), "horizontal")
    assert len(g.adjacency[h1]) == len(g.v_nodes)


def _nx_graph(g):
    nxg = nx.Graph()
    nxg.add_edges_from((a, b) for a, nb in g.adjacency.items() for b in nb)
    return nxg


@settings(max_examples=60)
@given(collections())
def test_chordless_cycles_match_networkx(c):
    g = interval_graph(c)
    mine = {s.nodes for s in enumerate_chordless_cycles(g)}
    ref = {canonical_cycle(cyc) for cyc in nx.chordless_cycles(_nx_graph(g)) if len(cyc) >= 4}
    assert mine == ref


@settings(max_examples=40)
@given(collections())
def test_all_cycles_match_networkx(c):
    g = interval_graph(c)
    nxg = _nx_graph(g)
    mine = enumerate_cycles(g)
    ref = {canonical_cycle(cyc) for cyc in nx.simple_cycles(nxg) if len(cyc) >= 4}
    assert {s.nodes for s in mine} == ref
    chordless = {s.nodes for s in enumerate_chordless_cycles(g)}
    assert all(s.chordless == (s.nodes in chordless) for s in mine)


def _toric_hilbert(c, d):
    """Distinct images of degree-d monomials under x_ab -> h v: the Hilbert function of S/J_C."""
    g = interval_graph(c)
    images = set()
    for combo in combinations_with_replacement(c.vertices, d):
        image = []
        for x in combo:
            image += [g.node_of(x, "horizontal"), g.node_of(x, "vertical")]
        images.add(tuple(sorted(image)))
    return len(images)


def test_toric_map_image_is_product_of_endpoints():
    c = hexagon_example()
    g = interval_graph(c)
    img = dict(toric_map_image(c, g, {Cell(1, 2): 1, Cell(2, 3): 2}))
    want = {g.node_of(Cell(1, 2), "horizontal"): 1, g.node_of(Cell(1, 2), "vertical"): 1,
            g.node_of(Cell(2, 3), "horizontal"): 2, g.node_of(Cell(2, 3), "vertical"): 2}
    assert img == want


@pytest.mark.parametrize("seed", range(8))
def test_toric_ideal_matches_kernel_count(seed):
    rng = random.Random(seed)
    c = random_corner_interval(rng, rng.randint(2, 4), rng.randint(2, 4), rng.randint(1, 5), max_vertices=10)
    j = toric_ideal(c, ring=c.vertex_ring())
    for d in range(1, 4):
        assert graded_slice(j, d).quotient_dim() == _toric_hilbert(c, d)


@settings(max_examples=30)
@given(collections())
def test_vertical_interval_binomials_lie_in_toric_ideal(c):
    ring = c.ring()
    j = toric_ideal(c, ring=ring)
    vert, _ = interval_decomposition(c)
    for iv in vert:
        if iv.line == 1:
            continue
        for a in iv.cells:
            for b in iv.cells:
                if a.row < b.row:
                    f = ring.binomial([Cell(a.row, 1), b], [Cell(b.row, 1), a])
                    assert membership(f, j)


@settings(max_examples=15)
@given(st.integers(0, 10**6))
def test_saturation_gives_toric_ideal(seed):
    rng = random.Random(seed)
    c = random_corner_interval(rng, rng.randint(2, 4), rng.randint(2, 4), rng.randint(1, 5), max_vertices=12)
    ring = c.ring()
    assert ideal_equals(saturate(ideal_of(c, ring), c.vertices), toric_ideal(c, ring=ring))


@settings(max_examples=20)
@given(collections())
def test_binomial_closure(c):
    ring = c.ring()
    order = row_major_revlex(ring)
    for ideal in (ideal_of(c, ring), toric_ideal(c, ring=ring)):
        gb = ideal.gb(order)
        assert is_groebner_basis(list(gb), order)
        assert all(len(g) == 1 or g.is_pure_binomial() for g in gb)


def test_empty_collection():
    c = MinorCollection(3, 3, [])
    assert interval_decomposition(c) == ([], [])
    assert toric_ideal(c).is_zero()


def test_collection_rejects_duplicates():
    with pytest.raises(ValidationError):
        MinorCollection(2, 2, [Minor(1, 2, 1, 2), Minor(1, 2, 1, 2)])
