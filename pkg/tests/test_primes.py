import random
from itertools import chain, combinations

import pytest
from hypothesis import given, settings, strategies as st

from cornerminors.combinatorics import (Minor, MinorCollection, cycle_binomial, enumerate_cycles, ideal_of,
                                        interval_graph, toric_ideal)
from cornerminors.groebner import Ideal, ideal_contains, ideal_equals, membership
from cornerminors.poly import Cell
from cornerminors.primes import (X11, NotAdmissible, NotCornerCollection, containment_matrix,
                                 decomposition_check, enumerate_admissible, is_admissible, is_radical_corner,
                                 minimal_primes, obstruction_cycle, prime_component, radical_witness)
from cornerminors.suites import corner_suite, hexagon_example, random_corner, random_corner_interval, single_minor


def brute_admissible(c):
    """Subsets W of V(C) meeting every minor in nothing, one full edge, or more."""
    vs = c.vertices
    out = set()
    for w in chain.from_iterable(combinations(vs, k) for k in range(len(vs) + 1)):
        w = set(w)
        ok = True
        for m in c.minors:
            hit = w & m.vertices
            if hit and not any(set(e) <= hit for e in m.edges):
                ok = False
                break
        if ok:
            out.add(frozenset(w))
    return out


def test_single_minor_has_ten_admissible_sets():
    c = single_minor()
    sets = enumerate_admissible(c)
    assert len(sets) == 10
    assert set(sets) == brute_admissible(c)


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_admissible_enumeration_matches_brute_force(seed):
    rng = random.Random(seed)
    c = random_corner_interval(rng, rng.randint(2, 3), rng.randint(2, 3), rng.randint(1, 3), max_vertices=9)
    sets = enumerate_admissible(c)
    assert len(sets) == len(set(sets))
    assert set(sets) == brute_admissible(c)
    assert all(is_admissible(c, w) for w in sets)


def test_not_admissible_is_rejected():
    with pytest.raises(NotAdmissible):
        prime_component(single_minor(), [Cell(1, 1)])


def test_hexagon_example_minimal_primes():
    comps = minimal_primes(hexagon_example())
    assert [str(p) for p in comps] == ["P_{}", "P_{x11,x21,x31,x32}", "P_{x11,x21,x31,x41}"]


@pytest.mark.parametrize("c", [single_minor(), MinorCollection.full_corner(3, 3), hexagon_example()],
                         ids=["single", "corner3x3", "hexagon_example"])
def test_minimal_primes_antichain(c):
    comps = minimal_primes(c)
    mat = containment_matrix(comps)
    for a in range(len(comps)):
        for b in range(len(comps)):
            assert mat[a][b] == (a == b)


@settings(max_examples=12)
@given(st.integers(0, 10**6))
def test_corner_shortcut_agrees_with_containment(seed):
    c = random_corner(random.Random(seed), 3, 3)
    # debug recomputes without the shortcut and runs the cycle criterion alongside
    fast = minimal_primes(c, debug=True)
    slow = minimal_primes(c, shortcut=False)
    assert [p.w for p in fast] == [p.w for p in slow]


@settings(max_examples=10)
@given(st.integers(0, 10**6))
def test_components_are_admissible_and_split(seed):
    rng = random.Random(seed)
    c = random_corner_interval(rng, 3, 3, rng.randint(1, 4))
    for p in minimal_primes(c):
        assert is_admissible(c, p.w)
        variables = [g for g in p.generators if len(g) == 1]
        binomials = [g for g in p.generators if len(g) == 2]
        assert {next(iter(g.variables())) for g in variables} == set(p.w)
        assert all(not (g.variables() & set(p.w)) for g in binomials)
        # the binomial part is the toric ideal of the restricted collection
        ring = c.ring()
        assert ideal_equals(Ideal(ring, binomials), toric_ideal(p.restricted, ring=ring))


def test_minimal_primes_contain_the_ideal():
    c = hexagon_example()
    i = ideal_of(c)
    for p in minimal_primes(c):
        assert ideal_contains(p.ideal, i)


def test_empty_collection_has_zero_prime():
    comps = minimal_primes(MinorCollection(2, 2, []))
    assert len(comps) == 1 and comps[0].ideal.is_zero()


@pytest.mark.parametrize("m,n", [(3, 3), (3, 4)])
def test_corner_components_are_variable_ideals_with_x11(m, n):
    for p in minimal_primes(MinorCollection.full_corner(m, n), shortcut=False):
        if p.w:
            assert X11 in p.w and p.is_variable_ideal


def test_radical_verdicts():
    assert all(is_radical_corner(MinorCollection.full_corner(2, n)) for n in range(2, 6))
    assert is_radical_corner(single_minor())
    c = MinorCollection.full_corner(3, 3)
    assert not is_radical_corner(c)
    g = interval_graph(c)
    cyc = obstruction_cycle(c)
    assert len(cyc) == 4
    v1, h1 = g.node_of(X11, "vertical"), g.node_of(X11, "horizontal")
    assert not cyc.meets(v1) and not cyc.meets(h1)


def test_radical_needs_corner():
    with pytest.raises(NotCornerCollection):
        is_radical_corner(hexagon_example())


@pytest.mark.parametrize("c", corner_suite(12, seed=1), ids=str)
def test_radical_witness_cross_check(c):
    assert is_radical_corner(c) == ideal_equals(radical_witness(c), ideal_of(c))


@settings(max_examples=10)
@given(st.integers(0, 10**6))
def test_x11_dichotomy(seed):
    c = random_corner(random.Random(seed), 3, 3)
    ring = c.ring()
    g = interval_graph(c)
    i = ideal_of(c, ring)
    v1, h1 = g.node_of(X11, "vertical"), g.node_of(X11, "horizontal")
    for s in enumerate_cycles(g):
        f = ring.gen(X11) * cycle_binomial(s, g, ring)
        assert membership(f, i) == (s.meets(v1) or s.meets(h1))


def test_identities_on_3x3_corner():
    rows = decomposition_check(MinorCollection.full_corner(3, 3), max_degree=5, elimination=False)
    assert rows and all(r["pass"] for r in rows)


def test_intersection_identities_fail_on_2x3_corner():
    # the only nonempty minimal support is column 1, so the intersection is (x11, x21)
    rows = decomposition_check(MinorCollection.full_corner(2, 3), max_degree=4)
    by = {}
    for r in rows:
        by.setdefault(r["identity"], []).append(r["pass"])
    assert all(by["decomposition"]) and all(by["prime-intersection"])
    assert False in by["intersection-formula"]
    assert False in by["x11-square"]
    comps = minimal_primes(MinorCollection.full_corner(2, 3))
    assert [str(p) for p in comps] == ["P_{}", "P_{x11,x21}"]


def test_single_minor_intersections_are_vacuous():
    rows = decomposition_check(single_minor(), max_degree=3)
    vac = {r["identity"] for r in rows if r.get("vacuous")}
    assert vac == {"x11-square", "intersection-formula"}
    assert all(r["pass"] for r in rows if not r.get("vacuous"))


def test_example_component_of_hexagon_example():
    c = hexagon_example()
    p = prime_component(c, [Cell(1, 2), Cell(2, 2)])
    assert sorted(str(x) for x in p.restricted.minors) == ["[1,3|1,4]", "[2,3|1,3]", "[3,4|1,2]"]
    assert len(p.generators) == 5
