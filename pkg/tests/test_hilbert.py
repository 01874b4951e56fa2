import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from cornerminors.combinatorics import MinorCollection, ideal_of
from cornerminors.groebner import Ideal, graded_slice, initial_ideal, monomial_ideal
from cornerminors.hilbert import (BettiTable, UnivariatePoly, betti_comparison, betti_koszul,
                                  determinantal_ideal, hilbert_of_binomial_quotient,
                                  hilbert_of_monomial_quotient, krull_dim_of_monomial_ideal,
                                  monomial_numerator, regularity_of, star_edge_ideal, taylor_betti,
                                  hilbert_formula_check)
from cornerminors.poly import Ring, mono_divides, row_major_revlex
from cornerminors.suites import hexagon_example, random_corner_interval

Z, OMZ = UnivariatePoly.z(), UnivariatePoly.one_minus_z


def monomial_gens(nvars, max_exp=2, max_gens=5):
    mono = st.tuples(*[st.integers(0, max_exp)] * nvars).filter(any)
    return st.lists(mono, min_size=1, max_size=max_gens)


def test_univariate_basics():
    p = OMZ(3)
    assert p.to_list() == [1, -3, 3, -1]
    q, r = p.divide_one_minus_z()
    assert q == OMZ(2) and r == 0
    assert p.order_at_one() == 3
    # 1/(1-z)^2 = 1 + 2z + 3z^2 + ...
    assert UnivariatePoly([1]).series(2, 4) == [1, 2, 3, 4, 5]


@settings(max_examples=60)
@given(monomial_gens(3))
def test_numerator_counts_standard_monomials(gens):
    counts = [0] * 6
    for u in product(range(6), repeat=3):
        if sum(u) < 6 and not any(mono_divides(g, u) for g in gens):
            counts[sum(u)] += 1
    assert monomial_numerator(gens, 3).series(3, 5) == counts


@pytest.mark.parametrize("m", range(1, 9))
def test_star_numerator(m):
    assert hilbert_of_monomial_quotient(star_edge_ideal(m)).numerator == Z * OMZ(m) + OMZ(1)


@settings(max_examples=40)
@given(monomial_gens(4, max_exp=1, max_gens=6))
def test_krull_dimension_matches_vertex_cover(gens):
    ring = Ring(["a", "b", "c", "d"])
    data = hilbert_of_monomial_quotient(monomial_ideal(ring, gens))
    assert data.krull_dim == krull_dim_of_monomial_ideal(gens, 4)


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 3), (3, 4)])
def test_corner_interval_numerator_matches_graded_slices(m, n):
    c = MinorCollection.full_corner_interval(m, n)
    ring = c.ring()
    i = ideal_of(c, ring)
    data = hilbert_of_binomial_quotient(i, row_major_revlex(ring))
    hf = data.hilbert_function(4)
    ini = initial_ideal(i, row_major_revlex(ring))
    for d in range(5):
        assert graded_slice(i, d).quotient_dim() == hf[d]
        assert graded_slice(ini, d).quotient_dim() == hf[d]


@pytest.mark.parametrize("m", range(2, 5))
@pytest.mark.parametrize("n", range(2, 5))
def test_closed_formula_needs_the_star_tail(m, n):
    r = hilbert_formula_check(m, n)
    assert r.proof_form_equal
    # the printed tail z(1-z)^((m-1)(n-1)) misses a factor (1-z)^(m-1)
    assert r.lhs - r.rhs == Z * OMZ((m - 1) * (n - 1)) * (OMZ(m - 1) - UnivariatePoly([1]))


def test_small_closed_formula_values():
    r = hilbert_formula_check(2, 2)
    assert r.lhs == UnivariatePoly([1, 0, -1])
    assert r.rhs == UnivariatePoly([1, 0, 0, -1])


@settings(max_examples=40)
@given(monomial_gens(4, max_exp=2, max_gens=6))
def test_koszul_matches_taylor(gens):
    ring = Ring(["a", "b", "c", "d"])
    ideal = monomial_ideal(ring, gens)
    assert betti_koszul(ideal) == taylor_betti(ideal)


def _random_binomial_ideal(seed):
    rng = random.Random(seed)
    c = random_corner_interval(rng, rng.randint(2, 3), rng.randint(2, 4), rng.randint(1, 4))
    return ideal_of(c, c.vertex_ring())


@pytest.mark.parametrize("seed", range(10))
def test_euler_characteristic(seed):
    ideal = _random_binomial_ideal(seed)
    table = betti_koszul(ideal)
    assert not table.truncated
    hs = hilbert_of_binomial_quotient(ideal)
    assert table.euler_numerator() == hs.numerator


@pytest.mark.parametrize("seed", range(10))
def test_regularity_bounded_by_initial_ideal(seed):
    ideal = _random_binomial_ideal(seed)
    ini = initial_ideal(ideal)
    assert regularity_of(ideal).value <= regularity_of(ini).value
    # upper semicontinuity, entrywise
    assert betti_koszul(ideal).dominated_by(taylor_betti(ini))


@pytest.mark.parametrize("seed", range(4))
def test_pruned_matches_unpruned(seed):
    ideal = _random_binomial_ideal(seed)
    full = betti_koszul(ideal)
    raw = betti_koszul(ideal, max_deg=4, prune=False)
    assert {k: v for k, v in full.nonzero.items() if k[1] <= 4} == raw.nonzero


def test_known_tables():
    ring = Ring.grid(2, 2)
    det = determinantal_ideal(ring, [1, 2], [1, 2])
    assert betti_koszul(det).nonzero == {(0, 0): 1, (1, 2): 1}
    d33 = determinantal_ideal(Ring.grid(3, 3), [1, 2, 3], [1, 2, 3])
    t = betti_koszul(d33)
    assert t.nonzero == {(0, 0): 1, (1, 2): 9, (2, 3): 16, (3, 4): 9, (4, 6): 1}
    corner = betti_koszul(ideal_of(MinorCollection.full_corner(3, 3)))
    assert corner.regularity == 3
    fig = betti_koszul(ideal_of(hexagon_example()))
    # four minors in disjoint leading terms: a complete intersection
    assert fig.nonzero == {(0, 0): 1, (1, 2): 4, (2, 4): 6, (3, 6): 4, (4, 8): 1}


def test_betti_table_json_and_render():
    t = BettiTable({(0, 0): 1, (1, 2): 4, (2, 4): 6})
    assert BettiTable.from_json(t.to_json()) == t
    text = t.render()
    assert "total:" in text and text.splitlines()[1].split()[1:] == ["1", "4", "6"]


def test_removing_an_interval_lowers_betti_numbers():
    c = hexagon_example()
    for h in range(4):
        assert betti_comparison(c, h)["pass"]


def test_zero_and_unit_ideals():
    ring = Ring(["a"])
    assert betti_koszul(Ideal(ring, [])).nonzero == {(0, 0): 1}
    assert betti_koszul(Ideal(ring, [ring.one()])).nonzero == {}
