"""Admissible sets, the primes P_W, minimal primes and radicality of corner collections."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional

import networkx as nx

from .combinatorics import (Cycle, MinorCollection, canonical_cycle, cycle_binomial,
                            enumerate_chordless_cycles, ideal_of, interval_graph, toric_ideal)
from .config import DEFAULT_CAPS, Caps, PreconditionError, ResourceCap
from .groebner import (Ideal, common_grading, graded_slice, ideal_contains, ideal_equals,
                       intersect_all, membership, variable_ideal)
from .poly import Cell, Polynomial, Ring


class NotAdmissible(PreconditionError):
    pass


class NotCornerCollection(PreconditionError):
    pass


X11 = Cell(1, 1)


def is_admissible(c: MinorCollection, w: Iterable[Cell]) -> bool:
    """Each minor meets ``w`` not at all or in at least one full edge."""
    w = set(w)
    if not w <= set(c.vertices):
        return False
    for x in c.minors:
        if x.vertices & w and not any(e <= w for e in x.edges):
            return False
    return True


def enumerate_admissible(c: MinorCollection, caps: Caps = DEFAULT_CAPS) -> List[FrozenSet[Cell]]:
    """All admissible subsets of ``V(C)``, by size and then lexicographically."""
    verts = list(c.vertices)
    if len(verts) > caps.admissible_cap:
        raise ResourceCap(f"|V(C)| = {len(verts)} exceeds the admissible-set cap {caps.admissible_cap}")
    pos = {v: k for k, v in enumerate(verts)}
    # a minor can be judged once its last vertex has been decided
    closing = {k: [] for k in range(len(verts))}
    for x in c.minors:
        closing[max(pos[v] for v in x.vertices)].append(x)

    out = []
    chosen = set()

    def ok(x):
        if not (x.vertices & chosen):
            return True
        return any(e <= chosen for e in x.edges)

    def walk(k):
        if k == len(verts):
            out.append(frozenset(chosen))
            return
        for take in (False, True):
            if take:
                chosen.add(verts[k])
            if all(ok(x) for x in closing[k]):
                walk(k + 1)
            if take:
                chosen.discard(verts[k])

    walk(0)
    out.sort(key=lambda w: (len(w), sorted(w)))
    return out


@dataclass(frozen=True)
class PrimeComponent:
    """``P_W = (W) + J_{C'}`` with ``C'`` the minors avoiding ``W``."""

    collection: MinorCollection
    w: FrozenSet[Cell]
    ring: Ring

    @cached_property
    def restricted(self) -> MinorCollection:
        return self.collection.without(self.w)

    @cached_property
    def toric(self) -> Ideal:
        return toric_ideal(self.restricted, ring=self.ring)

    @cached_property
    def ideal(self) -> Ideal:
        return variable_ideal(self.ring, sorted(self.w)) + self.toric

    @property
    def generators(self) -> List[Polynomial]:
        return list(self.ideal.generators)

    @property
    def is_variable_ideal(self) -> bool:
        return self.toric.is_zero()

    def __str__(self):
        return "P_{" + ",".join(f"x{c.row}{c.col}" for c in sorted(self.w)) + "}"


def prime_component(c: MinorCollection, w: Iterable[Cell], ring: Ring | None = None) -> PrimeComponent:
    w = frozenset(w)
    if not is_admissible(c, w):
        raise NotAdmissible(f"{sorted(w)} is not admissible")
    return PrimeComponent(c, w, ring or c.ring())


def contains_component(p: PrimeComponent, q: PrimeComponent, caps: Caps = DEFAULT_CAPS,
                       check: bool = False) -> bool:
    """Is ``P_W`` (``p``) contained in ``P_V`` (``q``)?  Decided by membership.

    With ``check`` the combinatorial cycle criterion is evaluated as well and
    an AssertionError is raised if the two answers differ.
    """
    if not p.w <= q.w:
        verdict = False
    else:
        verdict = ideal_contains(q.ideal, p.toric, caps=caps)
    if check:
        alt = containment_criterion(p, q, caps)
        if alt != verdict:
            raise AssertionError(f"containment {p} in {q}: membership {verdict}, cycle criterion {alt}")
    return verdict


def containment_criterion(p: PrimeComponent, q: PrimeComponent, caps: Caps = DEFAULT_CAPS) -> bool:
    """Cycle form of the containment test.

    ``W`` must lie in ``V``, and every cycle binomial of ``G(C')`` outside
    ``J_{C''}`` needs a vertex of ``V`` in each of its two monomials.
    """
    if not p.w <= q.w:
        return False
    g = interval_graph(p.restricted)
    ring = p.ring
    for s in enumerate_chordless_cycles(g, caps=caps):
        f = cycle_binomial(s, g, ring)
        if membership(f, q.toric, caps=caps):
            continue
        hit = [any(ring.symbols[k] in q.w for k, a in enumerate(u) if a) for u in f.terms]
        if not all(hit):
            return False
    return True


def minimal_primes(c: MinorCollection, caps: Caps = DEFAULT_CAPS, shortcut: bool = True,
                   debug: bool = False) -> List[PrimeComponent]:
    """Minimal elements among the ``P_W``; ``P_empty = J_C`` comes first.

    For corner collections the default takes the shortcut that every other
    minimal prime is generated by variables.  ``debug`` recomputes through
    pairwise containment and raises if the two answers disagree.
    """
    ring = c.ring()
    if shortcut and c.is_corner and c.minors:
        fast = _corner_minimal(c, ring, caps)
        if debug:
            slow = _minimal_by_containment(c, ring, caps, check=True)
            if [p.w for p in fast] != [p.w for p in slow]:
                raise AssertionError("corner shortcut disagrees with containment route")
        return fast
    return _minimal_by_containment(c, ring, caps, check=debug)


def _minimal_by_containment(c, ring, caps, check=False):
    found: List[PrimeComponent] = []
    for w in enumerate_admissible(c, caps):
        q = PrimeComponent(c, w, ring)
        if not any(contains_component(p, q, caps, check=check) for p in found):
            found.append(q)
    return found


def _corner_minimal(c, ring, caps):
    g = interval_graph(c)
    cycles = enumerate_chordless_cycles(g, caps=caps)
    monos = []
    for s in cycles:
        f = cycle_binomial(s, g, ring)
        monos.append([frozenset(ring.symbols[k] for k, a in enumerate(u) if a) for u in f.terms])
    p0 = PrimeComponent(c, frozenset(), ring)
    out = [p0]
    picked: List[FrozenSet[Cell]] = []
    for w in enumerate_admissible(c, caps):
        if not w or c.without(w).minors:
            continue
        if any(v <= w for v in picked):
            continue
        # (W) contains J_C exactly when every cycle binomial has both terms in (W)
        if all(all(m & w for m in pair) for pair in monos):
            continue
        picked.append(w)
        out.append(PrimeComponent(c, w, ring))
    return out


def containment_matrix(components: List[PrimeComponent], caps: Caps = DEFAULT_CAPS):
    return [[contains_component(p, q, caps) for q in components] for p in components]


# -- radicality of corner collections ------------------------------------------------

def require_corner(c: MinorCollection):
    if not c.is_corner:
        bad = [str(x) for x in c.minors if not x.corner]
        raise NotCornerCollection(f"not corner minors: {', '.join(bad)}")


def _avoiding_graph(c: MinorCollection):
    """``G(C)`` and the adjacency of the induced subgraph without ``v1`` and ``h1``."""
    g = interval_graph(c)
    if not c.minors:
        return g, {}
    v1 = g.node_of(X11, "vertical")
    h1 = g.node_of(X11, "horizontal")
    return g, g.induced_without([v1, h1])


def obstruction_cycle(c: MinorCollection) -> Optional[Cycle]:
    """A cycle of ``G(C)`` missing ``v1`` and ``h1``, or None when there is none."""
    require_corner(c)
    g, adj = _avoiding_graph(c)
    nxg = nx.Graph()
    nxg.add_nodes_from(adj)
    nxg.add_edges_from((a, b) for a, nb in adj.items() for b in nb)
    if nx.is_forest(nxg):
        return None
    # a shortest cycle is chordless
    best = min(nx.minimum_cycle_basis(nxg), key=len)
    sub = nxg.subgraph(best)
    order = [e[0] for e in nx.find_cycle(sub)]
    return Cycle(canonical_cycle(order), True)


def is_radical_corner(c: MinorCollection) -> bool:
    """``I(C)`` is radical iff ``G(C)`` minus ``v1, h1`` is a forest."""
    return obstruction_cycle(c) is None


def avoiding_cycles(c: MinorCollection, caps: Caps = DEFAULT_CAPS) -> List[Cycle]:
    """Chordless cycles of ``G(C)`` that miss both ``v1`` and ``h1``."""
    require_corner(c)
    g, adj = _avoiding_graph(c)
    if not adj:
        return []
    return enumerate_chordless_cycles(g, caps=caps, adjacency=adj)


def radical_witness(c: MinorCollection, caps: Caps = DEFAULT_CAPS) -> Ideal:
    """``I(C) + (x11 f_sigma : sigma misses v1 and h1)``."""
    require_corner(c)
    ring = c.ring()
    g = interval_graph(c)
    extra = []
    for s in avoiding_cycles(c, caps):
        extra.append(ring.gen(X11) * cycle_binomial(s, g, ring))
    return ideal_of(c, ring) + extra


def initial_forms_ideal(c: MinorCollection, ring: Ring | None = None) -> Ideal:
    """``(x11) + (x[a,1] x[1,b] : [1,a|1,b] in C)``, the leading terms for corner minors."""
    ring = ring or c.ring()
    gens = [ring.gen(X11)]
    gens += [ring.gen(Cell(x.a2, 1)) * ring.gen(Cell(1, x.b2)) for x in c.minors]
    return Ideal(ring, gens)


# -- decomposition identities ---------------------------------------------------------

IDENTITIES = ("prime-intersection", "decomposition", "x11-square", "intersection-formula")


def _sides(c: MinorCollection, comps: List[PrimeComponent], caps):
    """Left and right ideal lists for each identity; an entry is a list to intersect."""
    ring = c.ring()
    i = ideal_of(c, ring)
    nonempty = [p for p in comps if p.w]
    squares = [i + p.ideal.power(2) for p in nonempty]
    x11sq = i + [ring.gen(X11) ** 2]
    return {
        "prime-intersection": ([p.ideal for p in comps], [radical_witness(c, caps)]),
        "decomposition": ([p.ideal for p in comps] + squares, [i]),
        "x11-square": (squares, [x11sq]),
        "intersection-formula": ([p.ideal for p in nonempty], [initial_forms_ideal(c, ring)]),
    }


def decomposition_check(c: MinorCollection, max_degree: int = 6, caps: Caps = DEFAULT_CAPS,
                        elimination: bool = True) -> List[dict]:
    """Degreewise (and optionally elimination) checks of the corner decomposition identities.

    One report per identity and degree with keys identity, degree, leftDim,
    rightDim and pass.  Identities taken over the nonempty minimal primes are
    reported with ``pass = None`` and ``vacuous = True`` when there are none.
    Elimination rows use ``degree = "all"``; they carry ``pass = None`` and an
    ``error`` entry if a cap stopped the computation.
    """
    require_corner(c)
    comps = minimal_primes(c, caps)
    sides = _sides(c, comps, caps)
    reports = []
    for name in IDENTITIES:
        left, right = sides[name]
        if not left:
            reports.append({"identity": name, "degree": None, "leftDim": None, "rightDim": None,
                            "pass": None, "vacuous": True})
            continue
        grading = common_grading(*left, *right)
        for d in range(max_degree + 1):
            ls = _slice_meet(left, d, grading, caps)
            rs = _slice_meet(right, d, grading, caps)
            reports.append({"identity": name, "degree": d, "leftDim": ls.dim, "rightDim": rs.dim,
                            "pass": ls.equals(rs)})
        if elimination:
            reports.append(_eliminate(name, left, right, caps))
    return reports


def _slice_meet(ideals, d, grading, caps):
    out = graded_slice(ideals[0], d, grading, caps)
    for other in ideals[1:]:
        out = out.intersect(graded_slice(other, d, grading, caps))
    return out


def _eliminate(name, left, right, caps):
    row = {"identity": name, "degree": "all", "leftDim": None, "rightDim": None}
    try:
        lhs = intersect_all(left, caps)
        rhs = intersect_all(right, caps)
        row["pass"] = ideal_equals(lhs, rhs, caps)
        row["leftGenerators"] = len(lhs.generators)
        row["rightGenerators"] = len(rhs.generators)
    except ResourceCap as exc:
        row["pass"] = None
        row["error"] = str(exc)
    return row
