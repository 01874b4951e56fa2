"""Named collections and seeded random instances shared by tests, demos and the CLI."""
from __future__ import annotations

import random
from itertools import combinations
from typing import List, Tuple

from .combinatorics import Minor, MinorCollection, cycle_binomial, enumerate_chordless_cycles, interval_graph
from .fibers import ContingencyTable, MoveBasis, apply_move, move_basis
from .poly import Cell

HEXAGON = {"m": 4, "n": 4, "minors": [[1, 2, 1, 2], [2, 3, 1, 3], [1, 3, 1, 4], [3, 4, 1, 2]]}


def hexagon_example() -> MinorCollection:
    return MinorCollection(4, 4, [Minor(*q) for q in HEXAGON["minors"]])


def single_minor() -> MinorCollection:
    return MinorCollection(2, 2, [Minor(1, 2, 1, 2)])


def random_corner_interval(rng: random.Random, m: int, n: int, k: int,
                           max_vertices: int | None = None) -> MinorCollection:
    """``k`` distinct corner-interval minors of an ``m x n`` grid, resampled until ``|V(C)|`` fits."""
    pool = [Minor(i, j, 1, b) for i, j in combinations(range(1, m + 1), 2) for b in range(2, n + 1)]
    k = min(k, len(pool))
    while True:
        c = MinorCollection(m, n, rng.sample(pool, k))
        if max_vertices is None or len(c.vertices) <= max_vertices:
            return c


def random_corner(rng: random.Random, m: int, n: int, k: int | None = None) -> MinorCollection:
    pool = [Minor(1, j, 1, b) for j in range(2, m + 1) for b in range(2, n + 1)]
    k = rng.randint(1, len(pool)) if k is None else min(k, len(pool))
    return MinorCollection(m, n, rng.sample(pool, k))


def corner_suite(max_vertices: int = 12, seed: int = 0, extra: int = 8) -> List[MinorCollection]:
    """Full corner collections that fit, then seeded random corner collections."""
    out = []
    for m in range(2, 7):
        for n in range(2, 7):
            if m * n <= max_vertices:
                out.append(MinorCollection.full_corner(m, n))
    rng = random.Random(seed)
    while extra:
        c = random_corner(rng, rng.randint(2, 4), rng.randint(2, 4))
        if len(c.vertices) <= max_vertices and c not in out:
            out.append(c)
            extra -= 1
    return out


def random_table(rng: random.Random, c: MinorCollection, high: int = 2,
                 density: float = 1.0) -> ContingencyTable:
    """Entries uniform in ``1..high`` on a random ``density`` share of ``V(C)``, else 0."""
    return ContingencyTable({v: rng.randint(1, high) if rng.random() < density else 0
                             for v in c.vertices})


def full_move_basis(c: MinorCollection) -> MoveBasis:
    """Every 2x2 move whose four cells lie in ``V(C)``; its components are the full fibers."""
    vs = set(c.vertices)
    rows = sorted({v.row for v in vs})
    cols = sorted({v.col for v in vs})
    vecs = []
    for a1, a2 in combinations(rows, 2):
        for b1, b2 in combinations(cols, 2):
            cells = [Cell(a1, b1), Cell(a1, b2), Cell(a2, b1), Cell(a2, b2)]
            if all(x in vs for x in cells):
                vecs.append({cells[0]: 1, cells[3]: 1, cells[1]: -1, cells[2]: -1})
    return MoveBasis(c, vecs)


def random_walk(rng: random.Random, t: ContingencyTable, basis: MoveBasis, steps: int) -> ContingencyTable:
    for _ in range(steps):
        if not basis.vectors:
            break
        vec = rng.choice(basis.vectors)
        nxt = apply_move(t, vec, rng.choice((1, -1)))
        if nxt is not None:
            t = nxt
    return t


def cycle_moves(c: MinorCollection) -> MoveBasis:
    """One move per chordless cycle of ``G(C)``: the exponent difference of ``f_sigma``."""
    g = interval_graph(c)
    ring = c.ring()
    vecs = []
    for s in enumerate_chordless_cycles(g):
        f = cycle_binomial(s, g, ring)
        vec = {}
        for u, coef in f.terms.items():
            for k, a in enumerate(u):
                if a:
                    cell = ring.symbols[k]
                    vec[cell] = vec.get(cell, 0) + (a if coef > 0 else -a)
        vecs.append({k: v for k, v in vec.items() if v})
    return MoveBasis(c, vecs)


RECIPES = ("minor-walk", "cycle-walk", "same-margins", "cycle-ends")


def table_pair(rng: random.Random, c: MinorCollection, high: int = 2, steps: int = 6,
               density: float = 1.0, recipe: str | None = None,
               ) -> Tuple[ContingencyTable, ContingencyTable, str]:
    """A start table and a partner drawn by one of :data:`RECIPES` (named in the result)."""
    u = random_table(rng, c, high, density)
    recipe = recipe or rng.choice(RECIPES)
    cycles = cycle_moves(c).vectors
    if recipe == "cycle-ends" and cycles:
        # the two monomials of one cycle binomial, on top of a sparse random table
        vec = rng.choice(cycles)
        base = random_table(rng, c, 1, density).values
        u = ContingencyTable({x: base.get(x, 0) + max(d, 0) for x, d in vec.items()} | {
            x: k for x, k in base.items() if x not in vec})
        v = apply_move(u, vec, -1)
    elif recipe == "minor-walk":
        v = random_walk(rng, u, move_basis(c), steps)
    elif recipe in ("cycle-walk", "cycle-ends"):
        v = random_walk(rng, u, MoveBasis(c, cycles), steps)
    else:
        v = random_walk(rng, u, full_move_basis(c), steps)
    return u, v, recipe
