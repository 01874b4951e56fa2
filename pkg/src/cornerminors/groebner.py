"""Ideals, Buchberger's algorithm and graded linear-algebra slices.

The Buchberger engine uses the normal selection strategy together with the
Gebauer-Moeller installation of Buchberger's two criteria.  Everything is a
pure function of (ideal, order, caps); a computed basis is cached on the
:class:`Ideal` behind a lock.
"""
from __future__ import annotations

import heapq
import threading
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Sequence

from .config import DEFAULT_CAPS, Caps, MemoryCap, PreconditionError, ResourceCap
from .linalg import Echelon, intersect_spaces, nullspace, sum_spaces
from .poly import (Monomial, Polynomial, Ring, TermOrder, mono_coprime, mono_div,
                   mono_divides, mono_lcm, mono_mul, normalize)

AUX_T = "_t"
AUX_U = "_u"


def default_order(ring: Ring) -> TermOrder:
    """Degree reverse lex in the ring's own variable order (first symbol smallest)."""
    return TermOrder("grevlex")


# -- ideals ---------------------------------------------------------------------

class Ideal:
    """An ideal given by generators in a fixed ring."""

    def __init__(self, ring: Ring, generators: Iterable[Polynomial] = (), complete=True):
        gens = []
        seen = set()
        for g in generators:
            g = ring.embed(g)
            if g and g not in seen:
                seen.add(g)
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self.homogeneous = all(g.is_homogeneous() for g in gens)
        # False when a toric ideal was built from a truncated cycle list
        self.complete = complete
        self._gbs = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return f"Ideal({len(self.generators)} generators in {self.ring!r})"

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def is_zero(self):
        return not self.generators

    def is_monomial(self):
        return all(g.is_monomial() for g in self.generators)

    def gb(self, order: TermOrder | None = None, caps: Caps = DEFAULT_CAPS) -> "GroebnerBasis":
        order = order or default_order(self.ring)
        with self._lock:
            hit = self._gbs.get(order)
        if hit is not None:
            return hit
        gb = buchberger(self, order, caps)
        with self._lock:
            self._gbs.setdefault(order, gb)
        return gb

    def contains(self, p: Polynomial, order=None, caps=DEFAULT_CAPS) -> bool:
        return membership(p, self, order, caps)

    def __add__(self, other):
        if isinstance(other, Ideal):
            other = other.generators
        return Ideal(self.ring, list(self.generators) + [self.ring.embed(g) for g in other])

    def __mul__(self, other: "Ideal"):
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def power(self, t: int) -> "Ideal":
        if t < 1:
            raise ValueError("power must be at least 1")
        out = self
        for _ in range(t - 1):
            out = out * self
        return out

    def variables(self):
        used = set()
        for g in self.generators:
            used |= g.variables()
        return used


def variable_ideal(ring: Ring, symbols: Iterable) -> Ideal:
    return Ideal(ring, [ring.gen(s) for s in symbols])


def monomial_ideal(ring: Ring, monomials: Iterable[Monomial]) -> Ideal:
    return Ideal(ring, [Polynomial.monomial(ring, u) for u in minimalize(monomials)])


def minimalize(monomials: Iterable[Monomial]) -> List[Monomial]:
    """Minimal generators of the monomial ideal spanned by ``monomials``."""
    ms = sorted(set(tuple(u) for u in monomials), key=lambda u: (sum(u), u))
    out: List[Monomial] = []
    for u in ms:
        if not any(mono_divides(v, u) for v in out):
            out.append(u)
    return out


# -- Buchberger -----------------------------------------------------------------

def _reduce(terms: Dict, basis: Sequence, key, full=True):
    """Remainder of ``terms`` modulo monic ``basis`` entries ``(lm, terms)``."""
    p = dict(terms)
    r = {}
    while p:
        m = max(p, key=key)
        c = p.pop(m)
        for lm, g in basis:
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                for u, gc in g.items():
                    if u == lm:
                        continue
                    t = mono_mul(u, q)
                    v = p.get(t, 0) - c * gc
                    if v:
                        p[t] = normalize(v)
                    else:
                        p.pop(t, None)
                break
        else:
            r[m] = c
            if not full:
                r.update(p)
                return r
    return r


def _monic(terms: Dict, key):
    lm = max(terms, key=key)
    c = terms[lm]
    if c == 1:
        return lm, terms
    inv = Fraction(1) / Fraction(c)
    return lm, {u: normalize(v * inv) for u, v in terms.items()}


def _spoly(lf, f, lg, g):
    lcm = mono_lcm(lf, lg)
    a = mono_div(lcm, lf)
    b = mono_div(lcm, lg)
    out = {}
    for u, c in f.items():
        t = mono_mul(u, a)
        out[t] = out.get(t, 0) + c
    for u, c in g.items():
        t = mono_mul(u, b)
        v = out.get(t, 0) - c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return {u: c for u, c in out.items() if c}


def buchberger(ideal: Ideal, order: TermOrder, caps: Caps = DEFAULT_CAPS) -> "GroebnerBasis":
    """Reduced Groebner basis of ``ideal`` under ``order``."""
    ring = ideal.ring
    if order.kind == "revlex" and not ideal.homogeneous:
        raise PreconditionError("plain revlex is only a well-order on homogeneous input")
    key = order.key(ring)
    polys: List[Dict] = []
    lms: List[Monomial] = []
    active: List[int] = []
    pairs: Dict[tuple, Monomial] = {}
    heap: list = []
    processed = 0

    def basis():
        return [(lms[i], polys[i]) for i in active]

    def install(terms):
        lm, f = _monic(terms, key)
        h = len(polys)
        polys.append(f)
        lms.append(lm)
        # Gebauer-Moeller update
        cands = list(active)
        kept = []
        while cands:
            g = cands.pop(0)
            lg = lms[g]
            l_gh = mono_lcm(lg, lm)
            if mono_coprime(lg, lm) or not any(
                    mono_divides(mono_lcm(lms[g1], lm), l_gh) for g1 in cands + kept):
                kept.append(g)
        new_pairs = [g for g in kept if not mono_coprime(lms[g], lm)]
        for pr in list(pairs):
            l12 = pairs[pr]
            g1, g2 = pr
            if (mono_divides(lm, l12) and mono_lcm(lms[g1], lm) != l12
                    and mono_lcm(lms[g2], lm) != l12):
                del pairs[pr]
        for g in new_pairs:
            l = mono_lcm(lms[g], lm)
            pairs[(g, h)] = l
            heapq.heappush(heap, (sum(l), key(l), g, h))
        if len(pairs) > caps.pair_cap:
            raise ResourceCap(f"pair queue exceeded {caps.pair_cap}")
        active[:] = [g for g in active if not mono_divides(lm, lms[g])] + [h]

    for g in ideal.generators:
        if g.degree() > caps.degree_cap:
            raise ResourceCap(f"generator degree exceeds cap {caps.degree_cap}")
        r = _reduce(g.terms, basis(), key)
        if r:
            install(r)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        l = pairs.pop((i, j), None)
        if l is None:
            continue
        if sum(l) > caps.degree_cap:
            raise ResourceCap(f"S-pair degree {sum(l)} exceeds cap {caps.degree_cap}")
        processed += 1
        if processed > caps.pair_cap:
            raise ResourceCap(f"processed more than {caps.pair_cap} pairs")
        s = _spoly(lms[i], polys[i], lms[j], polys[j])
        if not s:
            continue
        r = _reduce(s, basis(), key)
        if r:
            install(r)

    # interreduce
    minimal = [i for i in active
               if not any(k != i and mono_divides(lms[k], lms[i]) for k in active)]
    out = []
    for i in minimal:
        others = [(lms[k], polys[k]) for k in minimal if k != i]
        r = _reduce(polys[i], others, key)
        lm, f = _monic(r, key)
        out.append((lm, f))
    out.sort(key=lambda t: key(t[0]), reverse=True)
    return GroebnerBasis(ideal, order, [Polynomial(ring, f) for _, f in out])


class GroebnerBasis:
    """Reduced, monic Groebner basis together with its order and source ideal."""

    def __init__(self, ideal: Ideal, order: TermOrder, elements: List[Polynomial]):
        self.ideal = ideal
        self.ring = ideal.ring
        self.order = order
        self.elements = tuple(elements)
        self._key = order.key(self.ring)
        self._basis = [(max(g.terms, key=self._key), g.terms) for g in self.elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def leading_monomials(self) -> List[Monomial]:
        return [lm for lm, _ in self._basis]

    def is_unit(self):
        return any(not any(lm) for lm, _ in self._basis)

    def normal_form(self, p: Polynomial) -> Polynomial:
        p = self.ring.embed(p)
        return Polynomial(self.ring, _reduce(p.terms, self._basis, self._key))

    def reduce_terms(self, terms: Dict) -> Dict:
        return _reduce(terms, self._basis, self._key)

    def contains(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_zero()

    def is_standard(self, u: Monomial) -> bool:
        return not any(mono_divides(lm, u) for lm, _ in self._basis)

    def initial_ideal(self) -> Ideal:
        return monomial_ideal(self.ring, self.leading_monomials)


def is_groebner_basis(gens: Sequence[Polynomial], order: TermOrder) -> bool:
    """True iff every S-pair of ``gens`` reduces to zero modulo ``gens``."""
    gens = [g for g in gens if g]
    if not gens:
        return True
    ring = gens[0].ring
    key = order.key(ring)
    basis = [_monic(dict(g.terms), key) for g in gens]
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            la, fa = basis[a]
            lb, fb = basis[b]
            if mono_coprime(la, lb):
                continue
            s = _spoly(la, fa, lb, fb)
            if s and _reduce(s, basis, key):
                return False
    return True


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.normal_form(p)


def membership(p: Polynomial, ideal: Ideal, order=None, caps=DEFAULT_CAPS) -> bool:
    if p.is_zero():
        return True
    return ideal.gb(order, caps).contains(p)


def ideal_contains(big: Ideal, small: Ideal, order=None, caps=DEFAULT_CAPS) -> bool:
    """True iff ``small`` is contained in ``big``."""
    if small.is_zero():
        return True
    gb = big.gb(order, caps)
    return all(gb.contains(g) for g in small.generators)


def ideal_equals(i: Ideal, j: Ideal, caps=DEFAULT_CAPS) -> bool:
    if not (i.homogeneous and j.homogeneous):
        raise PreconditionError("ideal equality is only supported for homogeneous ideals")
    if i.ring != j.ring:
        raise PreconditionError("ideals live in different rings")
    return ideal_contains(i, j, caps=caps) and ideal_contains(j, i, caps=caps)


def initial_ideal(ideal: Ideal, order: TermOrder | None = None, caps=DEFAULT_CAPS) -> Ideal:
    return ideal.gb(order, caps).initial_ideal()


# -- saturation, elimination, intersection ---------------------------------------

def saturate_by_variable(ideal: Ideal, var, caps: Caps = DEFAULT_CAPS) -> Ideal:
    """``ideal : var^infinity``.

    For homogeneous input the basis under a degree revlex order with ``var``
    smallest is divided by the largest power of ``var`` dividing each element.
    """
    ring = ideal.ring
    if ideal.is_zero():
        return ideal
    if not ideal.homogeneous:
        return _saturate_by_elimination(ideal, var, caps)
    rest = [s for s in ring.symbols if s != var]
    order = TermOrder("grevlex", (var,) + tuple(rest))
    gb = ideal.gb(order, caps)
    k = ring.index[var]
    out = []
    for g in gb.elements:
        e = min(u[k] for u in g.terms)
        if e:
            w = [0] * ring.ngens
            w[k] = e
            w = tuple(w)
            g = Polynomial(ring, {mono_div(u, w): c for u, c in g.terms.items()})
        out.append(g)
    return Ideal(ring, out)


def _saturate_by_elimination(ideal, var, caps):
    ring = ideal.ring
    big = ring.extend((AUX_U,))
    u = big.gen(AUX_U)
    gens = [big.embed(g) for g in ideal.generators] + [big.one() - u * big.gen(var)]
    order = TermOrder("grevlex", None, (AUX_U,))
    gb = Ideal(big, gens).gb(order, caps)
    return _contract(gb, ring, AUX_U)


def _contract(gb: GroebnerBasis, ring: Ring, aux) -> Ideal:
    k = gb.ring.index[aux]
    keep = []
    pos = [gb.ring.index[s] for s in ring.symbols]
    for g in gb.elements:
        if all(u[k] == 0 for u in g.terms):
            keep.append(Polynomial(ring, {tuple(u[i] for i in pos): c
                                          for u, c in g.terms.items()}))
    return Ideal(ring, keep)


def saturate(ideal: Ideal, symbols: Iterable, caps: Caps = DEFAULT_CAPS) -> Ideal:
    """Iterated single-variable saturation, in the given symbol order."""
    out = ideal
    for s in symbols:
        out = saturate_by_variable(out, s, caps)
    return out


def colon_by_variable(ideal: Ideal, var, caps: Caps = DEFAULT_CAPS) -> Ideal:
    """``ideal : var`` (one step, not the saturation)."""
    ring = ideal.ring
    if ideal.is_monomial():
        k = ring.index[var]
        ms = []
        for g in ideal.generators:
            (u,) = g.terms
            ms.append(tuple(max(a - 1, 0) if i == k else a for i, a in enumerate(u)))
        return monomial_ideal(ring, ms)
    x = variable_ideal(ring, [var])
    inter = intersect(ideal, x, caps)
    k = ring.index[var]
    out = []
    for g in inter.generators:
        out.append(Polynomial(ring, {tuple(a - 1 if i == k else a for i, a in enumerate(u)): c
                                     for u, c in g.terms.items()}))
    return Ideal(ring, out)


def intersect(i: Ideal, j: Ideal, caps: Caps = DEFAULT_CAPS) -> Ideal:
    """``i`` cap ``j`` via ``t*i + (1-t)*j`` and elimination of ``t``."""
    if i.ring != j.ring:
        raise PreconditionError("ideals live in different rings")
    ring = i.ring
    if i.is_zero() or j.is_zero():
        return Ideal(ring, [])
    if i.is_monomial() and j.is_monomial():
        return _monomial_intersection(i, j)
    big = ring.extend((AUX_T,))
    t = big.gen(AUX_T)
    gens = [t * big.embed(f) for f in i.generators]
    gens += [(big.one() - t) * big.embed(g) for g in j.generators]
    order = TermOrder("grevlex", None, (AUX_T,))
    gb = Ideal(big, gens).gb(order, caps)
    return _contract(gb, ring, AUX_T)


def _monomial_intersection(i, j):
    ms = [mono_lcm(next(iter(f.terms)), next(iter(g.terms)))
          for f in i.generators for g in j.generators]
    return monomial_ideal(i.ring, ms)


def intersect_all(ideals: Sequence[Ideal], caps: Caps = DEFAULT_CAPS) -> Ideal:
    if not ideals:
        raise ValueError("empty intersection")
    out = ideals[0]
    for other in ideals[1:]:
        out = intersect(out, other, caps)
    return out


# -- gradings and graded slices ----------------------------------------------------

class Grading:
    """A Z^k grading given by integer weight vectors; degree(u) = W u."""

    def __init__(self, ring: Ring, weights):
        self.ring = ring
        self.weights = tuple(tuple(int(x) for x in w) for w in weights)

    def degree(self, u: Monomial) -> tuple:
        return tuple(sum(a * b for a, b in zip(w, u)) for w in self.weights)

    def var_degree(self, k: int) -> tuple:
        return tuple(w[k] for w in self.weights)

    def is_homogeneous(self, p: Polynomial) -> bool:
        return len({self.degree(u) for u in p.terms}) <= 1

    @classmethod
    def standard(cls, ring):
        return cls(ring, [(1,) * ring.ngens])

    @classmethod
    def fine(cls, ring: Ring, polys: Iterable[Polynomial]) -> "Grading":
        """Finest grading making every polynomial in ``polys`` homogeneous."""
        diffs = []
        for p in polys:
            ms = list(p.terms)
            for u in ms[1:]:
                diffs.append([a - b for a, b in zip(u, ms[0])])
        n = ring.ngens
        basis = nullspace(diffs, n) if diffs else [
            [Fraction(int(i == k)) for i in range(n)] for k in range(n)]
        weights = []
        for w in basis:
            den = 1
            for x in w:
                den = den * Fraction(x).denominator // _gcd(den, Fraction(x).denominator)
            weights.append([int(x * den) for x in w])
        return cls(ring, weights)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=64)
def monomials_of_degree(nvars: int, d: int) -> tuple:
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return tuple(out)


def count_monomials(nvars: int, d: int) -> int:
    from math import comb
    return comb(nvars + d - 1, d) if d >= 0 else 0


class GradedSlice:
    """Degree-``d`` piece of a homogeneous ideal as exact row spaces.

    The piece is split by the multidegree of ``grading``; each multidegree
    carries an :class:`Echelon` basis whose columns are exponent tuples.
    """

    def __init__(self, ring: Ring, degree: int, grading: Grading, pieces: Dict[tuple, Echelon]):
        self.ring = ring
        self.degree = degree
        self.grading = grading
        self.pieces = pieces

    @property
    def dim(self) -> int:
        return sum(e.rank for e in self.pieces.values())

    def monomial_count(self) -> int:
        return count_monomials(self.ring.ngens, self.degree)

    def quotient_dim(self) -> int:
        return self.monomial_count() - self.dim

    def basis(self):
        """Fully reduced rows of every piece."""
        out = []
        for md in sorted(self.pieces):
            out.extend(self.pieces[md].reduced_rows())
        return out

    def _split(self, p: Polynomial):
        parts: Dict[tuple, dict] = {}
        for u, c in p.terms.items():
            if sum(u) != self.degree:
                raise ValueError("polynomial has a term of the wrong degree")
            parts.setdefault(self.grading.degree(u), {})[u] = c
        return parts

    def contains(self, p: Polynomial) -> bool:
        p = self.ring.embed(p)
        for md, row in self._split(p).items():
            e = self.pieces.get(md)
            if e is None or not e.contains(row):
                return False
        return True

    def _check(self, other):
        if self.ring != other.ring or self.degree != other.degree or \
                self.grading.weights != other.grading.weights:
            raise PreconditionError("slices are not comparable")

    def intersect(self, other: "GradedSlice") -> "GradedSlice":
        self._check(other)
        pieces = {}
        for md in self.pieces.keys() & other.pieces.keys():
            e = intersect_spaces(self.pieces[md], other.pieces[md])
            if e.rank:
                pieces[md] = e
        return GradedSlice(self.ring, self.degree, self.grading, pieces)

    def add(self, other: "GradedSlice") -> "GradedSlice":
        self._check(other)
        pieces = {md: e.copy() for md, e in self.pieces.items()}
        for md, e in other.pieces.items():
            pieces[md] = sum_spaces(pieces[md], e) if md in pieces else e.copy()
        return GradedSlice(self.ring, self.degree, self.grading, pieces)

    def equals(self, other: "GradedSlice") -> bool:
        self._check(other)
        return self.dim == other.dim == self.add(other).dim


def graded_slice(ideal: Ideal, d: int, grading: Grading | None = None,
                 caps: Caps = DEFAULT_CAPS) -> GradedSlice:
    """Row space of ``{monomial * g}`` in total degree ``d``."""
    if not ideal.homogeneous:
        raise PreconditionError("graded slices need a homogeneous ideal")
    ring = ideal.ring
    grading = grading or Grading.fine(ring, ideal.generators)
    pieces: Dict[tuple, Echelon] = {}
    nrows = 0
    for g in ideal.generators:
        e = g.degree()
        if e > d:
            continue
        if not grading.is_homogeneous(g):
            raise PreconditionError("generator is not homogeneous for the grading")
        nm = count_monomials(ring.ngens, d - e)
        nrows += nm
        if nrows > caps.memory_cap:
            raise MemoryCap(f"degree-{d} slice needs more than {caps.memory_cap} rows")
        gdeg = grading.degree(next(iter(g.terms)))
        for w in monomials_of_degree(ring.ngens, d - e):
            md = tuple(a + b for a, b in zip(grading.degree(w), gdeg))
            row = {mono_mul(u, w): c for u, c in g.terms.items()}
            ech = pieces.get(md)
            if ech is None:
                ech = pieces[md] = Echelon()
            ech.add(row)
    pieces = {md: e for md, e in pieces.items() if e.rank}
    return GradedSlice(ring, d, grading, pieces)


def common_grading(*ideals: Ideal) -> Grading:
    ring = ideals[0].ring
    gens = [g for i in ideals for g in i.generators]
    return Grading.fine(ring, gens)


def slices_equal(i: Ideal, j: Ideal, max_degree: int, caps=DEFAULT_CAPS) -> bool:
    """Degreewise equality of two homogeneous ideals up to ``max_degree``."""
    gr = common_grading(i, j)
    return all(graded_slice(i, d, gr, caps).equals(graded_slice(j, d, gr, caps))
               for d in range(max_degree + 1))
