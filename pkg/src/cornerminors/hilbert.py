"""Hilbert series, Betti numbers and regularity of graded quotients ``S/I``.

Hilbert numerators are stored over ``(1-z)^N`` with ``N`` the number of ring
variables.  Betti numbers come from Koszul homology computed in the finest
grading that keeps the ideal homogeneous; the positions to examine are read
off the lcm lattice of an initial ideal.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple

from .combinatorics import MinorCollection, ideal_of, interval_graph
from .config import DEFAULT_CAPS, Caps, MemoryCap, PreconditionError, ResourceCap
from .groebner import Grading, Ideal, default_order, minimalize
from .linalg import Echelon
from .poly import Cell, Monomial, Polynomial, Ring, TermOrder, mono_divides, mono_lcm, row_major_revlex


# -- univariate polynomials ------------------------------------------------------------

class UnivariatePoly:
    """Integer polynomial in ``z``; ``coeffs[k]`` is the coefficient of ``z^k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def one_minus_z(cls, k: int) -> "UnivariatePoly":
        """``(1 - z)^k``."""
        return cls([(-1) ** i * comb(k, i) for i in range(k + 1)])

    @classmethod
    def z(cls, k: int = 1) -> "UnivariatePoly":
        return cls([0] * k + [1])

    def __eq__(self, other):
        if isinstance(other, int):
            other = UnivariatePoly([other])
        return isinstance(other, UnivariatePoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UnivariatePoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return UnivariatePoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UnivariatePoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = UnivariatePoly([1])
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def divide_one_minus_z(self) -> Tuple["UnivariatePoly", int]:
        """Quotient by ``(1-z)`` and the remainder (the value at ``z = 1``)."""
        # synthetic division by (z - 1), then flip the sign
        cs = list(self.coeffs)
        if not cs:
            return UnivariatePoly(), 0
        q = [0] * (len(cs) - 1)
        acc = 0
        for k in range(len(cs) - 1, 0, -1):
            acc = acc + cs[k]
            q[k - 1] = acc
        rem = acc + cs[0]
        return UnivariatePoly(-c for c in q), rem

    def order_at_one(self) -> int:
        """Multiplicity of ``z = 1`` as a root."""
        if self.is_zero():
            raise ValueError("zero polynomial")
        k, p = 0, self
        while True:
            q, r = p.divide_one_minus_z()
            if r:
                return k
            k, p = k + 1, q

    def series(self, denominator_power: int, upto: int) -> List[int]:
        """Coefficients of ``self / (1-z)^denominator_power`` through ``z^upto``."""
        out = []
        for k in range(upto + 1):
            s = 0
            for i, c in enumerate(self.coeffs):
                if i <= k:
                    s += c * _stars(k - i, denominator_power)
            out.append(s)
        return out

    def __repr__(self):
        return f"UnivariatePoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_list(self):
        return list(self.coeffs)


def _as_poly(x):
    return x if isinstance(x, UnivariatePoly) else UnivariatePoly([x])


def _stars(k, d):
    """Number of monomials of degree k in d variables."""
    if d == 0:
        return 1 if k == 0 else 0
    return comb(k + d - 1, d - 1)


# -- Hilbert series ------------------------------------------------------------------------

@dataclass
class HilbertData:
    numerator: UnivariatePoly  # over (1 - z)^nvars
    nvars: int

    @property
    def krull_dim(self) -> int:
        return self.nvars - self.numerator.order_at_one()

    @property
    def reduced_numerator(self) -> UnivariatePoly:
        """Numerator over ``(1-z)^d`` with ``d`` the Krull dimension."""
        p = self.numerator
        for _ in range(self.nvars - self.krull_dim):
            p, r = p.divide_one_minus_z()
            assert r == 0
        return p

    def hilbert_function(self, upto: int) -> List[int]:
        return self.numerator.series(self.nvars, upto)

    def to_dict(self):
        return {"numerator": self.numerator.to_list(), "nvars": self.nvars,
                "krullDim": self.krull_dim, "reducedNumerator": self.reduced_numerator.to_list()}


def _support_key(u):
    return tuple(i for i, a in enumerate(u) if a)


def monomial_numerator(gens: List[Monomial], nvars: int, caps: Caps = DEFAULT_CAPS) -> UnivariatePoly:
    """Numerator of ``S/(gens)`` over ``(1-z)^nvars`` by pivoting on variables."""
    memo: Dict[frozenset, UnivariatePoly] = {}
    calls = [0]

    def rec(ms: Tuple[Monomial, ...]) -> UnivariatePoly:
        key = frozenset(ms)
        hit = memo.get(key)
        if hit is not None:
            return hit
        calls[0] += 1
        if calls[0] > caps.memory_cap:
            raise ResourceCap("Hilbert recursion exceeded the memory cap")
        linear = [u for u in ms if sum(u) == 1]
        rest = [u for u in ms if sum(u) > 1]
        if not rest:
            out = UnivariatePoly.one_minus_z(len(linear))
        elif len(rest) == 1:
            # S/(vars, u): (1-z)^k (1 - z^deg u)
            out = UnivariatePoly.one_minus_z(len(linear)) * (UnivariatePoly([1]) - UnivariatePoly.z(sum(rest[0])))
        else:
            counts = [0] * nvars
            for u in rest:
                for i, a in enumerate(u):
                    if a:
                        counts[i] += 1
            x = max(range(nvars), key=lambda i: counts[i])
            ex = tuple(int(i == x) for i in range(nvars))
            plus = tuple(minimalize(list(ms) + [ex]))
            colon = tuple(minimalize([tuple(a - 1 if i == x and a else a for i, a in enumerate(u))
                                      for u in ms]))
            out = rec(plus) + UnivariatePoly.z() * rec(colon)
        memo[key] = out
        return out

    if any(not any(u) for u in gens):
        return UnivariatePoly()
    return rec(tuple(minimalize(gens)))


def hilbert_of_monomial_quotient(ideal: Ideal, caps: Caps = DEFAULT_CAPS) -> HilbertData:
    if not ideal.is_monomial():
        raise PreconditionError("expected monomial generators")
    gens = [next(iter(g.terms)) for g in ideal.generators]
    return HilbertData(monomial_numerator(gens, ideal.ring.ngens, caps), ideal.ring.ngens)


def hilbert_of_binomial_quotient(ideal: Ideal, order: TermOrder | None = None,
                                 caps: Caps = DEFAULT_CAPS) -> HilbertData:
    """Through the initial ideal under ``order`` (grevlex by default)."""
    if not ideal.homogeneous:
        raise PreconditionError("Hilbert series needs a homogeneous ideal")
    gb = ideal.gb(order or default_order(ideal.ring), caps)
    return HilbertData(monomial_numerator(gb.leading_monomials, ideal.ring.ngens, caps),
                       ideal.ring.ngens)


def krull_dim_of_monomial_ideal(gens: List[Monomial], nvars: int) -> int:
    """``N`` minus the smallest vertex cover of the generator supports (brute force)."""
    supports = [set(_support_key(u)) for u in minimalize(gens)]
    if not supports:
        return nvars
    if any(not s for s in supports):
        return -1
    for k in range(nvars + 1):
        for cover in combinations(range(nvars), k):
            cs = set(cover)
            if all(s & cs for s in supports):
                return nvars - k
    return 0


def star_edge_ideal(m: int) -> Ideal:
    """Edge ideal of ``K_{1,m}`` in ``K[x0, y1..ym]``."""
    ring = Ring(["x0"] + [f"y{k}" for k in range(1, m + 1)])
    x = ring.gen("x0")
    return Ideal(ring, [x * ring.gen(f"y{k}") for k in range(1, m + 1)])


def determinantal_ideal(ring: Ring, rows: Iterable[int], cols: Iterable[int]) -> Ideal:
    """All 2-minors of the submatrix on ``rows`` x ``cols``."""
    rows, cols = sorted(rows), sorted(cols)
    gens = []
    for i, k in combinations(rows, 2):
        for j, l in combinations(cols, 2):
            gens.append(ring.binomial([Cell(i, j), Cell(k, l)], [Cell(i, l), Cell(k, j)]))
    return Ideal(ring, gens)


@dataclass
class HilbertFormulaCheck:
    m: int
    n: int
    lhs: UnivariatePoly
    rhs: UnivariatePoly
    rhs_proof: UnivariatePoly
    lhs_reduced: UnivariatePoly

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    @property
    def equal_reduced(self) -> bool:
        """Compare against the numerator over ``(1-z)^d`` instead."""
        return self.lhs_reduced == self.rhs

    @property
    def proof_form_equal(self) -> bool:
        return self.lhs == self.rhs_proof

    def to_dict(self):
        return {"m": self.m, "n": self.n, "lhs": self.lhs.to_list(), "rhs": self.rhs.to_list(),
                "equal": self.equal, "lhsOverKrullDim": self.lhs_reduced.to_list(),
                "equalOverKrullDim": self.equal_reduced, "rhsStarTail": self.rhs_proof.to_list(),
                "equalWithStarTail": self.proof_form_equal,
                "difference": (self.lhs - self.rhs).to_list()}


def hilbert_formula_check(m: int, n: int, caps: Caps = DEFAULT_CAPS) -> HilbertFormulaCheck:
    """Both sides of the closed formula for all corner-interval minors of ``m x n``.

    ``lhs`` is the Hilbert numerator of ``S/I(C)`` through the initial ideal
    under the row-major degree reverse lex order.  ``rhs`` assembles

        sum_{t=1}^{m-1} hp(S/I_2(M_{t,1})) z (1-z)^{n(t-1)}
            + z (1-z)^{(m-1)(n-1)} + (1-z)^m

    with each determinantal numerator computed separately.  ``rhs_proof``
    replaces the tail by the numerator of ``S`` modulo the star-shaped initial
    ideal reached at the last step of the variable-by-variable recursion,
    namely ``z (1-z)^{(m-1)n} + (1-z)^m``.  Every numerator is over ``(1-z)^{mn}``.
    """
    if m < 2 or n < 2:
        raise PreconditionError("need m, n >= 2")
    ring = Ring.grid(m, n)
    c = MinorCollection.full_corner_interval(m, n)
    lhs_data = hilbert_of_binomial_quotient(ideal_of(c, ring), row_major_revlex(ring), caps)
    z = UnivariatePoly.z()
    omz = UnivariatePoly.one_minus_z
    body = UnivariatePoly()
    for t in range(1, m):
        det = determinantal_ideal(ring, range(t, m + 1), range(1, n + 1))
        hp = hilbert_of_binomial_quotient(det, row_major_revlex(ring), caps).numerator
        body = body + hp * z * omz(n * (t - 1))
    rhs = body + z * omz((m - 1) * (n - 1)) + omz(m)
    rhs_proof = body + z * omz((m - 1) * n) + omz(m)
    return HilbertFormulaCheck(m, n, lhs_data.numerator, rhs, rhs_proof, lhs_data.reduced_numerator)


# -- Betti tables --------------------------------------------------------------------------

@dataclass
class BettiTable:
    """Graded Betti numbers ``beta[i, j]`` of ``S/I``."""

    entries: Dict[Tuple[int, int], int]
    truncated: bool = False
    nvars: int = 0
    notes: List[str] = field(default_factory=list)

    def __getitem__(self, ij):
        return self.entries.get(tuple(ij), 0)

    @property
    def nonzero(self):
        return {k: v for k, v in self.entries.items() if v}

    @property
    def projective_dimension(self) -> int:
        return max((i for (i, _), v in self.entries.items() if v), default=0)

    @property
    def regularity(self) -> int:
        return max((j - i for (i, j), v in self.entries.items() if v), default=0)

    def euler_numerator(self) -> UnivariatePoly:
        """``sum (-1)^i beta[i, j] z^j``."""
        top = max((j for _, j in self.entries), default=0)
        cs = [0] * (top + 1)
        for (i, j), v in self.entries.items():
            cs[j] += (-1) ** i * v
        return UnivariatePoly(cs)

    def dominated_by(self, other: "BettiTable") -> bool:
        keys = set(self.entries) | set(other.entries)
        return all(self[k] <= other[k] for k in keys)

    def to_json(self):
        return [[i, j, v] for (i, j), v in sorted(self.entries.items()) if v]

    @classmethod
    def from_json(cls, rows, **kw):
        return cls({(i, j): v for i, j, v in rows}, **kw)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.nonzero == other.nonzero

    def render(self) -> str:
        """Rows indexed by ``j - i``, columns by ``i``, zeros shown as dots."""
        nz = self.nonzero
        if not nz:
            return "(zero module)"
        p = self.projective_dimension
        r = self.regularity
        totals = [sum(v for (i, _), v in nz.items() if i == k) for k in range(p + 1)]
        cell = max(len(str(v)) for v in totals + [p]) + 1
        label = max(len(str(r)) + 1, 6)
        lines = [" " * label + "".join(str(i).rjust(cell) for i in range(p + 1))]
        lines.append("total:".ljust(label) + "".join(str(t).rjust(cell) for t in totals))
        for s in range(r + 1):
            row = []
            for i in range(p + 1):
                v = nz.get((i, i + s), 0)
                row.append((str(v) if v else ".").rjust(cell))
            lines.append(f"{s}:".ljust(label) + "".join(row))
        if self.truncated:
            lines.append("(truncated)")
        return "\n".join(lines)


def _compress(ideal: Ideal) -> Ideal:
    """The same ideal in the ring of the variables its generators use."""
    used = sorted(ideal.variables(), key=lambda s: ideal.ring.index[s])
    ring = Ring(used)
    return Ideal(ring, [_restrict(g, ring) for g in ideal.generators])


def _restrict(p: Polynomial, ring: Ring) -> Polynomial:
    pos = [ring.index.get(s) for s in p.ring.symbols]
    out = {}
    for u, c in p.terms.items():
        e = [0] * ring.ngens
        for i, a in enumerate(u):
            if a:
                e[pos[i]] = a
        out[tuple(e)] = c
    return Polynomial(ring, out)


def lcm_lattice(gens: List[Monomial], cap: int) -> List[Monomial]:
    """All lcms of nonempty subsets of ``gens``."""
    lat = set()
    for g in gens:
        new = {g}
        for b in lat:
            new.add(mono_lcm(b, g))
        lat |= new
        if len(lat) > cap:
            raise MemoryCap(f"lcm lattice exceeds {cap} elements")
    return sorted(lat, key=lambda u: (sum(u), u))


def _reduced_homology_dims(faces_by_size: Dict[int, list]) -> Dict[int, int]:
    """``dim H~_k`` over Q for a complex given as faces grouped by size (size = dim + 1)."""
    ranks = {}
    sizes = sorted(faces_by_size)
    for s in sizes:
        if s == 0:
            continue
        lower = {f: k for k, f in enumerate(faces_by_size.get(s - 1, []))}
        ech = Echelon()
        for f in faces_by_size[s]:
            row = {}
            for p in range(len(f)):
                g = f[:p] + f[p + 1:]
                row[lower[g]] = (-1) ** p
            ech.add(row)
        ranks[s] = ech.rank
    out = {}
    for s in sizes:
        h = len(faces_by_size[s]) - ranks.get(s, 0) - ranks.get(s + 1, 0)
        if h:
            out[s - 1] = h
    return out


def taylor_betti_multigraded(gens: List[Monomial], cap_gens: int = 16,
                             cap: int = DEFAULT_CAPS.memory_cap) -> Dict[Tuple[int, Monomial], int]:
    """``beta[i, b](S/I)`` for a monomial ideal from the lcm-lattice complexes.

    ``beta[i, b] = dim H~_{i-2}(K_{<b})`` where ``K_{<b}`` consists of the sets
    of minimal generators whose lcm strictly divides ``b``.
    """
    gens = minimalize(gens)
    if len(gens) > cap_gens:
        raise MemoryCap(f"{len(gens)} generators exceed the Taylor cap {cap_gens}")
    nv = len(gens[0]) if gens else 0
    out = {(0, (0,) * nv): 1}
    for b in lcm_lattice(gens, cap):
        below = [k for k, g in enumerate(gens) if mono_divides(g, b)]
        faces: Dict[int, list] = {0: [()]}
        for s in range(1, len(below) + 1):
            layer = []
            for f in combinations(below, s):
                l = gens[f[0]]
                for k in f[1:]:
                    l = mono_lcm(l, gens[k])
                if l != b:
                    layer.append(f)
            if not layer:
                break
            faces[s] = layer
        for k, h in _reduced_homology_dims(faces).items():
            out[(k + 2, b)] = h
    return out


def taylor_betti(ideal: Ideal, cap_gens: int = 16) -> BettiTable:
    """Graded Betti numbers of ``S/I`` for a monomial ideal, via the lcm lattice."""
    if not ideal.is_monomial():
        raise PreconditionError("taylor_betti needs monomial generators")
    gens = [next(iter(g.terms)) for g in ideal.generators]
    mg = taylor_betti_multigraded(gens, cap_gens)
    ent: Dict[Tuple[int, int], int] = {}
    for (i, b), v in mg.items():
        ent[(i, sum(b))] = ent.get((i, sum(b)), 0) + v
    if not gens:
        ent = {(0, 0): 1}
    return BettiTable(ent, nvars=ideal.ring.ngens)


class _Koszul:
    """Multigraded pieces of the Koszul complex on ``S/I``."""

    def __init__(self, ideal: Ideal, grading: Grading, caps: Caps):
        self.ring = ideal.ring
        self.n = self.ring.ngens
        self.gb = ideal.gb(default_order(self.ring), caps)
        self.leads = self.gb.leading_monomials
        self.grading = grading
        self.caps = caps
        self._std: Dict[int, Dict[tuple, List[Monomial]]] = {}
        self._nf: Dict[Tuple[int, Monomial], Dict] = {}
        self._wvar = [grading.var_degree(k) for k in range(self.n)]

    def standard(self, d: int) -> Dict[tuple, List[Monomial]]:
        """Standard monomials of total degree ``d`` bucketed by multidegree."""
        hit = self._std.get(d)
        if hit is not None:
            return hit
        buckets: Dict[tuple, List[Monomial]] = {}
        count = 0
        leads = self.leads
        n = self.n

        def grow(e, start, left):
            nonlocal count
            if left == 0:
                u = tuple(e)
                buckets.setdefault(self.grading.degree(u), []).append(u)
                count += 1
                if count > self.caps.memory_cap:
                    raise MemoryCap(f"more than {self.caps.memory_cap} standard monomials in degree {d}")
                return
            for k in range(start, n):
                e[k] += 1
                u = tuple(e)
                if not any(mono_divides(l, u) for l in leads):
                    grow(e, k, left - 1)
                e[k] -= 1

        grow([0] * n, 0, d)
        self._std[d] = buckets
        return buckets

    def times(self, k: int, u: Monomial) -> Dict:
        key = (k, u)
        hit = self._nf.get(key)
        if hit is None:
            v = tuple(a + (i == k) for i, a in enumerate(u))
            hit = self.gb.reduce_terms({v: 1})
            self._nf[key] = hit
        return hit

    def basis(self, i: int, total: int, md: tuple) -> List[Tuple[tuple, Monomial]]:
        d = total - i
        if d < 0 or i > self.n:
            return []
        std = self.standard(d)
        out = []
        for f in combinations(range(self.n), i):
            w = md
            for k in f:
                w = tuple(a - b for a, b in zip(w, self._wvar[k]))
            for u in std.get(w, ()):
                out.append((f, u))
        return out

    def rank(self, i: int, total: int, md: tuple, src=None) -> int:
        """Rank of ``d_i`` on the piece of multidegree ``md``."""
        if i <= 0:
            return 0
        src = src if src is not None else self.basis(i, total, md)
        if not src:
            return 0
        ech = Echelon()
        for f, u in src:
            row: Dict = {}
            for p, k in enumerate(f):
                g = f[:p] + f[p + 1:]
                sign = -1 if p % 2 else 1
                for v, c in self.times(k, u).items():
                    key = (g, v)
                    x = row.get(key, 0) + sign * c
                    if x:
                        row[key] = x
                    else:
                        row.pop(key, None)
            ech.add(row)
        return ech.rank

    def betti(self, i: int, total: int, md: tuple) -> int:
        src = self.basis(i, total, md)
        if not src:
            return 0
        return len(src) - self.rank(i, total, md, src) - self.rank(i + 1, total, md)


def betti_koszul(ideal: Ideal, max_hom: int | None = None, max_deg: int | None = None,
                 caps: Caps = DEFAULT_CAPS, prune: bool = True) -> BettiTable:
    """``beta[i, j](S/I)`` as dimensions of Koszul homology of ``S/I``.

    Only multidegrees where the initial ideal has a nonzero Betti number are
    examined, since those bound the Betti numbers of ``I`` from above.  With
    ``prune=False`` every multidegree of the Koszul complex up to ``max_deg``
    is examined instead (``max_deg`` is then required).  The table is flagged
    ``truncated`` when a bound cut off a position that could be nonzero.
    """
    if not ideal.homogeneous:
        raise PreconditionError("Betti numbers need a homogeneous ideal")
    nvars_full = ideal.ring.ngens
    small = _compress(ideal)
    n = small.ring.ngens
    if small.is_zero():
        return BettiTable({(0, 0): 1}, nvars=nvars_full)
    grading = Grading.fine(small.ring, small.generators)
    kz = _Koszul(small, grading, caps)
    if kz.gb.is_unit():
        return BettiTable({}, nvars=nvars_full)
    max_hom = n if max_hom is None else max_hom
    truncated = False
    positions: Dict[Tuple[int, int, tuple], None] = {}
    if prune:
        leads = minimalize(kz.leads)
        try:
            bound = taylor_betti_multigraded(leads, cap_gens=16, cap=caps.memory_cap)
            cands = [(i, b) for (i, b), v in bound.items() if v]
        except MemoryCap:
            cands = [(i, b) for b in lcm_lattice(leads, caps.memory_cap) for i in range(1, n + 1)]
        for i, b in cands:
            j = sum(b)
            if i > max_hom or (max_deg is not None and j > max_deg):
                truncated = True
                continue
            positions[(i, j, grading.degree(b))] = None
    else:
        if max_deg is None:
            raise PreconditionError("an unpruned Koszul computation needs max_deg")
        truncated = True
        for i in range(0, min(max_hom, n) + 1):
            for j in range(i, max_deg + 1):
                for md in _koszul_degrees(kz, i, j):
                    positions[(i, j, md)] = None
    ent: Dict[Tuple[int, int], int] = {}
    for (i, j, md) in sorted(positions, key=lambda t: (t[1], t[0])):
        b = kz.betti(i, j, md)
        if b:
            ent[(i, j)] = ent.get((i, j), 0) + b
    return BettiTable(ent, truncated=truncated, nvars=nvars_full)


def _koszul_degrees(kz: _Koszul, i: int, total: int):
    d = total - i
    if d < 0:
        return set()
    out = set()
    for f in combinations(range(kz.n), i):
        w = [0] * len(kz.grading.weights)
        for k in f:
            w = [a + b for a, b in zip(w, kz._wvar[k])]
        for md in kz.standard(d):
            out.add(tuple(a + b for a, b in zip(md, w)))
    return out


@dataclass
class Regularity:
    value: int
    certified: bool  # False when the Betti table was truncated
    table: BettiTable

    def to_dict(self):
        return {"regularity": self.value, "untruncated": self.certified}


def regularity_of(ideal: Ideal, caps: Caps = DEFAULT_CAPS, max_deg: int | None = None) -> Regularity:
    """``reg(S/I)`` from the Koszul Betti table."""
    t = betti_koszul(ideal, max_deg=max_deg, caps=caps)
    return Regularity(t.regularity, not t.truncated, t)


# -- comparison under removal of a horizontal interval ------------------------------------

def remove_interval(c: MinorCollection, cells) -> MinorCollection:
    """``C'``: the minors of ``c`` that avoid every cell of ``cells``."""
    return c.without(cells)


def betti_comparison(c: MinorCollection, h_index: int, t: int = 1,
                     caps: Caps = DEFAULT_CAPS) -> dict:
    """Entrywise comparison of ``beta(S/I(C')^t)`` with ``beta(S/I(C)^t)``.

    ``C'`` drops every minor meeting the ``h_index``-th maximal horizontal
    interval (0-based, intervals sorted by row).
    """
    g = interval_graph(c)
    if not 0 <= h_index < len(g.h_nodes):
        raise PreconditionError(f"no horizontal interval {h_index}")
    h = g.h_nodes[h_index]
    sub = remove_interval(c, h.cells)
    ring = c.vertex_ring()
    big = ideal_of(c, ring).power(t)
    small = ideal_of(sub, ring).power(t) if sub.minors else Ideal(ring, [])
    tb = betti_koszul(big, caps=caps)
    ts = betti_koszul(small, caps=caps)
    keys = sorted(set(tb.nonzero) | set(ts.nonzero))
    rows = [{"i": i, "j": j, "sub": ts[(i, j)], "full": tb[(i, j)], "ok": ts[(i, j)] <= tb[(i, j)]}
            for i, j in keys]
    return {
        "interval": [list(x) for x in h.cells],
        "t": t,
        "removedMinors": [str(x) for x in c.minors if x not in sub.minors],
        "entries": rows,
        "pass": all(r["ok"] for r in rows),
        "full": tb.to_json(),
        "sub": ts.to_json(),
        "truncated": tb.truncated or ts.truncated,
    }
