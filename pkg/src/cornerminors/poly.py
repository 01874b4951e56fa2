"""Sparse multivariate polynomials over the rationals.

Variables are hashable symbols, normally grid cells ``Cell(row, col)``; a
:class:`Ring` fixes their order so that monomials can be stored as plain
exponent tuples.  Coefficients are Python ints where possible and
:class:`fractions.Fraction` otherwise, so every computation is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, NamedTuple, Tuple

Monomial = Tuple[int, ...]


class ZeroPolynomial(ValueError):
    """Raised when an operation needs a nonzero polynomial."""


class Cell(NamedTuple):
    row: int
    col: int

    def __str__(self):
        return f"x[{self.row},{self.col}]"


def grid_cells(m, n):
    return [Cell(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]


def normalize(q):
    """Return ``q`` as an int when it is integral."""
    if isinstance(q, Fraction) and q.denominator == 1:
        return q.numerator
    return q


def symbol_str(s):
    if isinstance(s, tuple) and len(s) == 2:
        return f"x[{s[0]},{s[1]}]"
    return str(s)


class Ring:
    """Polynomial ring over Q on an ordered tuple of symbols."""

    __slots__ = ("symbols", "index", "_hash")

    def __init__(self, symbols: Iterable):
        self.symbols = tuple(symbols)
        self.index = {s: i for i, s in enumerate(self.symbols)}
        if len(self.index) != len(self.symbols):
            raise ValueError("duplicate ring symbols")
        self._hash = hash(self.symbols)

    @classmethod
    def grid(cls, m, n, extra=()):
        return cls(list(grid_cells(m, n)) + list(extra))

    @property
    def ngens(self):
        return len(self.symbols)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.symbols == other.symbols

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Ring({len(self.symbols)} vars)"

    def __contains__(self, s):
        return s in self.index

    def extend(self, extra):
        return Ring(self.symbols + tuple(extra))

    def one(self):
        return Polynomial(self, {self.unit(): 1})

    def zero(self):
        return Polynomial(self, {})

    def unit(self) -> Monomial:
        return (0,) * len(self.symbols)

    def gen(self, s) -> "Polynomial":
        return Polynomial(self, {self.var_monomial(s): 1})

    def var_monomial(self, s) -> Monomial:
        e = [0] * len(self.symbols)
        e[self.index[s]] = 1
        return tuple(e)

    def monomial(self, powers: Dict) -> Monomial:
        """Exponent tuple from a ``{symbol: exponent}`` map."""
        e = [0] * len(self.symbols)
        for s, k in powers.items():
            if k < 0:
                raise ValueError("negative exponent")
            e[self.index[s]] += k
        return tuple(e)

    def monomial_dict(self, u: Monomial) -> Dict:
        return {self.symbols[i]: k for i, k in enumerate(u) if k}

    def from_terms(self, terms) -> "Polynomial":
        """Build a polynomial from ``[(coeff, {symbol: exp}), ...]``."""
        out: Dict[Monomial, object] = {}
        for c, powers in terms:
            u = self.monomial(powers)
            out[u] = out.get(u, 0) + c
        return Polynomial(self, out)

    def binomial(self, plus: Iterable, minus: Iterable) -> "Polynomial":
        """``prod(plus) - prod(minus)`` for iterables of symbols."""
        a, b = [0] * self.ngens, [0] * self.ngens
        for s in plus:
            a[self.index[s]] += 1
        for s in minus:
            b[self.index[s]] += 1
        return Polynomial(self, {tuple(a): 1}) - Polynomial(self, {tuple(b): 1})

    def embed(self, p: "Polynomial") -> "Polynomial":
        """Map ``p`` into this ring by symbol name."""
        if p.ring == self:
            return p
        pos = [self.index[s] for s in p.ring.symbols]
        out = {}
        for u, c in p.terms.items():
            e = [0] * self.ngens
            for i, k in enumerate(u):
                if k:
                    e[pos[i]] = k
            out[tuple(e)] = c
        return Polynomial(self, out)


# -- monomial helpers ---------------------------------------------------------

def mono_mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def mono_div(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a - b for a, b in zip(u, v))


def mono_divides(v: Monomial, u: Monomial) -> bool:
    """True if ``v`` divides ``u``."""
    for a, b in zip(v, u):
        if a > b:
            return False
    return True


def mono_lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a if a > b else b for a, b in zip(u, v))


def mono_gcd(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a if a < b else b for a, b in zip(u, v))


def mono_coprime(u: Monomial, v: Monomial) -> bool:
    for a, b in zip(u, v):
        if a and b:
            return False
    return True


def mono_degree(u: Monomial) -> int:
    return sum(u)


def mono_str(u: Monomial, ring: Ring) -> str:
    parts = []
    for i, k in enumerate(u):
        if k:
            s = symbol_str(ring.symbols[i])
            parts.append(s if k == 1 else f"{s}^{k}")
    return "*".join(parts) if parts else "1"


# -- term orders ----------------------------------------------------------------

ORDER_KINDS = ("lex", "revlex", "grevlex")


@dataclass(frozen=True)
class TermOrder:
    """A monomial order.

    ``variables`` lists symbols in ascending order (smallest first); ``None``
    means the ring's own order.  ``kind`` is ``lex``, ``revlex`` or
    ``grevlex``.  For the reverse-lexicographic kinds the smallest variable
    is compared first and the monomial with the larger exponent there is the
    smaller monomial.  ``revlex`` omits the degree comparison, so it is a
    well-order only on homogeneous pieces.  Symbols in ``block`` form an
    elimination block: any monomial with a larger block part (compared by
    degree, then revlex inside the block) is larger.
    """

    kind: str = "grevlex"
    variables: Tuple | None = None
    block: Tuple = ()

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.variables is not None:
            object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "block", tuple(self.block))

    @property
    def graded(self):
        return self.kind == "grevlex"

    def key(self, ring: Ring) -> Callable[[Monomial], tuple]:
        """Sort key on exponent tuples of ``ring``; larger key = larger monomial."""
        return _order_key(self, ring)

    def compare(self, u: Monomial, v: Monomial, ring: Ring) -> int:
        k = self.key(ring)
        a, b = k(u), k(v)
        return (a > b) - (a < b)

    def with_block(self, block) -> "TermOrder":
        return TermOrder(self.kind, self.variables, tuple(block))


@lru_cache(maxsize=None)
def _order_key(order: TermOrder, ring: Ring):
    block = [ring.index[s] for s in order.block]
    bset = set(block)
    if order.variables is None:
        asc = [i for i in range(ring.ngens) if i not in bset]
    else:
        asc = [ring.index[s] for s in order.variables if ring.index[s] not in bset]
        missing = set(range(ring.ngens)) - bset - set(asc)
        if missing:
            raise ValueError("term order does not cover every ring variable")
    desc = asc[::-1]
    kind = order.kind

    if kind == "lex":
        def base(u):
            return tuple(u[i] for i in desc)
    elif kind == "revlex":
        def base(u):
            return tuple(-u[i] for i in asc)
    else:
        def base(u):
            return (sum(u[i] for i in asc),) + tuple(-u[i] for i in asc)

    if block:
        def key(u):
            return (sum(u[i] for i in block),) + tuple(-u[i] for i in block) + base(u)
    else:
        key = base
    return lru_cache(maxsize=1 << 16)(key)


def row_major_revlex(ring: Ring) -> TermOrder:
    """Degree reverse lex with cells ascending row-major, x[1,1] smallest."""
    cells = sorted(s for s in ring.symbols if isinstance(s, Cell))
    others = [s for s in ring.symbols if not isinstance(s, Cell)]
    return TermOrder("grevlex", tuple(cells) + tuple(others))


def diagonal_lex(ring: Ring) -> TermOrder:
    """Lex with x[1,1] most significant, then row-major."""
    cells = sorted(s for s in ring.symbols if isinstance(s, Cell))
    others = [s for s in ring.symbols if not isinstance(s, Cell)]
    return TermOrder("lex", tuple(reversed(cells)) + tuple(others))


# -- polynomials ----------------------------------------------------------------

class Polynomial:
    """Immutable polynomial: a ring plus a ``{exponent tuple: coefficient}`` map."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Dict[Monomial, object] | None = None):
        self.ring = ring
        clean = {}
        if terms:
            n = ring.ngens
            for u, c in terms.items():
                if len(u) != n:
                    raise ValueError("exponent tuple has wrong length")
                if c:
                    clean[tuple(u)] = normalize(Fraction(c) if isinstance(c, float) else c)
        self.terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def constant(cls, ring, c):
        return cls(ring, {ring.unit(): c})

    @classmethod
    def monomial(cls, ring, u: Monomial, c=1):
        return cls(ring, {tuple(u): c})

    # basic queries
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def monomials(self):
        return list(self.terms)

    def coefficient(self, u: Monomial):
        return self.terms.get(tuple(u), 0)

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(u) for u in self.terms)

    def is_homogeneous(self):
        return len({sum(u) for u in self.terms}) <= 1

    def is_monomial(self):
        return len(self.terms) == 1

    def is_pure_binomial(self):
        """``x^a - x^b`` up to a global sign (or a single monomial)."""
        if len(self.terms) == 1:
            return True
        if len(self.terms) != 2:
            return False
        a, b = self.terms.values()
        return a == -b

    def variables(self):
        used = set()
        for u in self.terms:
            used.update(i for i, k in enumerate(u) if k)
        return {self.ring.symbols[i] for i in used}

    # ordering
    def sorted_terms(self, order: TermOrder):
        key = order.key(self.ring)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, order: TermOrder):
        if not self.terms:
            raise ZeroPolynomial("leading term of the zero polynomial")
        key = order.key(self.ring)
        u = max(self.terms, key=key)
        return u, self.terms[u]

    def leading_monomial(self, order: TermOrder) -> Monomial:
        return self.leading_term(order)[0]

    def monic(self, order: TermOrder) -> "Polynomial":
        _, c = self.leading_term(order)
        return self.scale(Fraction(1) / c)

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for u, c in other.terms.items():
            v = out.get(u, 0) + c
            if v:
                out[u] = v
            else:
                out.pop(u, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {u: -c for u, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, object] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = tuple(x + y for x, y in zip(u, v))
                out[w] = out.get(w, 0) + a * b
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        return Polynomial(self.ring, {u: normalize(x * c) for u, x in self.terms.items()})

    def mul_monomial(self, w: Monomial, c=1) -> "Polynomial":
        return Polynomial(self.ring, {mono_mul(u, w): x * c for u, x in self.terms.items()})

    def substitute(self, values: Dict) -> "Polynomial":
        """Set the listed symbols to rational constants."""
        idx = {self.ring.index[s]: v for s, v in values.items()}
        out: Dict[Monomial, object] = {}
        for u, c in self.terms.items():
            e = list(u)
            for i, v in idx.items():
                if e[i]:
                    c = c * (v ** e[i])
                    e[i] = 0
                    if not c:
                        break
            if c:
                t = tuple(e)
                out[t] = out.get(t, 0) + c
        return Polynomial(self.ring, out)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def to_str(self, order: TermOrder | None = None):
        if not self.terms:
            return "0"
        order = order or TermOrder("grevlex")
        out = []
        for u, c in self.sorted_terms(order):
            m = mono_str(u, self.ring)
            if m == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = m
            else:
                body = f"{abs(c)}*{m}"
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()})"


def same_up_to_sign(p: Polynomial, q: Polynomial) -> bool:
    return p == q or p == -q
