"""Minor collections, maximal intervals, the interval graph and its cycles."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .config import DEFAULT_CAPS, Caps, ResourceCap
from .groebner import Ideal
from .poly import Cell, Polynomial, Ring


class ParseError(ValueError):
    """Malformed collection document."""


class ValidationError(ValueError):
    """Well-formed document describing an invalid collection."""


@dataclass(frozen=True, order=True)
class Minor:
    """The 2-minor ``[a1,a2|b1,b2]``."""

    a1: int
    a2: int
    b1: int
    b2: int

    def __post_init__(self):
        if not (self.a1 < self.a2 and self.b1 < self.b2):
            raise ValidationError(f"minor {self.as_list()} needs a1 < a2 and b1 < b2")

    def as_list(self):
        return [self.a1, self.a2, self.b1, self.b2]

    @property
    def corner_interval(self):
        return self.b1 == 1

    @property
    def corner(self):
        return self.b1 == 1 and self.a1 == 1

    @property
    def vertices(self) -> FrozenSet[Cell]:
        return frozenset({Cell(self.a1, self.b1), Cell(self.a1, self.b2),
                          Cell(self.a2, self.b1), Cell(self.a2, self.b2)})

    @property
    def vertical_edges(self):
        return [frozenset({Cell(self.a1, self.b1), Cell(self.a2, self.b1)}),
                frozenset({Cell(self.a1, self.b2), Cell(self.a2, self.b2)})]

    @property
    def horizontal_edges(self):
        return [frozenset({Cell(self.a1, self.b1), Cell(self.a1, self.b2)}),
                frozenset({Cell(self.a2, self.b1), Cell(self.a2, self.b2)})]

    @property
    def edges(self):
        return self.vertical_edges + self.horizontal_edges

    def binomial(self, ring: Ring) -> Polynomial:
        """``x[a1,b1] x[a2,b2] - x[a1,b2] x[a2,b1]``."""
        return ring.binomial([Cell(self.a1, self.b1), Cell(self.a2, self.b2)],
                             [Cell(self.a1, self.b2), Cell(self.a2, self.b1)])

    def __str__(self):
        return f"[{self.a1},{self.a2}|{self.b1},{self.b2}]"


class MinorCollection:
    """A set of 2-minors inside an ``m x n`` grid."""

    def __init__(self, m: int, n: int, minors: Iterable = (), corner_interval_only=True):
        if m < 1 or n < 1:
            raise ValidationError("grid dimensions must be positive")
        ms = []
        for x in minors:
            if not isinstance(x, Minor):
                x = Minor(*x)
            if x.a2 > m or x.b2 > n:
                raise ValidationError(f"minor {x} does not fit the {m}x{n} grid")
            if corner_interval_only and not x.corner_interval:
                raise ValidationError(f"minor {x} is not corner-interval (b1 != 1)")
            ms.append(x)
        if len(set(ms)) != len(ms):
            raise ValidationError("duplicate minors")
        self.m = m
        self.n = n
        self.minors: Tuple[Minor, ...] = tuple(sorted(ms))

    def __repr__(self):
        return f"MinorCollection({self.m}x{self.n}, {[str(x) for x in self.minors]})"

    def __len__(self):
        return len(self.minors)

    def __iter__(self):
        return iter(self.minors)

    def __eq__(self, other):
        return (isinstance(other, MinorCollection) and (self.m, self.n, self.minors)
                == (other.m, other.n, other.minors))

    def __hash__(self):
        return hash((self.m, self.n, self.minors))

    @classmethod
    def full_corner_interval(cls, m, n):
        return cls(m, n, [Minor(i, j, 1, k) for i in range(1, m + 1)
                          for j in range(i + 1, m + 1) for k in range(2, n + 1)])

    @classmethod
    def full_corner(cls, m, n):
        return cls(m, n, [Minor(1, j, 1, k) for j in range(2, m + 1) for k in range(2, n + 1)])

    @cached_property
    def vertices(self) -> Tuple[Cell, ...]:
        vs = set()
        for x in self.minors:
            vs |= x.vertices
        return tuple(sorted(vs))

    @cached_property
    def edges(self) -> FrozenSet[FrozenSet[Cell]]:
        return frozenset(e for x in self.minors for e in x.edges)

    @property
    def is_corner(self):
        return all(x.corner for x in self.minors)

    @property
    def is_corner_interval(self):
        return all(x.corner_interval for x in self.minors)

    def without(self, cells) -> "MinorCollection":
        """``C minus U``: the minors whose vertices avoid ``cells``."""
        u = set(cells)
        return MinorCollection(self.m, self.n, [x for x in self.minors if not (x.vertices & u)],
                               corner_interval_only=False)

    def subcollection(self, minors) -> "MinorCollection":
        return MinorCollection(self.m, self.n, minors, corner_interval_only=False)

    def ring(self, extra=()) -> Ring:
        return Ring.grid(self.m, self.n, extra)

    def vertex_ring(self) -> Ring:
        return Ring(self.vertices)

    def to_dict(self):
        return {"m": self.m, "n": self.n, "minors": [x.as_list() for x in self.minors]}


def parse_collection(doc, strict=True) -> MinorCollection:
    """Collection from a dict or JSON text ``{"m":..,"n":..,"minors":[[a1,a2,b1,b2],..]}``.

    The document may carry ``"cornerIntervalOnly": false`` to relax the
    corner-interval check; ``strict`` is the default when the key is absent.
    """
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("collection document must be an object")
    try:
        m, n, minors = doc["m"], doc["n"], doc["minors"]
    except KeyError as exc:
        raise ParseError(f"missing field {exc}") from exc
    if not (_is_int(m) and _is_int(n)):
        raise ParseError("m and n must be integers")
    if not isinstance(minors, list):
        raise ParseError("minors must be a list")
    quads = []
    for x in minors:
        if not (isinstance(x, list) and len(x) == 4 and all(_is_int(v) for v in x)):
            raise ParseError(f"minor {x!r} must be a list of four integers")
        if min(x) < 1:
            raise ValidationError(f"minor {x} has an index below 1")
        quads.append(x)
    strict = doc.get("cornerIntervalOnly", strict)
    return MinorCollection(m, n, [Minor(*q) for q in quads], corner_interval_only=bool(strict))


def _is_int(v):
    return isinstance(v, int) and not isinstance(v, bool)


# -- intervals -------------------------------------------------------------------

@dataclass(frozen=True)
class Interval:
    orientation: str  # "vertical" or "horizontal"
    cells: Tuple[Cell, ...]

    def __contains__(self, cell):
        return cell in self.cells

    @property
    def line(self):
        """Column of a vertical interval, row of a horizontal one."""
        c = self.cells[0]
        return c.col if self.orientation == "vertical" else c.row

    def __str__(self):
        return "{" + ",".join(f"x{c.row}{c.col}" for c in self.cells) + "}"


def _components(cells, edges):
    parent = {c: c for c in cells}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for e in edges:
        a, b = tuple(e)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: Dict[Cell, list] = {}
    for c in cells:
        groups.setdefault(find(c), []).append(c)
    return [tuple(sorted(g)) for g in groups.values()]


def interval_decomposition(c: MinorCollection) -> Tuple[List[Interval], List[Interval]]:
    """Maximal vertical and horizontal intervals of ``c``.

    Vertical intervals are sorted by (column, first row), horizontal ones by
    (row, first column).
    """
    vert = [e for x in c.minors for e in x.vertical_edges]
    hori = [e for x in c.minors for e in x.horizontal_edges]
    vs = _components(c.vertices, vert)
    hs = _components(c.vertices, hori)
    vs.sort(key=lambda g: (g[0].col, g[0].row))
    hs.sort(key=lambda g: (g[0].row, g[0].col))
    return ([Interval("vertical", g) for g in vs], [Interval("horizontal", g) for g in hs])


# -- interval graph ---------------------------------------------------------------

Node = Tuple[str, int]  # ("h", i) or ("v", j), 0-based


@dataclass
class IntervalGraph:
    """Bipartite graph on maximal intervals; an edge carries the shared cell."""

    h_nodes: List[Interval]
    v_nodes: List[Interval]
    labels: Dict[Tuple[int, int], Cell] = field(default_factory=dict)

    @cached_property
    def adjacency(self) -> Dict[Node, FrozenSet[Node]]:
        adj: Dict[Node, set] = {("h", i): set() for i in range(len(self.h_nodes))}
        adj.update({("v", j): set() for j in range(len(self.v_nodes))})
        for (i, j) in self.labels:
            adj[("h", i)].add(("v", j))
            adj[("v", j)].add(("h", i))
        return {k: frozenset(v) for k, v in adj.items()}

    @property
    def nodes(self) -> List[Node]:
        return sorted(self.adjacency)

    def label(self, a: Node, b: Node) -> Cell:
        if a[0] == "v":
            a, b = b, a
        return self.labels[(a[1], b[1])]

    def has_edge(self, a: Node, b: Node) -> bool:
        return b in self.adjacency.get(a, ())

    def node_of(self, cell: Cell, orientation: str) -> Node:
        nodes = self.v_nodes if orientation == "vertical" else self.h_nodes
        for k, iv in enumerate(nodes):
            if cell in iv:
                return ("v" if orientation == "vertical" else "h", k)
        raise KeyError(cell)

    def node_name(self, node: Node) -> str:
        return f"{node[0]}{node[1] + 1}"

    def edge_count(self):
        return len(self.labels)

    def induced_without(self, removed: Iterable[Node]):
        """Adjacency of the induced subgraph on the remaining nodes."""
        rm = set(removed)
        return {k: frozenset(v - rm) for k, v in self.adjacency.items() if k not in rm}


def interval_graph(c: MinorCollection) -> IntervalGraph:
    vs, hs = interval_decomposition(c)
    vset = set(c.vertices)
    labels = {}
    where_v = {cell: j for j, iv in enumerate(vs) for cell in iv.cells}
    for i, h in enumerate(hs):
        for cell in h.cells:
            if cell in vset:
                labels[(i, where_v[cell])] = cell
    return IntervalGraph(hs, vs, labels)


# -- cycles ------------------------------------------------------------------------

@dataclass(frozen=True)
class Cycle:
    """Alternating closed walk ``h, v, h, v, ...`` with distinct vertices."""

    nodes: Tuple[Node, ...]
    chordless: bool = True

    def __len__(self):
        return len(self.nodes)

    @property
    def r(self):
        return len(self.nodes) // 2

    def meets(self, node: Node) -> bool:
        return node in self.nodes

    def edges(self):
        k = len(self.nodes)
        return [(self.nodes[i], self.nodes[(i + 1) % k]) for i in range(k)]


def canonical_cycle(nodes: Sequence[Node]) -> Tuple[Node, ...]:
    """Least rotation/reflection starting at an ``h`` node."""
    k = len(nodes)
    best = None
    for seq in (list(nodes), list(reversed(nodes))):
        for s in range(k):
            rot = tuple(seq[s:] + seq[:s])
            if rot[0][0] != "h":
                continue
            if best is None or rot < best:
                best = rot
    return best


def _has_chord(nodes, adj):
    k = len(nodes)
    pos = {v: i for i, v in enumerate(nodes)}
    for i, v in enumerate(nodes):
        for w in adj[v]:
            j = pos.get(w)
            if j is not None and (j - i) % k not in (1, k - 1):
                return True
    return False


def _search(adj, max_len, cap, chordless):
    order = sorted(adj)
    rank = {v: i for i, v in enumerate(order)}
    found = set()

    def emit(path):
        found.add(canonical_cycle(path))
        if len(found) > cap:
            raise ResourceCap(f"more than {cap} cycles")

    for s in order:
        rs = rank[s]
        stack = [(s,)]
        while stack:
            path = stack.pop()
            u = path[-1]
            for w in adj[u]:
                if rank[w] <= rs or w in path:
                    continue
                closes = len(path) >= 2 and s in adj[w]
                if chordless:
                    if any(w in adj[x] for x in path[1:-1]):
                        continue
                    if closes:
                        if len(path) + 1 >= 4:
                            emit(path + (w,))
                        continue
                elif closes and len(path) + 1 >= 4:
                    emit(path + (w,))
                if len(path) + 1 < max_len:
                    stack.append(path + (w,))
    return found


def enumerate_chordless_cycles(g: IntervalGraph, max_len: int | None = None,
                               caps: Caps = DEFAULT_CAPS, adjacency=None) -> List[Cycle]:
    """Chordless cycles of length at most ``max_len``, each listed once."""
    adj = adjacency if adjacency is not None else g.adjacency
    max_len = _default_len(g, max_len)
    found = _search(adj, max_len, caps.cycle_cap, chordless=True)
    return [Cycle(c, True) for c in sorted(found, key=lambda c: (len(c), c))]


def enumerate_cycles(g: IntervalGraph, max_len: int | None = None,
                     caps: Caps = DEFAULT_CAPS, adjacency=None) -> List[Cycle]:
    """All simple cycles of length at most ``max_len``, chord flags computed."""
    adj = adjacency if adjacency is not None else g.adjacency
    max_len = _default_len(g, max_len)
    found = _search(adj, max_len, caps.cycle_cap, chordless=False)
    return [Cycle(c, not _has_chord(c, adj)) for c in sorted(found, key=lambda c: (len(c), c))]


def _default_len(g, max_len):
    longest = 2 * min(len(g.h_nodes), len(g.v_nodes))
    if max_len is None:
        return max(longest, 4)
    if max_len < 4 or max_len % 2:
        raise ValueError("max_len must be even and at least 4")
    return max_len


def cycle_binomial(sigma: Cycle, g: IntervalGraph, ring: Ring) -> Polynomial:
    """``prod x[h_k, v_k] - prod x[h_(k+1), v_k]`` along ``sigma``."""
    nodes = sigma.nodes
    if nodes[0][0] != "h":
        nodes = nodes[1:] + nodes[:1]
    hs = nodes[0::2]
    vs = nodes[1::2]
    r = len(hs)
    plus = [g.label(hs[k], vs[k]) for k in range(r)]
    minus = [g.label(hs[(k + 1) % r], vs[k]) for k in range(r)]
    return ring.binomial(plus, minus)


def ideal_of(c: MinorCollection, ring: Ring | None = None) -> Ideal:
    """``I(C)``: one binomial per minor."""
    ring = ring or c.ring()
    return Ideal(ring, [x.binomial(ring) for x in c.minors])


def toric_ideal(c: MinorCollection, max_len: int | None = None, ring: Ring | None = None,
                caps: Caps = DEFAULT_CAPS) -> Ideal:
    """``J_C`` generated by the binomials of the chordless cycles of ``G(C)``."""
    ring = ring or c.ring()
    g = interval_graph(c)
    longest = 2 * min(len(g.h_nodes), len(g.v_nodes))
    cycles = enumerate_chordless_cycles(g, max_len, caps)
    complete = max_len is None or max_len >= longest
    return Ideal(ring, [cycle_binomial(s, g, ring) for s in cycles], complete=complete)


def toric_map_image(c: MinorCollection, g: IntervalGraph, u_cells: Dict[Cell, int]):
    """Exponent vector of ``phi(x^u)`` where ``phi(x_ab) = h_a v_b``."""
    out: Dict[Node, int] = {}
    for cell, k in u_cells.items():
        h = g.node_of(cell, "horizontal")
        v = g.node_of(cell, "vertical")
        out[h] = out.get(h, 0) + k
        out[v] = out.get(v, 0) + k
    return tuple(sorted(out.items()))
