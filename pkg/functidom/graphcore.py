"""Graph representation, the graph families used throughout, and domination primitives.

Vertex sets and adjacency rows are Python ints used as fixed-width bit
vectors: bit ``i`` set means vertex ``i`` is a member.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, reduce
from operator import or_
from pathlib import Path
from typing import Iterable, Iterator, Sequence, Tuple, Union

from .config import MAX_GRAPH_ORDER
from .errors import InvalidParameterError, ParseError

_LOG = logging.getLogger(__name__)


def _bits_of(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """Immutable set of vertices drawn from ``range(universe)``."""

    universe: int
    bits: int = 0

    def __post_init__(self):
        if self.universe < 0:
            raise InvalidParameterError(f"universe must be non-negative, got {self.universe}")
        if self.bits < 0 or self.bits >> self.universe:
            raise InvalidParameterError(f"bits {self.bits:#x} outside universe {self.universe}")

    @classmethod
    def empty(cls, universe: int) -> "VertexSet":
        return cls(universe, 0)

    @classmethod
    def full(cls, universe: int) -> "VertexSet":
        return cls(universe, (1 << universe) - 1)

    @classmethod
    def of(cls, universe: int, indices: Iterable[int]) -> "VertexSet":
        bits = 0
        for i in indices:
            if not 0 <= i < universe:
                raise InvalidParameterError(f"vertex {i} outside universe {universe}")
            bits |= 1 << i
        return cls(universe, bits)

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.universe and bool(self.bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return _bits_of(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def _same_universe(self, other: "VertexSet") -> None:
        if self.universe != other.universe:
            raise InvalidParameterError(f"universe mismatch: {self.universe} vs {other.universe}")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._same_universe(other)
        return VertexSet(self.universe, self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._same_universe(other)
        return VertexSet(self.universe, self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._same_universe(other)
        return VertexSet(self.universe, self.bits & ~other.bits)

    def complement(self) -> "VertexSet":
        return VertexSet(self.universe, ((1 << self.universe) - 1) & ~self.bits)

    def add(self, i: int) -> "VertexSet":
        if not 0 <= i < self.universe:
            raise InvalidParameterError(f"vertex {i} outside universe {self.universe}")
        return VertexSet(self.universe, self.bits | 1 << i)

    def issubset(self, other: "VertexSet") -> bool:
        self._same_universe(other)
        return self.bits & ~other.bits == 0

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._same_universe(other)
        return self.bits & other.bits == 0

    def indices(self) -> Tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.universe}, {set(self) or '{}'})"


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on ``range(order)``; ``masks[i]`` is the open neighborhood of ``i``."""

    order: int
    masks: Tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.order <= MAX_GRAPH_ORDER:
            raise InvalidParameterError(f"order must be in [0, {MAX_GRAPH_ORDER}], got {self.order}")
        if len(self.masks) != self.order:
            raise InvalidParameterError(f"expected {self.order} adjacency rows, got {len(self.masks)}")
        for i, row in enumerate(self.masks):
            if row < 0 or row >> self.order:
                raise InvalidParameterError(f"row {i} has neighbors outside the vertex range")
            if row >> i & 1:
                raise InvalidParameterError(f"self-loop at vertex {i}")
            for j in _bits_of(row):
                if not self.masks[j] >> i & 1:
                    raise InvalidParameterError(f"adjacency not symmetric for edge ({i}, {j})")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        rows = [0] * order
        for i, j in edges:
            if not (0 <= i < order and 0 <= j < order):
                raise InvalidParameterError(f"edge ({i}, {j}) outside vertex range {order}")
            if i == j:
                raise InvalidParameterError(f"self-loop at vertex {i}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(order, tuple(rows))

    @property
    def adjacency(self) -> Tuple[VertexSet, ...]:
        return tuple(VertexSet(self.order, row) for row in self.masks)

    @cached_property
    def closed_masks(self) -> Tuple[int, ...]:
        return tuple(row | 1 << i for i, row in enumerate(self.masks))

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @property
    def size(self) -> int:
        return sum(row.bit_count() for row in self.masks) // 2

    def edges(self) -> Iterator[Tuple[int, int]]:
        for i, row in enumerate(self.masks):
            for j in _bits_of(row >> (i + 1)):
                yield i, i + 1 + j

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.masks[i] >> j & 1)


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"a cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def build_path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"a path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_center(j: int) -> int:
    """Index of the center of star ``j`` (1-based) in a star chain."""
    return 5 * (j - 1)


def build_star_chain(a: int) -> Graph:
    """``a`` copies of K_{1,4} whose centers form a path on ``a`` vertices.

    Star ``j`` occupies indices ``5(j-1)..5j-1`` with its center first.
    """
    if a < 1:
        raise InvalidParameterError(f"a star chain needs a >= 1 stars, got {a}")
    edges = []
    for j in range(1, a + 1):
        c = star_center(j)
        edges.extend((c, c + p) for p in range(1, 5))
        if j < a:
            edges.append((c, star_center(j + 1)))
    return Graph.from_edges(5 * a, edges)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.order:
        raise InvalidParameterError(f"vertex {v} outside graph of order {g.order}")


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return VertexSet(g.order, g.closed_masks[v])


def dominated_mask(g: Graph, bits: int) -> int:
    """Union of closed neighborhoods of the vertices in ``bits``."""
    closed = g.closed_masks
    return reduce(or_, (closed[i] for i in _bits_of(bits)), 0)


def is_dominating(g: Graph, s: VertexSet) -> bool:
    if s.universe != g.order:
        raise InvalidParameterError(f"set universe {s.universe} does not match graph order {g.order}")
    return dominated_mask(g, s.bits) == g.full_mask


def induced_subgraph(g: Graph, s: VertexSet) -> Tuple[Graph, Tuple[int, ...]]:
    """Subgraph induced by ``s``, re-indexed ascending; the tuple maps new index → original."""
    if s.universe != g.order:
        raise InvalidParameterError(f"set universe {s.universe} does not match graph order {g.order}")
    if not s:
        raise InvalidParameterError("cannot induce a subgraph on the empty set")
    index_map = s.indices()
    position = {old: new for new, old in enumerate(index_map)}
    edges = [(position[i], position[j]) for i, j in g.edges() if i in position and j in position]
    return Graph.from_edges(len(index_map), edges), index_map


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.masks[v].bit_count()


def max_degree(g: Graph) -> int:
    return max((row.bit_count() for row in g.masks), default=0)


def cycle_distance(n: int, i: int, j: int) -> int:
    if not (0 <= i < n and 0 <= j < n):
        raise InvalidParameterError(f"vertices ({i}, {j}) outside cycle of length {n}")
    d = abs(i - j)
    return min(d, n - d)


def permute_vertices(g: Graph, new_index: Sequence[int]) -> Graph:
    """Relabel ``g`` so that vertex ``i`` becomes ``new_index[i]``."""
    if sorted(new_index) != list(range(g.order)):
        raise InvalidParameterError("relabeling must be a permutation of the vertex range")
    return Graph.from_edges(g.order, ((new_index[i], new_index[j]) for i, j in g.edges()))


# ---------- Text format ----------

def format_graph(g: Graph) -> str:
    lines = [f"n {g.order}"]
    lines.extend(f"e {i} {j}" for i, j in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the ``n <order>`` / ``e <i> <j>`` format; duplicates and self-loops are rejected."""
    order = None
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields:
            continue
        if order is None:
            if len(fields) != 2 or fields[0] != "n":
                raise ParseError(f"line {lineno}: expected 'n <order>', got {raw!r}")
            order = _parse_int(fields[1], lineno)
            if not 0 <= order <= MAX_GRAPH_ORDER:
                raise ParseError(f"line {lineno}: order {order} outside [0, {MAX_GRAPH_ORDER}]")
            continue
        if len(fields) != 3 or fields[0] != "e":
            raise ParseError(f"line {lineno}: expected 'e <i> <j>', got {raw!r}")
        i, j = _parse_int(fields[1], lineno), _parse_int(fields[2], lineno)
        if i == j:
            raise ParseError(f"line {lineno}: self-loop at vertex {i}")
        if not (0 <= i < order and 0 <= j < order):
            raise ParseError(f"line {lineno}: edge ({i}, {j}) outside vertex range {order}")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
    if order is None:
        raise ParseError("missing 'n <order>' header")
    return Graph.from_edges(order, seen)


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: {token!r} is not an integer")


def read_graph(path: Union[str, Path]) -> Graph:
    with open(path, encoding="utf-8") as fh:
        g = parse_graph(fh.read())
    _LOG.debug("Read graph of order %d from %s", g.order, path)
    return g


def write_graph(g: Graph, path: Union[str, Path]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_graph(g))
