"""Functions between graph copies, the functigraph C(G, f), and small-graph isomorphism."""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .config import ISOMORPHISM_MAX_ORDER
from .errors import InvalidParameterError, ParseError, UnsupportedSizeError
from .graphcore import Graph, VertexSet, build_cycle, cycle_distance

_LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexMap:
    """A function from the domain copy G1 to the codomain copy G2.

    ``targets[i] = t`` means f(u_{i+1}) = v_{t+1}.
    """

    targets: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.targets)
        for i, t in enumerate(self.targets):
            if not 0 <= t < n:
                raise InvalidParameterError(f"target {t} of vertex {i} outside [0, {n})")

    @property
    def domain_size(self) -> int:
        return len(self.targets)

    def __call__(self, i: int) -> int:
        return self.targets[i]

    def image(self, indices: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.domain_size, (self.targets[i] for i in indices))


def identity_map(n: int) -> VertexMap:
    return VertexMap(tuple(range(n)))


def constant_map(n: int, target: int) -> VertexMap:
    if not 0 <= target < n:
        raise InvalidParameterError(f"constant target {target} outside [0, {n})")
    return VertexMap((target,) * n)


def from_permutation(perm: Sequence[int]) -> VertexMap:
    """Map from a one-line permutation (0-based targets); rejects non-bijections."""
    if sorted(perm) != list(range(len(perm))):
        raise InvalidParameterError(f"{tuple(perm)} is not a permutation of range({len(perm)})")
    return VertexMap(tuple(perm))


def from_cycle_notation(n: int, cycles: Sequence[Sequence[int]]) -> VertexMap:
    """Permutation from disjoint cycles written with 1-based labels, e.g. ``[(3, 5)]``."""
    targets = list(range(n))
    seen = set()
    for cycle in cycles:
        for label in cycle:
            if not 1 <= label <= n:
                raise InvalidParameterError(f"cycle label {label} outside 1..{n}")
            if label in seen:
                raise InvalidParameterError(f"label {label} appears in more than one cycle")
            seen.add(label)
        for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
            targets[a - 1] = b - 1
    return from_permutation(targets)


def map_range(f: VertexMap) -> VertexSet:
    return VertexSet.of(f.domain_size, f.targets)


def preimage(f: VertexMap, s: VertexSet) -> VertexSet:
    if s.universe != f.domain_size:
        raise InvalidParameterError(f"set universe {s.universe} does not match map size {f.domain_size}")
    return VertexSet.of(f.domain_size, (i for i, t in enumerate(f.targets) if t in s))


def is_permutation(f: VertexMap) -> bool:
    return len(set(f.targets)) == f.domain_size


def is_constant(f: VertexMap) -> bool:
    return len(set(f.targets)) <= 1


def rotate_labels(f: VertexMap, domain_shift: int, codomain_shift: int) -> VertexMap:
    """Relabel both cycles by rotation: g((i + ds) mod n) = (f(i) + cs) mod n."""
    n = f.domain_size
    if not (0 <= domain_shift < n and 0 <= codomain_shift < n):
        raise InvalidParameterError(f"shifts ({domain_shift}, {codomain_shift}) outside [0, {n})")
    targets = [0] * n
    for i, t in enumerate(f.targets):
        targets[(i + domain_shift) % n] = (t + codomain_shift) % n
    return VertexMap(tuple(targets))


def distance_violation(f: VertexMap) -> Optional[Tuple[int, int]]:
    """First pair (x, y), x < y, at cycle distance ≡ 1 (mod 3) whose images are not."""
    n = f.domain_size
    for x, y in combinations(range(n), 2):
        if cycle_distance(n, x, y) % 3 == 1 and cycle_distance(n, f(x), f(y)) % 3 != 1:
            return x, y
    return None


def satisfies_distance_condition(f: VertexMap) -> bool:
    if f.domain_size < 3:
        raise InvalidParameterError(f"the distance condition is defined on cycles, n >= 3; got {f.domain_size}")
    return distance_violation(f) is None


# ---------- Three-translates ----------

@dataclass(frozen=True)
class ThreeTranslate:
    """The restriction (a1, a2, a3) of a three-translate to {1, 2, 3}, in 1-based labels."""

    tilde: Tuple[int, int, int]

    def __post_init__(self):
        if len(self.tilde) != 3 or any(a not in (1, 2, 3) for a in self.tilde):
            raise InvalidParameterError(f"three-translate components must be in 1..3, got {self.tilde}")

    @classmethod
    def parse(cls, text: str) -> "ThreeTranslate":
        try:
            values = tuple(int(part) for part in text.replace("(", "").replace(")", "").split(","))
        except ValueError:
            raise ParseError(f"cannot parse three-translate {text!r}; expected a1,a2,a3")
        if len(values) != 3:
            raise ParseError(f"three-translate needs exactly three components, got {text!r}")
        return cls(values)

    @property
    def is_permutation(self) -> bool:
        return len(set(self.tilde)) == 3

    @property
    def is_constant(self) -> bool:
        return len(set(self.tilde)) == 1

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.tilde) + ")"


def three_translate_expand(t: ThreeTranslate, k: int) -> VertexMap:
    """The map on C_{3k} with f(x + 3i) = f~(x) + 3i."""
    if k < 1:
        raise InvalidParameterError(f"three-translates need k >= 1, got {k}")
    targets = []
    for i in range(k):
        targets.extend(a - 1 + 3 * i for a in t.tilde)
    return VertexMap(tuple(targets))


def all_three_translates() -> List[ThreeTranslate]:
    return [ThreeTranslate((a, b, c)) for a in (1, 2, 3) for b in (1, 2, 3) for c in (1, 2, 3)]


# ---------- Functigraph ----------

@dataclass(frozen=True)
class Functigraph:
    """C(G, f): indices 0..n-1 are G1, n..2n-1 are G2."""

    base: Graph
    map: VertexMap
    graph: Graph

    @property
    def base_order(self) -> int:
        return self.base.order

    def u(self, i: int) -> int:
        return i

    def v(self, i: int) -> int:
        return self.base.order + i

    def vertex_set(self, domain: Iterable[int] = (), codomain: Iterable[int] = ()) -> VertexSet:
        n = self.base.order
        return VertexSet.of(2 * n, list(domain) + [n + j for j in codomain])

    def split(self, s: VertexSet) -> Tuple[VertexSet, VertexSet]:
        """Split a set over C(G, f) into its G1 part and G2 part, each over ``range(n)``."""
        n = self.base.order
        low = (1 << n) - 1
        return VertexSet(n, s.bits & low), VertexSet(n, s.bits >> n)


def build_functigraph(base: Graph, f: VertexMap) -> Functigraph:
    n = base.order
    if f.domain_size != n:
        raise InvalidParameterError(f"map size {f.domain_size} does not match base order {n}")
    rows = [0] * (2 * n)
    for i, row in enumerate(base.masks):
        rows[i] = row
        rows[n + i] = row << n
    for i, t in enumerate(f.targets):
        rows[i] |= 1 << (n + t)
        rows[n + t] |= 1 << i
    return Functigraph(base, f, Graph(2 * n, tuple(rows)))


def cycle_functigraph(f: VertexMap) -> Functigraph:
    return build_functigraph(build_cycle(f.domain_size), f)


def prism(base: Graph) -> Functigraph:
    """C(G, id), the prism G x K2."""
    return build_functigraph(base, identity_map(base.order))


# ---------- Map text format ----------

_MAP_RE = re.compile(r"^\s*f\s+(?P<n>\d+)\s*:(?P<targets>[\s\d]*)$")


def format_map(f: VertexMap) -> str:
    return f"f {f.domain_size} : " + " ".join(str(t) for t in f.targets) + "\n"


def parse_map(text: str) -> VertexMap:
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) != 1:
        raise ParseError(f"a map file holds exactly one 'f <n> : ...' line, found {len(lines)}")
    match = _MAP_RE.match(lines[0])
    if not match:
        raise ParseError(f"expected 'f <n> : t0 ... t(n-1)', got {lines[0]!r}")
    n = int(match["n"])
    targets = tuple(int(tok) for tok in match["targets"].split())
    if len(targets) != n:
        raise ParseError(f"map declares {n} targets but lists {len(targets)}")
    try:
        return VertexMap(targets)
    except InvalidParameterError as e:
        raise ParseError(str(e))


def read_map(path: Union[str, Path]) -> VertexMap:
    with open(path, encoding="utf-8") as fh:
        return parse_map(fh.read())


def write_map(f: VertexMap, path: Union[str, Path]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_map(f))


# ---------- Isomorphism ----------

Certificate = Tuple[int, Tuple[Tuple[int, int], ...]]


def _rank(keys: Sequence) -> List[int]:
    order = {key: rank for rank, key in enumerate(sorted(set(keys)))}
    return [order[key] for key in keys]


def _refine(neighbors: Sequence[Tuple[int, ...]], colors: List[int]) -> List[int]:
    """Colour refinement to the coarsest equitable partition finer than ``colors``."""
    cells = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in nbrs)))
            for v, nbrs in enumerate(neighbors)
        ]
        refined = _rank(signatures)
        refined_cells = len(set(refined))
        if refined_cells == cells:
            return refined
        colors, cells = refined, refined_cells


def _individualize(colors: List[int], v: int) -> List[int]:
    return _rank([(c, 0 if w == v else 1) for w, c in enumerate(colors)])


def _target_cell(colors: List[int]) -> List[int]:
    members = {}
    for v, c in enumerate(colors):
        members.setdefault(c, []).append(v)
    size, color = min((len(vs), c) for c, vs in members.items() if len(vs) > 1)
    return members[color]


def _implied_automorphism(first: List[int], second: List[int]) -> Tuple[int, ...]:
    """Automorphism carrying leaf labeling ``first`` onto ``second`` (same relabeled graph)."""
    position = [0] * len(second)
    for v, p in enumerate(second):
        position[p] = v
    return tuple(position[p] for p in first)


def _same_orbit(v: int, explored: Sequence[int], prefix: Sequence[int],
                automorphisms: Sequence[Tuple[int, ...]], order: int) -> bool:
    """Is ``v`` in the orbit of an explored sibling under automorphisms fixing ``prefix``?"""
    parent = list(range(order))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in automorphisms:
        if any(a[p] != p for p in prefix):
            continue
        for x, y in enumerate(a):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry
    root = find(v)
    return any(find(u) == root for u in explored)


@lru_cache(maxsize=4096)
def canonical_form(g: Graph) -> Certificate:
    """Certificate equal for two graphs exactly when they are isomorphic.

    Individualization-refinement: refine, split the first smallest
    non-singleton cell on each of its vertices, and keep the least edge list
    over all discrete leaves. A leaf matching the first or the best leaf
    yields an automorphism; siblings in the orbit of an explored vertex
    under automorphisms fixing the current prefix are skipped.
    """
    if g.order > ISOMORPHISM_MAX_ORDER:
        raise UnsupportedSizeError(f"isomorphism is limited to {ISOMORPHISM_MAX_ORDER} vertices, got {g.order}")
    neighbors = [tuple(VertexSet(g.order, row)) for row in g.masks]
    edges = list(g.edges())
    best: Optional[Tuple[Tuple[int, int], ...]] = None
    best_leaf: List[int] = []
    first: Optional[Tuple[Tuple[Tuple[int, int], ...], List[int]]] = None
    automorphisms: List[Tuple[int, ...]] = []
    identity = tuple(range(g.order))
    leaves = 0

    def leaf(colors: List[int]) -> None:
        nonlocal best, best_leaf, first, leaves
        leaves += 1
        relabeled = tuple(sorted(
            (min(colors[i], colors[j]), max(colors[i], colors[j])) for i, j in edges
        ))
        if first is None:
            first = (relabeled, colors)
        for cert, labeling in (first, (best, best_leaf)):
            if cert == relabeled and labeling is not colors:
                a = _implied_automorphism(labeling, colors)
                if a != identity:
                    automorphisms.append(a)
                return
        if best is None or relabeled < best:
            best, best_leaf = relabeled, colors

    def search(colors: List[int], prefix: Tuple[int, ...]) -> None:
        if len(set(colors)) == g.order:
            leaf(colors)
            return
        explored: List[int] = []
        for v in _target_cell(colors):
            if explored and _same_orbit(v, explored, prefix, automorphisms, g.order):
                continue
            explored.append(v)
            search(_refine(neighbors, _individualize(colors, v)), prefix + (v,))

    search(_refine(neighbors, [0] * g.order), ())
    _LOG.debug("Canonical form of order-%d graph from %d leaves, %d automorphisms",
               g.order, leaves, len(automorphisms))
    return g.order, best if best is not None else ()


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.order != g2.order or g1.size != g2.size:
        return False
    if sorted(r.bit_count() for r in g1.masks) != sorted(r.bit_count() for r in g2.masks):
        return False
    return canonical_form(g1) == canonical_form(g2)
