"""Explicit dominating sets from the constructive arguments.

Every builder normalizes its input with :func:`rotate_labels` (the cycle
relabeling each argument assumes), lays the set down on the normalized
instance with 0-based indices, maps it back, and certifies it against
the original functigraph before returning.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from .domsolve import SolveBudget, gamma_bruteforce, gamma_exact, gamma_with_constraints
from .errors import ConstructionError, InvalidParameterError, PreconditionError
from .functigraph import (
    Functigraph,
    ThreeTranslate,
    VertexMap,
    build_functigraph,
    cycle_functigraph,
    distance_violation,
    identity_map,
    is_permutation,
    map_range,
    rotate_labels,
    three_translate_expand,
)
from .graphcore import (
    Graph,
    VertexSet,
    build_cycle,
    build_star_chain,
    cycle_distance,
    dominated_mask,
    is_dominating,
    max_degree,
    star_center,
)
from .labels import format_labels

_LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class Witness:
    """A dominating set of ``functigraph`` produced by a named construction."""

    vertices: VertexSet
    claimed_size: int
    theorem_id: str
    functigraph: Functigraph = field(repr=False, compare=False)

    def labels(self) -> str:
        return format_labels(self.vertices, self.functigraph.base_order)

    @property
    def domain_part(self) -> VertexSet:
        return self.functigraph.split(self.vertices)[0]

    @property
    def codomain_part(self) -> VertexSet:
        return self.functigraph.split(self.vertices)[1]


def certify(
    fg: Functigraph,
    vertices: VertexSet,
    theorem_id: str,
    claimed_size: Optional[int] = None,
    bound: Optional[int] = None,
) -> Witness:
    """Wrap ``vertices`` as a Witness, raising ConstructionError if it does not dominate or miscounts."""
    if not is_dominating(fg.graph, vertices):
        raise ConstructionError(f"{theorem_id}: {format_labels(vertices, fg.base_order)} does not dominate")
    size = len(vertices)
    if claimed_size is not None and size != claimed_size:
        raise ConstructionError(f"{theorem_id}: built {size} vertices, expected {claimed_size}")
    if bound is not None and size > bound:
        raise ConstructionError(f"{theorem_id}: built {size} vertices, bound is {bound}")
    return Witness(vertices, size, theorem_id, fg)


def _unrotate(n: int, domain: Iterable[int], codomain: Iterable[int], ds: int, cs: int) -> VertexSet:
    """Pull a set laid down on rotate_labels(f, ds, cs) back to f's labels."""
    back_u = [(i - ds) % n for i in domain]
    back_v = [n + (j - cs) % n for j in codomain]
    return VertexSet.of(2 * n, back_u + back_v)


def _require_cycle_residue(f: VertexMap, residue: int, name: str) -> int:
    n = f.domain_size
    if n < 3 or n % 3 != residue:
        raise InvalidParameterError(f"{name} needs a cycle of length ≡ {residue} (mod 3), got n={n}")
    return n // 3


# ---------- Star chains ----------

def realization_instance(a: int, i: int) -> Tuple[Graph, VertexMap, Witness]:
    """Star chain of ``a`` stars, the map collapsing stars 1..i onto their centers, and D_i."""
    if a < 1:
        raise InvalidParameterError(f"a must be at least 1, got {a}")
    if not 0 <= i <= a:
        raise InvalidParameterError(f"i must be in [0, {a}], got {i}")
    base = build_star_chain(a)
    targets = tuple(star_center(x // 5 + 1) if x // 5 + 1 <= i else x for x in range(base.order))
    f = VertexMap(targets)
    fg = build_functigraph(base, f)
    centers = [star_center(j) for j in range(1, a + 1)]
    d = fg.vertex_set(domain=centers[i:], codomain=centers)
    return base, f, certify(fg, d, "realization", claimed_size=2 * a - i)


# ---------- Identity on cycles ----------

def identity_dominating_set(n: int) -> Witness:
    """The four-case set for the prism C(C_n, id)."""
    if n < 3:
        raise InvalidParameterError(f"n must be at least 3, got {n}")
    k, r = divmod(n, 4)
    if r == 0:
        domain = [4 * j for j in range(k)]
        codomain = [4 * j + 2 for j in range(k)]
    elif r in (1, 2):
        domain = [4 * j for j in range(k + 1)]
        codomain = [4 * i + 2 for i in range(k)]
        if r == 2:
            codomain.append(4 * k + 1)
    else:
        domain = [4 * j for j in range(k + 1)]
        codomain = [4 * j + 2 for j in range(k + 1)]
    fg = cycle_functigraph(identity_map(n))
    expected = n // 2 + 1 if r == 2 else -(-n // 2)
    return certify(fg, fg.vertex_set(domain, codomain), "cn-id", claimed_size=expected)


# ---------- C_{3k+1} ----------

def mod1_dominating_set(f: VertexMap) -> Witness:
    """Size 2k+1 set on C(C_{3k+1}, f) for any f."""
    k = _require_cycle_residue(f, 1, "mod1_dominating_set")
    n = f.domain_size
    cs = (-f(0)) % n
    thirds = [3 * j - 1 for j in range(1, k + 1)]
    d = _unrotate(n, thirds, [0] + thirds, 0, cs)
    return certify(cycle_functigraph(f), d, "mod1", claimed_size=2 * k + 1)


# ---------- C_{3k+2} ----------

def _residue_classes_3k2(k: int) -> List[List[int]]:
    """The three dominating sets of C_{3k+2} built from residues; the third reuses index 0."""
    v1 = [3 * j for j in range(k + 1)]
    v2 = [3 * j + 1 for j in range(k + 1)]
    v3 = [3 * j + 2 for j in range(k)] + [0]
    return [v1, v2, v3]


def nonperm_3k2_dominating_set(f: VertexMap) -> Witness:
    """Size 2k+1 set on C(C_{3k+2}, f) when f is not a permutation."""
    k = _require_cycle_residue(f, 2, "nonperm_3k2_dominating_set")
    n = f.domain_size
    if is_permutation(f):
        raise PreconditionError("nonperm_3k2_dominating_set needs a map that is not a permutation")

    counts = [0] * n
    for t in f.targets:
        counts[t] += 1
    crowded = next(c for c in range(n) if counts[c] >= 2)
    cs = (-crowded) % n
    g = rotate_labels(f, 0, cs)

    classes = _residue_classes_3k2(k)
    sizes = [sum(1 for t in g.targets if t in set(cls)) for cls in classes]
    d2 = classes[sizes.index(max(sizes))]
    d2_set = set(d2)
    ds = (-min(i for i in range(n) if g(i) in d2_set)) % n
    g = rotate_labels(g, ds, 0)
    pre = {i for i in range(n) if g(i) in d2_set}

    single = next((i for i in range(k + 1) if 3 * i + 1 in pre), None)
    if single is not None:
        d1 = [3 * j - 1 for j in range(1, single + 1)] + [3 * j for j in range(single + 1, k + 1)]
    else:
        j0 = next((j for j in range(1, k + 1) if 3 * j - 1 in pre and 3 * j in pre), None)
        if j0 is None:
            raise ConstructionError(f"no adjacent preimage pair for {f.targets}")
        d1 = [0] + [3 * j for j in range(1, j0)] + [3 * j - 1 for j in range(j0 + 1, k + 1)]
    d = _unrotate(n, d1, d2, ds, cs)
    return certify(cycle_functigraph(f), d, "3k2-nonperm", claimed_size=2 * k + 1)


def _least_cycle_dominating_set_with(n: int, anchor: int) -> List[int]:
    """Lexicographically least minimum dominating set of C_n containing ``anchor``."""
    cycle = build_cycle(n)
    size = gamma_with_constraints(cycle, VertexSet.of(n, [anchor]), VertexSet.empty(n)).gamma
    others = [v for v in range(n) if v != anchor]
    for combo in combinations(others, size - 1):
        bits = VertexSet.of(n, (anchor,) + combo)
        if is_dominating(cycle, bits):
            return list(bits)
    raise ConstructionError(f"no dominating set of C_{n} of size {size} contains {anchor}")


def distance_3k2_dominating_set(f: VertexMap, x: int, y: int) -> Witness:
    """Size ≤ 2k+1 set when x, y sit at distance ≡ 1 (mod 3) but f(x), f(y) do not."""
    k = _require_cycle_residue(f, 2, "distance_3k2_dominating_set")
    n = f.domain_size
    if not (0 <= x < n and 0 <= y < n):
        raise InvalidParameterError(f"vertices ({x}, {y}) outside C_{n}")
    if cycle_distance(n, x, y) % 3 != 1:
        raise PreconditionError(f"d({x}, {y}) = {cycle_distance(n, x, y)} is not ≡ 1 (mod 3)")
    if cycle_distance(n, f(x), f(y)) % 3 == 1:
        raise PreconditionError(f"images of {x} and {y} are at distance ≡ 1 (mod 3)")

    ds, cs = (-x) % n, (-f(x)) % n
    g = rotate_labels(f, ds, cs)
    y_pos = (y - x) % n
    a = (y_pos - 1) // 3
    d1 = [3 * i - 1 for i in range(1, a + 1)] + [3 * i for i in range(a + 1, k + 1)]

    b = g(y_pos)
    if b == 0:
        d2 = _least_cycle_dominating_set_with(n, 0)
    elif b % 3 == 2:
        ell = (b + 1) // 3
        d2 = [3 * i for i in range(1, ell)] + [3 * i - 1 for i in range(ell + 1, k + 1)] + [0, b]
    else:
        d2 = [3 * i for i in range(k + 1)]
    d = _unrotate(n, d1, d2, ds, cs)
    return certify(cycle_functigraph(f), d, "3k2-distance", bound=2 * k + 1)


def find_consecutive_window(f: VertexMap) -> Optional[Tuple[int, int]]:
    """Smallest (s, t) such that f sends s..s+4 into t..t+4 (indices mod n)."""
    n = f.domain_size
    if n < 5:
        return None
    for s in range(n):
        images = [f((s + p) % n) for p in range(5)]
        for t in range(n):
            if all((img - t) % n < 5 for img in images):
                return s, t
    return None


def consecutive5_dominating_set(f: VertexMap) -> Witness:
    """Size ≤ 2k+1 set when five consecutive vertices map into five consecutive vertices."""
    k = _require_cycle_residue(f, 2, "consecutive5_dominating_set")
    n = f.domain_size
    window = find_consecutive_window(f)
    if window is None:
        raise PreconditionError(f"no five consecutive vertices map into five consecutive vertices: {f.targets}")
    s, t = window
    ds, cs = (-s) % n, (-t) % n
    g = rotate_labels(f, ds, cs)
    fg = cycle_functigraph(g)

    core = cycle_functigraph(VertexMap(tuple(g(p) for p in range(5))))
    s0_u, s0_v = core.split(gamma_bruteforce(core.graph).witness)
    base_u, base_v = list(s0_u), list(s0_v)

    def extend(side: int, first: int, last: int, base: List[int], other: List[int]) -> List[int]:
        default = [3 * j for j in range(2, k + 1)]
        current = base + default
        bits = fg.vertex_set(current, other) if side == 0 else fg.vertex_set(other, current)
        covered = dominated_mask(fg.graph, bits.bits)
        if not covered >> first & 1:
            return base + [3 * j + 1 for j in range(2, k + 1)]
        if not covered >> last & 1:
            return base + [3 * j - 1 for j in range(2, k + 1)]
        return current

    domain = extend(0, 0, 4, base_u, base_v)
    codomain = extend(1, n, n + 4, base_v, domain)
    d = _unrotate(n, domain, codomain, ds, cs)
    return certify(cycle_functigraph(f), d, "consecutive5", bound=2 * k + 1)


# ---------- C_{3k} ----------

def max_degree_dominating_set(f: VertexMap) -> Witness:
    """Size 2k−1 set on C(C_{3k}, f) when Δ(C(C_{3k}, f)) ≥ k+5."""
    k = _require_cycle_residue(f, 0, "max_degree_dominating_set")
    n = f.domain_size
    fg = cycle_functigraph(f)
    delta = max_degree(fg.graph)
    if delta < k + 5:
        raise PreconditionError(f"max degree {delta} is below k+5 = {k + 5}")

    counts = [0] * n
    for t in f.targets:
        counts[t] += 1
    hub = counts.index(max(counts))
    cs = (-hub) % n
    g = rotate_labels(f, 0, cs)
    hits = [sum(1 for p in range(3) if g(3 * b + p) == 0) for b in range(k)]
    thirds = [3 * j for j in range(k)]

    full_block = next((b for b in range(k) if hits[b] == 3), None)
    if full_block is not None:
        ds = (-3 * full_block) % n
        d = _unrotate(n, [3 * j + 1 for j in range(1, k)], thirds, ds, cs)
        return certify(fg, d, "max-degree", claimed_size=2 * k - 1)

    pairs = [b for b in range(k) if hits[b] == 2][:3]
    if len(pairs) < 3:
        raise ConstructionError(f"fewer than three blocks with two hub preimages in {f.targets}")
    odd = {b: next(3 * b + p for p in range(3) if g(3 * b + p) != 0) for b in pairs}
    middles = [3 * j + 1 for j in range(k)]

    zero_block = next((b for b in pairs if g(odd[b]) % 3 == 0), None)
    if zero_block is not None:
        domain = [m for m in middles if m != 3 * zero_block + 1]
        d = _unrotate(n, domain, thirds, 0, cs)
        return certify(fg, d, "max-degree", claimed_size=2 * k - 1)

    for p, q in combinations(pairs, 2):
        rho = g(odd[p]) % 3
        if g(odd[q]) % 3 == rho:
            domain = [m for m in middles if m not in (3 * p + 1, 3 * q + 1)]
            codomain = [0] + [3 * j + rho for j in range(k)]
            d = _unrotate(n, domain, codomain, 0, cs)
            return certify(fg, d, "max-degree", claimed_size=2 * k - 1)
    raise ConstructionError(f"no residue collision among the odd vertices of {f.targets}")


def residue_class(k: int, i: int) -> VertexSet:
    """V_i = {v_j : j ≡ i (mod 3)} of C_{3k}, as codomain-local indices."""
    if i not in (1, 2, 3):
        raise InvalidParameterError(f"residue class must be 1, 2 or 3, got {i}")
    return VertexSet.of(3 * k, range(i - 1, 3 * k, 3))


def average_degree(fg: Functigraph, codomain: VertexSet) -> float:
    n = fg.base_order
    degrees = [fg.graph.masks[n + j].bit_count() for j in codomain]
    return sum(degrees) / len(degrees)


def avg_degree_dominating_set(f: VertexMap, i: int) -> Witness:
    """V_i plus the domain vertices it misses, when V_i has average degree above 4."""
    k = _require_cycle_residue(f, 0, "avg_degree_dominating_set")
    n = f.domain_size
    cls = residue_class(k, i)
    fg = cycle_functigraph(f)
    avg = average_degree(fg, cls)
    if avg <= 4:
        raise PreconditionError(f"average degree of V_{i} is {avg:g}, not above 4")
    missed = [u for u in range(n) if f(u) not in cls]
    return certify(fg, fg.vertex_set(missed, cls), "avg-degree", bound=2 * k - 1)


def ex2_map(k: int) -> VertexMap:
    """The sharpness map on C_{3k}: residue 1 fixed, residue 2 shifted by one, residue 0 sent to v_{3k}."""
    if k < 1:
        raise InvalidParameterError(f"k must be at least 1, got {k}")
    targets = []
    for j in range(3 * k):
        r = j % 3
        targets.append(j if r == 0 else j + 1 if r == 1 else 3 * k - 1)
    return VertexMap(tuple(targets))


# ---------- C_5 case analysis ----------

def _dihedral(n: int) -> List[Tuple[int, ...]]:
    return [tuple((s * i + r) % n for i in range(n)) for s in (1, -1) for r in range(n)]


def _relabel(f: VertexMap, sigma: Sequence[int], tau: Sequence[int]) -> VertexMap:
    targets = [0] * f.domain_size
    for i, t in enumerate(f.targets):
        targets[sigma[i]] = tau[t]
    return VertexMap(tuple(targets))


# Sets for the normalized maps with g(u1) = v1 and g(u2) = v2, 0-based (domain, codomain).
_C5_PERMUTATION_SETS = {
    (0, 1, 3, 2, 4): ([1], [2, 4]),
    (0, 1, 3, 4, 2): ([1], [2, 4]),
    (0, 1, 4, 3, 2): ([2], [0, 2]),
    (0, 1, 2, 3, 4): ([2], [0, 4]),
}


def _c5_normalized_set(g: VertexMap) -> Optional[Tuple[List[int], List[int]]]:
    counts = [0] * 5
    for t in g.targets:
        counts[t] += 1
    if g(0) != 0 or counts[g(0)] != 1 or counts[g(1)] != 1:
        return None
    if g(1) == 2:
        return [3], [0, 2]
    if g(1) != 1:
        return None
    missing = [c for c in range(5) if counts[c] == 0]
    if missing == [4]:
        return [0], [2, 3]
    if missing == [3]:
        return [0], [2, 4]
    if not missing:
        return _C5_PERMUTATION_SETS.get(g.targets)
    return None


def ex1_case_witness(f: VertexMap) -> Witness:
    """Case-by-case set of size at most 3 for any map on C_5."""
    if f.domain_size != 5:
        raise InvalidParameterError(f"ex1_case_witness works on C_5, got n={f.domain_size}")
    fg = cycle_functigraph(f)
    rng = sorted(map_range(f))
    if len(rng) <= 3:
        d = fg.vertex_set(codomain=rng)
        if not is_dominating(fg.graph, d):
            d = next(
                d.add(v) for v in range(10) if v not in d and is_dominating(fg.graph, d.add(v))
            )
        return certify(fg, d, "c5-case", bound=3)

    for sigma in _dihedral(5):
        for tau in _dihedral(5):
            found = _c5_normalized_set(_relabel(f, sigma, tau))
            if found is None:
                continue
            domain, codomain = found
            back_u = [sigma.index(p) for p in domain]
            back_v = [5 + tau.index(q) for q in codomain]
            return certify(fg, VertexSet.of(10, back_u + back_v), "c5-case", claimed_size=3)
    raise ConstructionError(f"no case applies to {f.targets}")


# ---------- Three-translates ----------

# (tilde, k, domain labels, codomain labels), 1-based.
_REFERENCE_TRANSLATE_SETS = [
    ((2, 3, 1), 4, (1, 4, 8), (4, 7, 11, 12)),
    ((3, 2, 1), 3, (1, 6, 8), (1, 6)),
    ((2, 1, 1), 3, (4, 6), (1, 2, 7)),
    ((3, 1, 1), 3, (6,), (1, 3, 6, 7)),
]


def reference_translate_witnesses() -> List[Witness]:
    """The four reference dominating sets on three-translate functigraphs, certified."""
    witnesses = []
    for tilde, k, domain, codomain in _REFERENCE_TRANSLATE_SETS:
        fg = cycle_functigraph(three_translate_expand(ThreeTranslate(tilde), k))
        d = fg.vertex_set([p - 1 for p in domain], [q - 1 for q in codomain])
        witnesses.append(certify(fg, d, "tt-literal", claimed_size=len(domain) + len(codomain)))
    return witnesses


def lift_translate_witness(t: ThreeTranslate, base: Witness, k_to: int) -> Witness:
    """Repeat a witness on C(C_{3m}, t) around C(C_{3mj}, t), j = k_to / m.

    The projection x -> x mod 3m is a covering map that commutes with t, so
    the translated copies dominate.
    """
    n_from = base.functigraph.base_order
    m = n_from // 3
    if n_from % 3 or k_to % m:
        raise InvalidParameterError(f"cannot lift from C_{n_from} to C_{3 * k_to}")
    if base.functigraph.map != three_translate_expand(t, m):
        raise InvalidParameterError(f"base witness is not on C(C_{n_from}, {t})")
    copies = k_to // m
    u, v = base.functigraph.split(base.vertices)
    fg = cycle_functigraph(three_translate_expand(t, k_to))
    d = fg.vertex_set(
        [x + n_from * c for c in range(copies) for x in u],
        [y + n_from * c for c in range(copies) for y in v],
    )
    return certify(fg, d, "tt-lift", claimed_size=copies * len(base.vertices))


# ---------- Dispatcher for C_{3k+2} ----------

def final_3k2_dispatch(f: VertexMap, budget: Optional[SolveBudget] = None) -> Witness:
    """A set of size ≤ 2k+1 for any map on C_{3k+2}, routed to the construction that covers it."""
    k = _require_cycle_residue(f, 2, "final_3k2_dispatch")
    n = f.domain_size
    fg = cycle_functigraph(f)
    if f.targets == tuple(range(n)):
        w = identity_dominating_set(n)
    elif not is_permutation(f):
        w = nonperm_3k2_dominating_set(f)
    else:
        pair = distance_violation(f)
        if pair is not None:
            w = distance_3k2_dominating_set(f, *pair)
        elif find_consecutive_window(f) is not None:
            w = consecutive5_dominating_set(f)
        else:
            # Distance-preserving permutations give a prism.
            _LOG.info("Map %s preserves distances with no aligned window; using solver optimum", f.targets)
            w = certify(fg, gamma_exact(fg.graph, budget).witness, "3k2-perm-structure")
    return certify(fg, w.vertices, f"final-3k2/{w.theorem_id}", bound=2 * k + 1)
