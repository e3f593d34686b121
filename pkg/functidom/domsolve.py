"""Exact minimum domination.

Two solvers share one result type: a subset-enumeration oracle for tiny
graphs and a bitset branch-and-bound for graphs up to the budget's
``max_vertices``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Tuple

from .config import BRUTEFORCE_MAX_ORDER, budget_max_vertices, budget_node_limit
from .errors import (
    InfeasibleError,
    InvalidParameterError,
    ResourceLimitError,
    UnsupportedSizeError,
)
from .graphcore import Graph, VertexSet, _bits_of, dominated_mask

_LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolveBudget:
    max_vertices: int = field(default_factory=budget_max_vertices)
    node_limit: int = field(default_factory=budget_node_limit)

    def __post_init__(self):
        if self.max_vertices <= 0 or self.node_limit <= 0:
            raise InvalidParameterError(
                f"budget values must be positive, got max_vertices={self.max_vertices}, node_limit={self.node_limit}"
            )


@dataclass(frozen=True)
class DominationResult:
    """A minimum dominating set together with the search effort spent finding it."""

    gamma: int
    witness: VertexSet
    nodes_explored: int


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def gamma_bruteforce(g: Graph) -> DominationResult:
    """Oracle: the lexicographically least dominating set of least cardinality."""
    if g.order > BRUTEFORCE_MAX_ORDER:
        raise UnsupportedSizeError(f"brute force is limited to {BRUTEFORCE_MAX_ORDER} vertices, got {g.order}")
    full = g.full_mask
    closed = g.closed_masks
    checked = 0
    for size in range(g.order + 1):
        for combo in combinations(range(g.order), size):
            checked += 1
            covered = 0
            for v in combo:
                covered |= closed[v]
            if covered == full:
                return DominationResult(size, VertexSet.of(g.order, combo), checked)
    # Unreachable: the whole vertex set dominates.
    raise InfeasibleError("no dominating set found")


def _greedy(g: Graph, chosen: int, allowed: int) -> Optional[int]:
    """Extend ``chosen`` greedily using only ``allowed`` vertices; None if that cannot dominate."""
    closed = g.closed_masks
    undominated = g.full_mask & ~dominated_mask(g, chosen)
    while undominated:
        best_v, best_cover = -1, 0
        for v in _bits_of(allowed):
            cover = (closed[v] & undominated).bit_count()
            if cover > best_cover:
                best_v, best_cover = v, cover
        if best_v < 0:
            return None
        chosen |= 1 << best_v
        allowed &= ~(1 << best_v)
        undominated &= ~closed[best_v]
    return chosen


def greedy_upper_bound(g: Graph) -> Tuple[int, VertexSet]:
    """Max-coverage greedy (ties to the lowest index); always returns a dominating set."""
    bits = _greedy(g, 0, g.full_mask)
    return bits.bit_count(), VertexSet(g.order, bits)


class _NodeLimitReached(Exception):
    pass


class _BranchAndBound:
    """Branch on the candidates dominating the most constrained undominated vertex.

    A vertex whose sibling branch has been explored is removed from the
    allowed set of the later siblings, so every dominating set is reached
    at most once.
    """

    def __init__(self, g: Graph, node_limit: int):
        self.g = g
        self.closed = g.closed_masks
        self.full = g.full_mask
        self.node_limit = node_limit
        self.nodes = 0
        self.best_size = g.order + 1
        self.best_bits: Optional[int] = None

    def lower_bound(self, count: int, undominated: int, allowed: int) -> Optional[int]:
        cover = max((self.closed[v] & undominated).bit_count() for v in _bits_of(allowed)) if allowed else 0
        if cover == 0:
            return None
        return count + _ceil_div(undominated.bit_count(), cover)

    def branch(self, chosen: int, count: int, dominated: int, allowed: int) -> None:
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise _NodeLimitReached()
        undominated = self.full & ~dominated
        if not undominated:
            if count < self.best_size:
                self.best_size, self.best_bits = count, chosen
            return
        bound = self.lower_bound(count, undominated, allowed)
        if bound is None or bound >= self.best_size:
            return

        pivot, candidates = -1, 0
        fewest = self.g.order + 1
        for w in _bits_of(undominated):
            options = self.closed[w] & allowed
            n_options = options.bit_count()
            if n_options < fewest:
                pivot, candidates, fewest = w, options, n_options
                if n_options <= 1:
                    break
        if not candidates:
            return

        for v in _bits_of(candidates):
            self.branch(chosen | 1 << v, count + 1, dominated | self.closed[v], allowed & ~(1 << v))
            allowed &= ~(1 << v)


def _solve(g: Graph, include: int, exclude: int, budget: SolveBudget) -> DominationResult:
    if g.order > budget.max_vertices:
        raise UnsupportedSizeError(f"graph of order {g.order} exceeds the budget of {budget.max_vertices} vertices")
    if include & exclude:
        raise InvalidParameterError("include and exclude sets overlap")

    allowed = g.full_mask & ~include & ~exclude
    dominated = dominated_mask(g, include)
    if (dominated | dominated_mask(g, allowed)) != g.full_mask:
        raise InfeasibleError("no dominating set avoids the excluded vertices")

    solver = _BranchAndBound(g, budget.node_limit)
    incumbent = _greedy(g, include, allowed)
    solver.best_size, solver.best_bits = incumbent.bit_count(), incumbent

    root_bound = solver.lower_bound(include.bit_count(), g.full_mask & ~dominated, allowed)
    root_bound = root_bound if root_bound is not None else include.bit_count()
    _LOG.debug("Solving order-%d graph: incumbent %d, root bound %d", g.order, solver.best_size, root_bound)
    try:
        solver.branch(include, include.bit_count(), dominated, allowed)
    except _NodeLimitReached:
        _LOG.warning("Node limit %d reached on order-%d graph", budget.node_limit, g.order)
        raise ResourceLimitError(
            f"node limit {budget.node_limit} exceeded; gamma in [{root_bound}, {solver.best_size}]",
            lower_bound=root_bound,
            best_size=solver.best_size,
            best_witness=VertexSet(g.order, solver.best_bits),
        )
    _LOG.debug("Solved order-%d graph: gamma=%d after %d nodes", g.order, solver.best_size, solver.nodes)
    return DominationResult(solver.best_size, VertexSet(g.order, solver.best_bits), solver.nodes)


def gamma_exact(g: Graph, budget: Optional[SolveBudget] = None) -> DominationResult:
    """Minimum dominating set by branch and bound.

    The witness is the first optimum the deterministic search meets (the
    greedy incumbent when nothing smaller exists); it need not be the
    lexicographically least one.
    """
    return _solve(g, 0, 0, budget or SolveBudget())


def gamma_with_constraints(
    g: Graph,
    include: VertexSet,
    exclude: VertexSet,
    budget: Optional[SolveBudget] = None,
) -> DominationResult:
    """Minimum dominating set containing ``include`` and avoiding ``exclude``."""
    for s in (include, exclude):
        if s.universe != g.order:
            raise InvalidParameterError(f"set universe {s.universe} does not match graph order {g.order}")
    return _solve(g, include.bits, exclude.bits, budget or SolveBudget())


def domination_number(g: Graph, budget: Optional[SolveBudget] = None) -> int:
    return gamma_exact(g, budget).gamma
