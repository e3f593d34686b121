"""Run a per-map check over a whole family of maps on C_n.

Families are every map (n <= 7), every permutation (n <= 9), or a seeded
sample. Work is cut into rank ranges so worker processes regenerate their
maps locally; results come back in rank order, so the first
counterexample is always the one with the lowest index.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from math import factorial
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from tqdm import tqdm

from .config import ENUMERATE_ALL_MAX_N, ENUMERATE_PERMUTATIONS_MAX_N, worker_count
from .constructions import find_consecutive_window
from .domsolve import SolveBudget
from .errors import ConstructionError, InvalidParameterError, PreconditionError, UnsupportedSizeError
from .functigraph import VertexMap, cycle_functigraph, distance_violation, is_permutation
from . import theorems
from .theorems import TheoremVerdict, avg_degree_class

_LOG = logging.getLogger(__name__)

MODES = ("all", "permutations", "sample")
CHUNK_SIZE = 2000
MAX_REJECTIONS_PER_DRAW = 10_000


class SeededGenerator:
    """Portable 64-bit linear congruential generator.

    state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64);
    draws use the high 32 bits.
    """

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int = 0):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state * self.MULTIPLIER + self.INCREMENT) & self.MASK
        return self.state

    def below(self, bound: int) -> int:
        if not 0 < bound <= 1 << 32:
            raise InvalidParameterError(f"bound must be in (0, 2^32], got {bound}")
        return ((self.next_u64() >> 32) * bound) >> 32

    def sample_positions(self, n: int, count: int) -> List[int]:
        """``count`` distinct positions of range(n) by a partial Fisher-Yates shuffle."""
        pool = list(range(n))
        for i in range(count):
            j = i + self.below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:count]

    def random_map(self, n: int) -> VertexMap:
        return VertexMap(tuple(self.below(n) for _ in range(n)))


# ---------- Biased samplers for hypotheses uniform draws rarely meet ----------

def _sample_hub_map(rng: SeededGenerator, n: int) -> VertexMap:
    k = n // 3
    hub = rng.below(n)
    crowd = k + 3 + rng.below(n - k - 2)
    targets = [rng.below(n) for _ in range(n)]
    for p in rng.sample_positions(n, crowd):
        targets[p] = hub
    return VertexMap(tuple(targets))


def _sample_heavy_class_map(rng: SeededGenerator, n: int) -> VertexMap:
    k = n // 3
    offset = rng.below(3)
    heavy = 2 * k + 1 + rng.below(k)
    targets = [rng.below(n) for _ in range(n)]
    for p in rng.sample_positions(n, heavy):
        targets[p] = offset + 3 * rng.below(k)
    return VertexMap(tuple(targets))


def _sample_window_map(rng: SeededGenerator, n: int) -> VertexMap:
    s, t = rng.below(n), rng.below(n)
    targets = [rng.below(n) for _ in range(n)]
    for p in range(5):
        targets[(s + p) % n] = (t + rng.below(5)) % n
    return VertexMap(tuple(targets))


def _sample_permutation(rng: SeededGenerator, n: int) -> VertexMap:
    return VertexMap(tuple(rng.sample_positions(n, n)))


# ---------- Check registry ----------

def _always(f: VertexMap) -> bool:
    return True


def _hub_degree_ok(f: VertexMap) -> bool:
    k = f.domain_size // 3
    return max(f.targets.count(t) for t in set(f.targets)) + 2 >= k + 5


def _on_cycle(check: Callable) -> Callable:
    return lambda f, budget: check(cycle_functigraph(f), budget)


@dataclass(frozen=True)
class MapCheck:
    name: str
    check: Callable[[VertexMap, Optional[SolveBudget]], TheoremVerdict]
    valid_n: Callable[[int], bool] = lambda n: n >= 3
    applies: Callable[[VertexMap], bool] = _always
    sampler: Optional[Callable[[SeededGenerator, int], VertexMap]] = None


MAP_CHECKS: Dict[str, MapCheck] = {
    c.name: c
    for c in (
        MapCheck("bounds", _on_cycle(theorems.check_bounds)),
        MapCheck("gen", _on_cycle(theorems.check_gen_iff)),
        MapCheck("lb-cycle", theorems.check_lb_cycle),
        MapCheck("c3", theorems.check_c3_constant, lambda n: n == 3),
        MapCheck("c4-perm", theorems.check_c4_permutation, lambda n: n == 4, is_permutation, _sample_permutation),
        MapCheck("cor-perm", theorems.check_cor_permutation, lambda n: n == 3 or n >= 5, is_permutation, _sample_permutation),
        MapCheck("c5-exhaustive", theorems.check_c5_exhaustive, lambda n: n == 5),
        MapCheck("c5-case", theorems.check_c5_case, lambda n: n == 5),
        MapCheck("mod1", theorems.check_mod1, lambda n: n >= 4 and n % 3 == 1),
        MapCheck("3k2-bound", theorems.check_3k2_bound, lambda n: n >= 5 and n % 3 == 2),
        MapCheck(
            "3k2-nonperm", theorems.check_nonperm_3k2, lambda n: n >= 5 and n % 3 == 2,
            lambda f: not is_permutation(f),
        ),
        MapCheck(
            "3k2-distance", theorems.check_distance_3k2, lambda n: n >= 5 and n % 3 == 2,
            lambda f: distance_violation(f) is not None,
        ),
        MapCheck(
            "consecutive5", theorems.check_consecutive5, lambda n: n >= 5 and n % 3 == 2,
            lambda f: find_consecutive_window(f) is not None, _sample_window_map,
        ),
        MapCheck("final-3k2", theorems.check_final_3k2, lambda n: n >= 5 and n % 3 == 2),
        MapCheck(
            "3k2-perm-structure", theorems.check_3k2_permutation_structure, lambda n: n >= 5 and n % 3 == 2,
            lambda f: is_permutation(f) and f(0) == 0 and distance_violation(f) is None, _sample_permutation,
        ),
        MapCheck(
            "max-degree", theorems.check_max_degree, lambda n: n >= 6 and n % 3 == 0,
            _hub_degree_ok, _sample_hub_map,
        ),
        MapCheck(
            "avg-degree", theorems.check_avg_degree, lambda n: n >= 3 and n % 3 == 0,
            lambda f: avg_degree_class(f) is not None, _sample_heavy_class_map,
        ),
    )
}


def get_map_check(name: str) -> MapCheck:
    try:
        return MAP_CHECKS[name]
    except KeyError:
        raise InvalidParameterError(f"unknown map check {name!r}; known: {', '.join(sorted(MAP_CHECKS))}")


# ---------- Families ----------

def family_size(n: int, mode: str, count: int = 0) -> int:
    if mode == "all":
        return n ** n
    if mode == "permutations":
        return factorial(n)
    return count


def _unrank_all(n: int, rank: int) -> VertexMap:
    """Rank in itertools.product(range(n), repeat=n) order."""
    digits = [0] * n
    for pos in range(n - 1, -1, -1):
        rank, digits[pos] = divmod(rank, n)
    return VertexMap(tuple(digits))


def _unrank_permutation(n: int, rank: int) -> VertexMap:
    """Rank in lexicographic (itertools.permutations) order."""
    pool = list(range(n))
    targets = []
    for pos in range(n - 1, -1, -1):
        index, rank = divmod(rank, factorial(pos))
        targets.append(pool.pop(index))
    return VertexMap(tuple(targets))


def iter_maps(n: int, mode: str, seed: int = 0, count: int = 0, check: Optional[MapCheck] = None) -> Iterator[VertexMap]:
    """The family in rank order; samples redraw until ``check.applies``."""
    _validate_family(n, mode, count)
    if mode == "sample":
        yield from _draw_sample(n, seed, count, check)
        return
    unrank = _unrank_all if mode == "all" else _unrank_permutation
    for rank in range(family_size(n, mode)):
        yield unrank(n, rank)


def _validate_family(n: int, mode: str, count: int) -> None:
    if mode not in MODES:
        raise InvalidParameterError(f"mode must be one of {MODES}, got {mode!r}")
    if n < 1:
        raise InvalidParameterError(f"n must be positive, got {n}")
    if mode == "all" and n > ENUMERATE_ALL_MAX_N:
        raise UnsupportedSizeError(f"enumerating all maps is limited to n <= {ENUMERATE_ALL_MAX_N}, got {n}")
    if mode == "permutations" and n > ENUMERATE_PERMUTATIONS_MAX_N:
        raise UnsupportedSizeError(f"enumerating permutations is limited to n <= {ENUMERATE_PERMUTATIONS_MAX_N}, got {n}")
    if mode == "sample" and count <= 0:
        raise InvalidParameterError(f"sample mode needs a positive count, got {count}")


def _draw_sample(n: int, seed: int, count: int, check: Optional[MapCheck]) -> Iterator[VertexMap]:
    rng = SeededGenerator(seed)
    draw = check.sampler if check and check.sampler else (lambda r, size: r.random_map(size))
    applies = check.applies if check else _always
    for _ in range(count):
        for _attempt in range(MAX_REJECTIONS_PER_DRAW):
            f = draw(rng, n)
            if applies(f):
                yield f
                break
        else:
            raise PreconditionError(f"no sampled map on C_{n} satisfies {check.name} after {MAX_REJECTIONS_PER_DRAW} draws")


# ---------- Driver ----------

@dataclass
class EnumerationSummary:
    """Aggregate of one check over one family."""

    check: str
    n: int
    mode: str
    total: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    min_observed: Optional[int] = None
    max_observed: Optional[int] = None
    first_counterexample: Optional[TheoremVerdict] = None
    verdicts: List[TheoremVerdict] = field(default_factory=list)

    def add(self, verdict: Optional[TheoremVerdict], keep: bool) -> None:
        if verdict is None:
            self.skipped += 1
            return
        self.total += 1
        if verdict.passed:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_counterexample is None:
                self.first_counterexample = verdict
        if verdict.observed is not None:
            self.min_observed = verdict.observed if self.min_observed is None else min(self.min_observed, verdict.observed)
            self.max_observed = verdict.observed if self.max_observed is None else max(self.max_observed, verdict.observed)
        if keep:
            self.verdicts.append(verdict)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.total > 0

    def to_verdict(self) -> TheoremVerdict:
        detail = f"{self.passed}/{self.total} passed, {self.skipped} outside hypothesis"
        if self.min_observed is not None:
            detail += f", observed in [{self.min_observed}, {self.max_observed}]"
        if self.first_counterexample is not None:
            detail += f", first counterexample {self.first_counterexample.instance}"
        witness = self.first_counterexample.witness if self.first_counterexample else None
        return TheoremVerdict(
            self.check, f"C{self.n} {self.mode} ({self.total} maps)", None, self.max_observed,
            self.ok, witness, "all", detail, self.n,
        )


def evaluate_map(check: MapCheck, f: VertexMap, budget: Optional[SolveBudget]) -> Optional[TheoremVerdict]:
    """Verdict for one map, or None when the map is outside the check's hypothesis."""
    if not check.applies(f):
        return None
    try:
        return check.check(f, budget)
    except ConstructionError as e:
        _LOG.warning("Construction failed for %s: %s", f.targets, e)
        return TheoremVerdict(check.name, theorems.cycle_instance(f), None, None, False, None, "=", str(e), f.domain_size)


def _run_rank_chunk(
    check_name: str, n: int, mode: str, budget: Optional[SolveBudget], bounds: Tuple[int, int]
) -> List[Optional[TheoremVerdict]]:
    check = get_map_check(check_name)
    unrank = _unrank_all if mode == "all" else _unrank_permutation
    return [evaluate_map(check, unrank(n, rank), budget) for rank in range(*bounds)]


def _run_map_chunk(
    check_name: str, budget: Optional[SolveBudget], maps: Sequence[Tuple[int, ...]]
) -> List[Optional[TheoremVerdict]]:
    check = get_map_check(check_name)
    return [evaluate_map(check, VertexMap(targets), budget) for targets in maps]


def enumerate_maps(
    n: int,
    mode: str,
    check: str,
    seed: int = 0,
    count: int = 0,
    budget: Optional[SolveBudget] = None,
    workers: Optional[int] = None,
    per_instance: bool = False,
    quiet: bool = False,
) -> EnumerationSummary:
    """Run ``check`` over every map of the family and aggregate in rank order."""
    map_check = get_map_check(check)
    if not map_check.valid_n(n):
        raise InvalidParameterError(f"check {check!r} does not apply to C_{n}")
    _validate_family(n, mode, count)
    total = family_size(n, mode, count)
    pool_size = worker_count(workers)

    if mode == "sample":
        maps = [f.targets for f in _draw_sample(n, seed, count, map_check)]
        chunks = [maps[i:i + CHUNK_SIZE] for i in range(0, len(maps), CHUNK_SIZE)]
        task = partial(_run_map_chunk, check, budget)
    else:
        chunks = [(i, min(i + CHUNK_SIZE, total)) for i in range(0, total, CHUNK_SIZE)]
        task = partial(_run_rank_chunk, check, n, mode, budget)

    _LOG.info("Enumerating %s over C%d (%s, %d maps, %d workers)", check, n, mode, total, pool_size)
    summary = EnumerationSummary(check, n, mode)
    progress = tqdm(total=total, desc=f"{check} C{n} {mode}", unit="map", disable=quiet)
    try:
        if pool_size == 1 or len(chunks) == 1:
            results = map(task, chunks)
            _consume(results, summary, per_instance, progress)
        else:
            with ProcessPoolExecutor(max_workers=pool_size) as executor:
                _consume(executor.map(task, chunks), summary, per_instance, progress)
    finally:
        progress.close()
    _LOG.info(
        "%s over C%d %s: %d passed, %d failed, %d skipped", check, n, mode, summary.passed, summary.failed, summary.skipped
    )
    return summary


def _consume(results, summary: EnumerationSummary, keep: bool, progress) -> None:
    for chunk in results:
        for verdict in chunk:
            summary.add(verdict, keep)
        progress.update(len(chunk))
