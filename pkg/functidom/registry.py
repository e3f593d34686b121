"""The closed set of verifiable statements and their default instance ranges.

Each entry turns a :class:`VerifyOptions` into a stream of verdicts.
Entries backed by a per-map check emit one summary verdict per
(n, family) unless ``per_instance`` is set.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from . import theorems
from .constructions import reference_translate_witnesses
from .domsolve import SolveBudget
from .enumeration import enumerate_maps
from .errors import InvalidParameterError, PreconditionError
from .functigraph import ThreeTranslate, all_three_translates
from .theorems import TheoremVerdict

_LOG = logging.getLogger(__name__)

# (n values, family, sample count)
Plan = List[Tuple[int, str, int]]


@dataclass(frozen=True)
class VerifyOptions:
    """Instance ranges and run settings; ``None`` ranges fall back to the entry's defaults."""

    n: Optional[Tuple[int, ...]] = None
    k: Optional[Tuple[int, ...]] = None
    a: Optional[Tuple[int, ...]] = None
    mode: Optional[str] = None
    seed: int = 0
    count: Optional[int] = None
    tilde: Optional[ThreeTranslate] = None
    per_instance: bool = False
    quick: bool = False
    workers: Optional[int] = None
    quiet: bool = False
    budget: SolveBudget = field(default_factory=SolveBudget)


@dataclass(frozen=True)
class RegistryEntry:
    theorem_id: str
    description: str
    run: Callable[[VerifyOptions], Iterator[TheoremVerdict]]


def _enumerated(check: str, default: Plan, quick: Plan) -> Callable[[VerifyOptions], Iterator[TheoremVerdict]]:
    def run(opts: VerifyOptions) -> Iterator[TheoremVerdict]:
        plan = quick if opts.quick else default
        if opts.n is not None:
            mode = opts.mode or plan[0][1]
            count = opts.count or next((c for _, m, c in plan if m == "sample"), 1000)
            plan = [(n, mode, count) for n in opts.n]
        elif opts.mode is not None or opts.count is not None:
            plan = [(n, opts.mode or mode, opts.count or count) for n, mode, count in plan]
        for n, mode, count in plan:
            summary = enumerate_maps(
                n, mode, check, seed=opts.seed, count=count, budget=opts.budget,
                workers=opts.workers, per_instance=opts.per_instance, quiet=opts.quiet,
            )
            if opts.per_instance:
                yield from summary.verdicts
            yield summary.to_verdict()

    return run


def _values(given: Optional[Tuple[int, ...]], default: Sequence[int], quick: Sequence[int], opts: VerifyOptions) -> Sequence[int]:
    if given is not None:
        return given
    return quick if opts.quick else default


def _run_realization(opts: VerifyOptions) -> Iterator[TheoremVerdict]:
    for a in _values(opts.a, range(1, 5), range(1, 4), opts):
        for i in range(a + 1):
            yield theorems.check_realization(a, i, opts.budget)


def _run_cycle_identity(opts: VerifyOptions) -> Iterator[TheoremVerdict]:
    for n in _values(opts.n, range(3, 21), range(3, 13), opts):
        yield theorems.check_cycle_identity(n, opts.budget)


def _run_identity_corollary(opts: VerifyOptions) -> Iterator[TheoremVerdict]:
    for n in _values(opts.n, range(3, 21), range(3, 13), opts):
        yield theorems.check_identity_corollary(n, opts.budget)


def _run_ex2(opts: VerifyOptions) -> Iterator[TheoremVerdict]:
    for k in _values(opts.k, range(1, 6), range(1, 4), opts):
        yield theorems.check_ex2(k, opts.budget)


def _tildes(opts: VerifyOptions, keep: Callable[[ThreeTranslate], bool]) -> List[ThreeTranslate]:
    if opts.tilde is not None:
        if not keep(opts.tilde):
            raise PreconditionError(f"tilde {opts.tilde} is outside this statement's hypothesis")
        return [opts.tilde]
    return [t for t in all_three_translates() if keep(t)]


def _run_tt_perm(opts: VerifyOptions) -> Iterator[TheoremVerdict]:
    for k in _values(opts.k, (3, 4, 5), (3, 4), opts):
        for t in _tildes(opts, lambda t: t.is_permutation):
            yield theorems.check_three_translate_perm(t, k, opts.budget)


def _run_tt_nonperm(opts: VerifyOptions) -> Iterator[TheoremVerdict]:
    for k in _values(opts.k, (3, 4), (3,), opts):
        for t in _tildes(opts, lambda t: not t.is_permutation):
            yield theorems.check_three_translate_nonperm(t, k, opts.budget)


def _run_tt_classes(opts: VerifyOptions) -> Iterator[TheoremVerdict]:
    for k in _values(opts.k, (3, 4), (3,), opts):
        yield theorems.check_translate_classes(k)


def _run_tt_remark(opts: VerifyOptions) -> Iterator[TheoremVerdict]:
    variants = [ThreeTranslate(t) for t in ((2, 3, 1), (3, 1, 2), (3, 2, 1))]
    if opts.tilde is not None:
        variants = [opts.tilde]
    for k in _values(opts.k, (1, 2), (1,), opts):
        for t in variants:
            yield theorems.check_remark_translate_bounds(t, k, opts.budget)


def _increasing_sequences(length: int, top: int) -> Iterator[Tuple[int, ...]]:
    for rest in combinations(range(2, top + 1), length - 1):
        yield (1,) + rest


def _satisfies_residue_hypothesis(values: Sequence[int]) -> bool:
    return all(
        (values[j] - values[i]) % 3 == 1
        for i, j in combinations(range(len(values)), 2)
        if (j - i) % 3 == 1
    )


def _run_lemma_ui(opts: VerifyOptions) -> Iterator[TheoremVerdict]:
    top = 10 if opts.quick else 14
    for length in _values(opts.n, range(2, 7), range(2, 5), opts):
        tested = failed = 0
        first_bad = ""
        for values in _increasing_sequences(length, top):
            if not _satisfies_residue_hypothesis(values):
                continue
            verdict = theorems.check_lemma_ui(values)
            tested += 1
            if opts.per_instance:
                yield verdict
            if not verdict.passed:
                failed += 1
                first_bad = first_bad or verdict.instance
        yield TheoremVerdict(
            "lemma-ui", f"length {length} values <= {top} ({tested} sequences)", None, None,
            tested > 0 and failed == 0, None, "all",
            f"{tested - failed}/{tested} passed" + (f", first counterexample {first_bad}" if first_bad else ""),
        )


def _run_p5(opts: VerifyOptions) -> Iterator[TheoremVerdict]:
    yield theorems.check_p5_remark(opts.budget)


def _run_reference_sets(opts: VerifyOptions) -> Iterator[TheoremVerdict]:
    for w in reference_translate_witnesses():
        f = w.functigraph.map
        yield TheoremVerdict(
            "tt-literal", theorems.cycle_instance(f), w.claimed_size, len(w.vertices), True, w.vertices,
            "=", "reference set dominates", w.functigraph.base_order,
        )


_ENTRIES = (
    RegistryEntry("bounds", "γ(G) ≤ γ(C(G,f)) ≤ 2γ(G) on cycles",
                  _enumerated("bounds", [(n, "all", 0) for n in range(3, 7)], [(n, "all", 0) for n in range(3, 6)])),
    RegistryEntry("realization", "star chains realize every value 2a−i", _run_realization),
    RegistryEntry("gen", "six-condition witness exists iff γ(C(G,f)) = γ(G)",
                  _enumerated("gen", [(n, "all", 0) for n in range(3, 7)], [(n, "all", 0) for n in range(3, 6)])),
    RegistryEntry("lb-cycle", "cycle lower-bound characterization",
                  _enumerated("lb-cycle", [(n, "all", 0) for n in range(3, 7)], [(n, "all", 0) for n in range(3, 6)])),
    RegistryEntry("c3", "C(C_3, f) doubles iff f is not constant", _enumerated("c3", [(3, "all", 0)], [(3, "all", 0)])),
    RegistryEntry("cn-id", "closed form of γ(C(C_n, id))", _run_cycle_identity),
    RegistryEntry("cn-id-cor", "when the prism meets either bound", _run_identity_corollary),
    RegistryEntry("c4-perm", "permutations of C_4: γ = 2 iff prism",
                  _enumerated("c4-perm", [(4, "permutations", 0)], [(4, "permutations", 0)])),
    RegistryEntry("cor-perm", "no permutation reaches γ(C_n) for n = 3 or n >= 5",
                  _enumerated("cor-perm", [(n, "permutations", 0) for n in (3, 5, 6, 7)],
                              [(n, "permutations", 0) for n in (3, 5)])),
    RegistryEntry("mod1", "2k+1 set on C(C_{3k+1}, f)",
                  _enumerated("mod1", [(4, "all", 0), (7, "all", 0), (10, "sample", 1000)],
                              [(4, "all", 0), (7, "sample", 1000)])),
    RegistryEntry("c5-exhaustive", "every map on C_5 stays below 4",
                  _enumerated("c5-exhaustive", [(5, "all", 0)], [(5, "all", 0)])),
    RegistryEntry("c5-case", "case-by-case sets of size 3 on C_5",
                  _enumerated("c5-case", [(5, "all", 0)], [(5, "all", 0)])),
    RegistryEntry("3k2-bound", "γ(C(C_{3k+2}, f)) < 2γ(C_{3k+2}) by solver",
                  _enumerated("3k2-bound", [(5, "all", 0), (8, "permutations", 0)],
                              [(5, "all", 0), (8, "sample", 500)])),
    RegistryEntry("3k2-nonperm", "2k+1 set for non-permutations of C_{3k+2}",
                  _enumerated("3k2-nonperm", [(5, "all", 0), (8, "sample", 100_000), (11, "sample", 1000)],
                              [(5, "all", 0), (8, "sample", 1000)])),
    RegistryEntry("3k2-distance", "2k+1 set from a distance-breaking pair",
                  _enumerated("3k2-distance", [(n, "sample", 1000) for n in (5, 8, 11)],
                              [(n, "sample", 200) for n in (5, 8)])),
    RegistryEntry("3k2-perm-structure", "distance-preserving permutations give the prism",
                  _enumerated("3k2-perm-structure", [(5, "permutations", 0), (8, "permutations", 0)],
                              [(5, "permutations", 0)])),
    RegistryEntry("consecutive5", "aligned five-vertex window gives 2k+1",
                  _enumerated("consecutive5", [(n, "sample", 1000) for n in (5, 8, 11)],
                              [(n, "sample", 200) for n in (5, 8)])),
    RegistryEntry("final-3k2", "every map on C_{3k+2} stays below 2γ",
                  _enumerated("final-3k2", [(5, "all", 0), (8, "permutations", 0), (11, "sample", 1000)],
                              [(5, "all", 0), (8, "sample", 500)])),
    RegistryEntry("lemma-ui", "residue-preserving increasing sequences fix residues", _run_lemma_ui),
    RegistryEntry("tt-perm", "three-translate permutations double iff (2,1,3) or (1,3,2)", _run_tt_perm),
    RegistryEntry("tt-nonperm", "non-permutation three-translates double iff in three classes", _run_tt_nonperm),
    RegistryEntry("tt-classes", "isomorphism classes of non-permutation three-translates", _run_tt_classes),
    RegistryEntry("tt-remark", "7k and 5k bounds for rotating three-translates", _run_tt_remark),
    RegistryEntry("tt-literal", "reference three-translate sets dominate", _run_reference_sets),
    RegistryEntry("max-degree", "2k−1 set when Δ ≥ k+5",
                  _enumerated("max-degree", [(n, "sample", 1000) for n in (9, 12)], [(9, "sample", 200)])),
    RegistryEntry("avg-degree", "2k−1 set when some V_i has average degree above 4",
                  _enumerated("avg-degree", [(n, "sample", 1000) for n in (9, 12)], [(9, "sample", 200)])),
    RegistryEntry("ex2", "sharpness map: γ = 2k with Δ = k+3", _run_ex2),
    RegistryEntry("p5-remark", "some map on P_5 doubles γ", _run_p5),
)

REGISTRY: Dict[str, RegistryEntry] = {entry.theorem_id: entry for entry in _ENTRIES}


def get_entry(theorem_id: str) -> RegistryEntry:
    try:
        return REGISTRY[theorem_id]
    except KeyError:
        raise InvalidParameterError(f"unknown theorem id {theorem_id!r}; known: {', '.join(REGISTRY)}")


def run_verify(theorem_id: str, opts: VerifyOptions) -> Iterator[TheoremVerdict]:
    _LOG.info("Verifying %s", theorem_id)
    yield from get_entry(theorem_id).run(opts)


def acceptance_suite(opts: VerifyOptions) -> Iterator[TheoremVerdict]:
    """Every registry entry at its default ranges, in registry order."""
    base = replace(opts, n=None, k=None, a=None, mode=None, count=None, tilde=None, per_instance=False)
    for theorem_id in REGISTRY:
        yield from run_verify(theorem_id, base)
