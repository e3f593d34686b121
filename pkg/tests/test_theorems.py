"""
Tests for the theorem checkers and closed forms.
"""

import os
import unittest
from itertools import permutations, product

from functidom.errors import InvalidParameterError, PreconditionError
from functidom.functigraph import (
    ThreeTranslate,
    VertexMap,
    build_functigraph,
    constant_map,
    cycle_functigraph,
    from_permutation,
    identity_map,
)
from functidom.graphcore import VertexSet, build_path, build_star_chain
from functidom.theorems import (
    GenWitness,
    KNOWN_NONPERM_CLASSES,
    check_3k2_permutation_structure,
    check_bounds,
    check_c3_constant,
    check_c4_permutation,
    check_c5_exhaustive,
    check_cor_permutation,
    check_cycle_identity,
    check_ex2,
    check_gen_iff,
    check_identity_corollary,
    check_lb_cycle,
    check_lemma_ui,
    check_mod1,
    check_p5_remark,
    check_realization,
    check_remark_translate_bounds,
    check_three_translate_nonperm,
    check_three_translate_perm,
    check_translate_classes,
    cycle_gamma,
    decide_lb_cycle,
    find_gen_witness,
    gamma_cycle_identity,
    nonperm_translate_classes,
    verify_gen_conditions,
)

SLOW = os.getenv("FUNCTIDOM_SLOW_TESTS") == "1"


class TestClosedForms(unittest.TestCase):

    def test_cycle_gamma(self):
        self.assertEqual([cycle_gamma(n) for n in range(3, 10)], [1, 2, 2, 2, 3, 3, 3])
        with self.assertRaises(InvalidParameterError):
            cycle_gamma(2)

    def test_identity_closed_form(self):
        self.assertEqual([gamma_cycle_identity(n) for n in range(3, 11)], [2, 2, 3, 4, 4, 4, 5, 6])

    def test_identity_matches_solver(self):
        for n in range(3, 21):
            with self.subTest(n=n):
                self.assertTrue(check_cycle_identity(n).passed)

    def test_identity_corollary(self):
        for n in range(3, 13):
            with self.subTest(n=n):
                self.assertTrue(check_identity_corollary(n).passed)


class TestBoundsAndGen(unittest.TestCase):
    """The general bounds and the six-condition characterization."""

    def test_bounds_all_c4_maps(self):
        for targets in product(range(4), repeat=4):
            self.assertTrue(check_bounds(cycle_functigraph(VertexMap(targets))).passed)

    def test_bounds_on_path(self):
        fg = build_functigraph(build_path(5), VertexMap((2, 2, 2, 2, 2)))
        verdict = check_bounds(fg)
        self.assertTrue(verdict.passed)

    def test_gen_iff_all_c4_maps(self):
        for targets in product(range(4), repeat=4):
            verdict = check_gen_iff(cycle_functigraph(VertexMap(targets)))
            self.assertTrue(verdict.passed, verdict)

    def test_gen_conditions_constant_c3(self):
        fg = cycle_functigraph(constant_map(3, 0))
        w = GenWitness(VertexSet.empty(3), VertexSet.of(3, [0]))
        self.assertTrue(verify_gen_conditions(fg, w).all_hold)

    def test_gen_conditions_report_each_failure(self):
        fg = cycle_functigraph(identity_map(3))
        w = GenWitness(VertexSet.of(3, [0]), VertexSet.of(3, [0]))
        conditions = verify_gen_conditions(fg, w)
        self.assertFalse(conditions.d2_avoids_image)
        self.assertFalse(conditions.d1_avoids_preimage)
        self.assertTrue(conditions.d1_injective)

    def test_gen_witness_absent_for_identity_c3(self):
        self.assertIsNone(find_gen_witness(cycle_functigraph(identity_map(3))))

    def test_gen_witness_universe_checked(self):
        fg = cycle_functigraph(identity_map(4))
        with self.assertRaises(InvalidParameterError):
            verify_gen_conditions(fg, GenWitness(VertexSet.empty(3), VertexSet.empty(4)))


class TestCycleLowerBound(unittest.TestCase):

    def test_constant_map_condition_one(self):
        # v1' plus one of v3', v4' dominates
        decision = decide_lb_cycle(constant_map(5, 0))
        self.assertEqual(decision.condition, 1)
        verdict = check_lb_cycle(constant_map(5, 0))
        self.assertTrue(verdict.passed)
        self.assertEqual(verdict.observed, 2)

    def test_identity_has_no_condition(self):
        self.assertIsNone(decide_lb_cycle(identity_map(5)).condition)

    def test_all_maps_c4(self):
        for targets in product(range(4), repeat=4):
            verdict = check_lb_cycle(VertexMap(targets))
            self.assertTrue(verdict.passed, verdict)

    def test_all_maps_c6(self):
        if not SLOW:
            self.skipTest("set FUNCTIDOM_SLOW_TESTS=1")
        for targets in product(range(6), repeat=6):
            verdict = check_lb_cycle(VertexMap(targets))
            self.assertTrue(verdict.passed, verdict)


class TestSmallCycles(unittest.TestCase):

    def test_c3(self):
        for targets in product(range(3), repeat=3):
            verdict = check_c3_constant(VertexMap(targets))
            self.assertTrue(verdict.passed, verdict)
        self.assertEqual(check_c3_constant(constant_map(3, 1)).observed, 1)

    def test_c4_permutations(self):
        for perm in permutations(range(4)):
            verdict = check_c4_permutation(from_permutation(perm))
            self.assertTrue(verdict.passed, verdict)

    def test_c4_rejects_non_permutation(self):
        with self.assertRaises(PreconditionError):
            check_c4_permutation(constant_map(4, 0))

    def test_cor_permutation(self):
        for n in (3, 5, 6):
            for perm in permutations(range(n)):
                with self.subTest(n=n, perm=perm):
                    self.assertTrue(check_cor_permutation(from_permutation(perm)).passed)
        with self.assertRaises(PreconditionError):
            check_cor_permutation(identity_map(4))

    def test_c5_sample(self):
        for targets in ((0, 0, 0, 0, 0), (0, 1, 2, 3, 4), (1, 0, 3, 2, 4), (0, 0, 2, 2, 4)):
            verdict = check_c5_exhaustive(VertexMap(targets))
            self.assertTrue(verdict.passed, verdict)

    def test_c5_all(self):
        if not SLOW:
            self.skipTest("set FUNCTIDOM_SLOW_TESTS=1")
        for targets in product(range(5), repeat=5):
            verdict = check_c5_exhaustive(VertexMap(targets))
            self.assertTrue(verdict.passed, verdict)


class TestConstructionCheckers(unittest.TestCase):

    def test_realization(self):
        for a in range(1, 4):
            for i in range(a + 1):
                with self.subTest(a=a, i=i):
                    verdict = check_realization(a, i)
                    self.assertTrue(verdict.passed)
                    self.assertEqual(verdict.observed, 2 * a - i)
                    self.assertEqual(verdict.base_order, build_star_chain(a).order)

    def test_mod1(self):
        verdict = check_mod1(VertexMap((1, 1, 1, 1, 1, 1, 1)))
        self.assertTrue(verdict.passed)
        self.assertEqual(verdict.claim, 5)

    def test_ex2(self):
        for k in (1, 2, 3):
            with self.subTest(k=k):
                self.assertTrue(check_ex2(k).passed)

    def test_perm_structure(self):
        verdict = check_3k2_permutation_structure(identity_map(8))
        self.assertTrue(verdict.passed)
        with self.assertRaises(PreconditionError):
            check_3k2_permutation_structure(identity_map(6))


class TestLemmaResidues(unittest.TestCase):

    def test_identity_sequence(self):
        self.assertTrue(check_lemma_ui([1, 2, 3, 4]).passed)

    def test_shifted_sequence(self):
        self.assertTrue(check_lemma_ui([1, 5, 9]).passed)

    def test_hypothesis_enforced(self):
        for values in ([2, 3], [1, 1], [1, 3]):
            with self.subTest(values=values):
                with self.assertRaises(PreconditionError):
                    check_lemma_ui(values)


class TestThreeTranslates(unittest.TestCase):

    def test_permutations_k3(self):
        for tilde in permutations((1, 2, 3)):
            with self.subTest(tilde=tilde):
                self.assertTrue(check_three_translate_perm(ThreeTranslate(tilde), 3).passed)

    def test_permutations_k4(self):
        for tilde in permutations((1, 2, 3)):
            with self.subTest(tilde=tilde):
                verdict = check_three_translate_perm(ThreeTranslate(tilde), 4)
                self.assertTrue(verdict.passed, verdict)

    def test_example_value(self):
        verdict = check_three_translate_perm(ThreeTranslate((2, 1, 3)), 4)
        self.assertEqual(verdict.observed, 8)

    def test_perm_rejects_small_k(self):
        with self.assertRaises(PreconditionError):
            check_three_translate_perm(ThreeTranslate((2, 1, 3)), 2)
        with self.assertRaises(PreconditionError):
            check_three_translate_perm(ThreeTranslate((1, 1, 2)), 3)

    def test_nonpermutations_k3(self):
        for tilde in product((1, 2, 3), repeat=3):
            t = ThreeTranslate(tilde)
            if t.is_permutation:
                continue
            with self.subTest(tilde=tilde):
                verdict = check_three_translate_nonperm(t, 3)
                self.assertTrue(verdict.passed, verdict)

    def test_classes_match_known_list(self):
        self.assertEqual(sum(len(c) for c in KNOWN_NONPERM_CLASSES), 18)
        self.assertEqual(len(nonperm_translate_classes(3)), 5)
        self.assertTrue(check_translate_classes(3).passed)

    def test_remark_bounds(self):
        for tilde in ((2, 3, 1), (3, 1, 2), (3, 2, 1)):
            for k in (1, 2):
                with self.subTest(tilde=tilde, k=k):
                    self.assertTrue(check_remark_translate_bounds(ThreeTranslate(tilde), k).passed)
        with self.assertRaises(PreconditionError):
            check_remark_translate_bounds(ThreeTranslate((2, 1, 3)), 1)


class TestPathRemark(unittest.TestCase):

    def test_some_map_doubles(self):
        verdict = check_p5_remark()
        self.assertTrue(verdict.passed)
        self.assertEqual(verdict.observed, 4)


if __name__ == "__main__":
    unittest.main()
