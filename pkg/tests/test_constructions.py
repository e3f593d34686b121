"""
Tests for the explicit dominating-set constructions.

Every witness is checked twice: by ``certify`` inside the builder and here
against networkx's dominating-set predicate.
"""

import unittest
from itertools import product

import networkx as nx
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from functidom.constructions import (
    avg_degree_dominating_set,
    certify,
    consecutive5_dominating_set,
    distance_3k2_dominating_set,
    ex1_case_witness,
    ex2_map,
    final_3k2_dispatch,
    find_consecutive_window,
    identity_dominating_set,
    lift_translate_witness,
    max_degree_dominating_set,
    mod1_dominating_set,
    nonperm_3k2_dominating_set,
    reference_translate_witnesses,
    realization_instance,
    residue_class,
)
from functidom.domsolve import domination_number
from functidom.errors import ConstructionError, InvalidParameterError, PreconditionError
from functidom.functigraph import (
    ThreeTranslate,
    VertexMap,
    constant_map,
    cycle_functigraph,
    distance_violation,
    identity_map,
    is_permutation,
    three_translate_expand,
)
from functidom.theorems import gamma_cycle_identity


def to_networkx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.order))
    nxg.add_edges_from(g.edges())
    return nxg


def assert_dominates(test, witness):
    graph = witness.functigraph.graph
    test.assertTrue(nx.is_dominating_set(to_networkx(graph), set(witness.vertices)))
    test.assertEqual(len(witness.vertices), witness.claimed_size)


def maps_on(n):
    return st.lists(st.integers(0, n - 1), min_size=n, max_size=n).map(lambda t: VertexMap(tuple(t)))


@st.composite
def hub_maps(draw, k):
    """Maps on C_{3k} whose busiest codomain vertex has degree at least k+5."""
    n = 3 * k
    hub = draw(st.integers(0, n - 1))
    crowd = draw(st.lists(st.integers(0, n - 1), min_size=k + 3, max_size=n, unique=True))
    targets = [draw(st.integers(0, n - 1)) for _ in range(n)]
    for i in crowd:
        targets[i] = hub
    return VertexMap(tuple(targets))


@st.composite
def heavy_class_maps(draw, k):
    """Maps on C_{3k} sending more than 2k vertices into one residue class; returns (map, class)."""
    n = 3 * k
    i = draw(st.integers(1, 3))
    members = list(range(i - 1, n, 3))
    heavy = draw(st.lists(st.integers(0, n - 1), min_size=2 * k + 1, max_size=n, unique=True))
    targets = [draw(st.integers(0, n - 1)) for _ in range(n)]
    for x in heavy:
        targets[x] = draw(st.sampled_from(members))
    return VertexMap(tuple(targets)), i


class TestCertify(unittest.TestCase):

    def test_rejects_non_dominating(self):
        fg = cycle_functigraph(identity_map(5))
        with self.assertRaises(ConstructionError):
            certify(fg, fg.vertex_set([0], [2]), "probe")

    def test_rejects_wrong_size(self):
        fg = cycle_functigraph(VertexMap((0, 0, 0)))
        with self.assertRaises(ConstructionError):
            certify(fg, fg.vertex_set([0], [0]), "probe", claimed_size=1)
        with self.assertRaises(ConstructionError):
            certify(fg, fg.vertex_set([0], [0]), "probe", bound=1)

    def test_accepts(self):
        fg = cycle_functigraph(VertexMap((0, 0, 0)))
        w = certify(fg, fg.vertex_set(codomain=[0]), "probe", claimed_size=1)
        self.assertEqual(w.labels(), "{v1'}")
        self.assertEqual(w.codomain_part.indices(), (0,))
        self.assertFalse(w.domain_part)


class TestRealization(unittest.TestCase):

    def test_sizes(self):
        for a in range(1, 4):
            for i in range(a + 1):
                with self.subTest(a=a, i=i):
                    _, f, w = realization_instance(a, i)
                    self.assertEqual(len(w.vertices), 2 * a - i)
                    assert_dominates(self, w)

    def test_solver_agrees(self):
        for a, i in ((2, 0), (2, 1), (2, 2), (3, 1)):
            with self.subTest(a=a, i=i):
                w = realization_instance(a, i)[2]
                self.assertEqual(domination_number(w.functigraph.graph), 2 * a - i)

    def test_bad_parameters(self):
        with self.assertRaises(InvalidParameterError):
            realization_instance(0, 0)
        with self.assertRaises(InvalidParameterError):
            realization_instance(2, 3)


class TestIdentity(unittest.TestCase):

    def test_c8_set(self):
        w = identity_dominating_set(8)
        self.assertEqual(w.labels(), "{u1, u5, v3', v7'}")

    def test_closed_form_sizes(self):
        for n in range(3, 21):
            with self.subTest(n=n):
                w = identity_dominating_set(n)
                self.assertEqual(len(w.vertices), gamma_cycle_identity(n))
                assert_dominates(self, w)

    def test_too_small(self):
        with self.assertRaises(InvalidParameterError):
            identity_dominating_set(2)


class TestMod1(unittest.TestCase):

    def test_all_maps_on_c4(self):
        for targets in product(range(4), repeat=4):
            w = mod1_dominating_set(VertexMap(targets))
            self.assertEqual(len(w.vertices), 3)

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from([7, 10, 13]).flatmap(maps_on))
    def test_random_maps(self, f):
        w = mod1_dominating_set(f)
        self.assertEqual(len(w.vertices), 2 * (f.domain_size // 3) + 1)
        assert_dominates(self, w)

    def test_wrong_residue(self):
        with self.assertRaises(InvalidParameterError):
            mod1_dominating_set(identity_map(5))


class TestThreeKPlusTwo(unittest.TestCase):
    """Constructions on C_{3k+2}."""

    @settings(max_examples=80, deadline=None)
    @given(st.sampled_from([5, 8, 11]).flatmap(maps_on))
    def test_nonperm(self, f):
        assume(not is_permutation(f))
        w = nonperm_3k2_dominating_set(f)
        self.assertEqual(len(w.vertices), 2 * (f.domain_size // 3) + 1)
        assert_dominates(self, w)

    def test_nonperm_rejects_permutation(self):
        with self.assertRaises(PreconditionError):
            nonperm_3k2_dominating_set(identity_map(8))

    @settings(max_examples=80, deadline=None)
    @given(st.sampled_from([5, 8, 11]).flatmap(maps_on))
    def test_distance(self, f):
        pair = distance_violation(f)
        assume(pair is not None)
        w = distance_3k2_dominating_set(f, *pair)
        self.assertLessEqual(len(w.vertices), 2 * (f.domain_size // 3) + 1)
        assert_dominates(self, w)

    def test_distance_adjacent_pair(self):
        # adjacent pair: the first part of D1 is empty
        w = distance_3k2_dominating_set(constant_map(8, 0), 0, 1)
        self.assertEqual(w.labels(), "{u4, u7, v1', v3', v6'}")
        assert_dominates(self, w)

    def test_distance_preconditions(self):
        f = identity_map(8)
        with self.assertRaises(PreconditionError):
            distance_3k2_dominating_set(f, 0, 1)
        with self.assertRaises(PreconditionError):
            distance_3k2_dominating_set(f, 0, 2)

    def test_window(self):
        self.assertEqual(find_consecutive_window(identity_map(8)), (0, 0))
        self.assertIsNone(find_consecutive_window(identity_map(4)))

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from([8, 11]).flatmap(lambda n: st.tuples(maps_on(n), st.lists(st.integers(0, 4), min_size=5, max_size=5), st.integers(0, n - 1))))
    def test_consecutive5(self, data):
        f, window, t = data
        n = f.domain_size
        targets = list(f.targets)
        for p in range(5):
            targets[p] = (t + window[p]) % n
        g = VertexMap(tuple(targets))
        w = consecutive5_dominating_set(g)
        self.assertLessEqual(len(w.vertices), 2 * (n // 3) + 1)
        assert_dominates(self, w)

    def test_final_dispatch_all_c5(self):
        for targets in product(range(5), repeat=5):
            w = final_3k2_dispatch(VertexMap(targets))
            self.assertLessEqual(len(w.vertices), 3)
            self.assertTrue(w.theorem_id.startswith("final-3k2/"))

    @settings(max_examples=60, deadline=None)
    @given(st.permutations(range(8)))
    def test_final_dispatch_permutations_c8(self, perm):
        w = final_3k2_dispatch(VertexMap(tuple(perm)))
        self.assertLessEqual(len(w.vertices), 5)
        assert_dominates(self, w)

    def test_final_dispatch_identity(self):
        w = final_3k2_dispatch(identity_map(8))
        self.assertEqual(w.theorem_id, "final-3k2/cn-id")


class TestThreeK(unittest.TestCase):
    """Constructions on C_{3k}."""

    def test_constant_map_c9(self):
        w = max_degree_dominating_set(constant_map(9, 0))
        self.assertEqual(len(w.vertices), 5)
        assert_dominates(self, w)

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from([3, 4]).flatmap(hub_maps))
    def test_max_degree(self, f):
        k = f.domain_size // 3
        w = max_degree_dominating_set(f)
        self.assertEqual(len(w.vertices), 2 * k - 1)
        assert_dominates(self, w)

    def test_max_degree_precondition(self):
        with self.assertRaises(PreconditionError):
            max_degree_dominating_set(identity_map(9))

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from([3, 4]).flatmap(heavy_class_maps))
    def test_avg_degree(self, data):
        f, i = data
        k = f.domain_size // 3
        w = avg_degree_dominating_set(f, i)
        self.assertLessEqual(len(w.vertices), 2 * k - 1)
        assert_dominates(self, w)

    def test_avg_degree_precondition(self):
        with self.assertRaises(PreconditionError):
            avg_degree_dominating_set(identity_map(9), 1)

    def test_residue_class(self):
        self.assertEqual(residue_class(3, 2).indices(), (1, 4, 7))
        with self.assertRaises(InvalidParameterError):
            residue_class(3, 4)

    def test_ex2_map(self):
        self.assertEqual(ex2_map(2).targets, (0, 2, 5, 3, 5, 5))
        for k in (1, 2, 3):
            with self.subTest(k=k):
                self.assertEqual(domination_number(cycle_functigraph(ex2_map(k)).graph), 2 * k)


class TestC5Cases(unittest.TestCase):

    def test_all_maps(self):
        for targets in product(range(5), repeat=5):
            w = ex1_case_witness(VertexMap(targets))
            self.assertLessEqual(len(w.vertices), 3)

    def test_wrong_size(self):
        with self.assertRaises(InvalidParameterError):
            ex1_case_witness(identity_map(6))


class TestThreeTranslateWitnesses(unittest.TestCase):

    def test_reference_sets(self):
        witnesses = reference_translate_witnesses()
        self.assertEqual([len(w.vertices) for w in witnesses], [7, 5, 5, 5])
        for w in witnesses:
            assert_dominates(self, w)

    def test_lift(self):
        t = ThreeTranslate((3, 2, 1))
        base = reference_translate_witnesses()[1]
        lifted = lift_translate_witness(t, base, 6)
        self.assertEqual(lifted.functigraph.map, three_translate_expand(t, 6))
        self.assertEqual(len(lifted.vertices), 10)
        assert_dominates(self, lifted)

    def test_lift_rejects_mismatch(self):
        base = reference_translate_witnesses()[1]
        with self.assertRaises(InvalidParameterError):
            lift_translate_witness(ThreeTranslate((3, 2, 1)), base, 4)
        with self.assertRaises(InvalidParameterError):
            lift_translate_witness(ThreeTranslate((2, 1, 3)), base, 6)


if __name__ == "__main__":
    unittest.main()
