"""
Tests for graph representation, vertex sets and the text format.
"""

import os
import tempfile
import unittest

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from functidom.errors import InvalidParameterError, ParseError
from functidom.graphcore import (
    Graph,
    VertexSet,
    build_cycle,
    build_path,
    build_star_chain,
    closed_neighborhood,
    cycle_distance,
    degree,
    induced_subgraph,
    is_dominating,
    max_degree,
    parse_graph,
    permute_vertices,
    read_graph,
    star_center,
    write_graph,
)


def to_networkx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.order))
    nxg.add_edges_from(g.edges())
    return nxg


@st.composite
def small_graphs(draw, max_order=9):
    order = draw(st.integers(min_value=1, max_value=max_order))
    pairs = [(i, j) for i in range(order) for j in range(i + 1, order)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(order, chosen)


class TestVertexSet(unittest.TestCase):
    """Bit-vector set operations."""

    def test_of_and_membership(self):
        s = VertexSet.of(6, [0, 3, 5])
        self.assertIn(3, s)
        self.assertNotIn(1, s)
        self.assertNotIn(7, s)
        self.assertEqual(len(s), 3)
        self.assertEqual(list(s), [0, 3, 5])

    def test_set_algebra(self):
        a = VertexSet.of(5, [0, 1, 2])
        b = VertexSet.of(5, [2, 3])
        self.assertEqual((a | b).indices(), (0, 1, 2, 3))
        self.assertEqual((a & b).indices(), (2,))
        self.assertEqual((a - b).indices(), (0, 1))
        self.assertEqual(a.complement().indices(), (3, 4))
        self.assertTrue(VertexSet.of(5, [1]).issubset(a))
        self.assertTrue(a.isdisjoint(VertexSet.of(5, [4])))

    def test_empty_and_full(self):
        self.assertFalse(VertexSet.empty(4))
        self.assertEqual(len(VertexSet.full(4)), 4)

    def test_universe_mismatch_rejected(self):
        with self.assertRaises(InvalidParameterError):
            VertexSet.of(4, [1]) | VertexSet.of(5, [1])

    def test_out_of_range_rejected(self):
        with self.assertRaises(InvalidParameterError):
            VertexSet.of(3, [3])
        with self.assertRaises(InvalidParameterError):
            VertexSet(3, 1 << 3)
        with self.assertRaises(InvalidParameterError):
            VertexSet.of(3, []).add(-1)


class TestGraphFamilies(unittest.TestCase):
    """Cycles, paths and star chains."""

    def test_cycle(self):
        g = build_cycle(5)
        self.assertEqual(g.size, 5)
        self.assertTrue(all(degree(g, v) == 2 for v in range(5)))
        self.assertTrue(g.has_edge(4, 0))

    def test_cycle_too_small(self):
        with self.assertRaises(InvalidParameterError):
            build_cycle(2)

    def test_path(self):
        g = build_path(4)
        self.assertEqual(list(g.edges()), [(0, 1), (1, 2), (2, 3)])
        self.assertEqual(build_path(1).size, 0)

    def test_star_chain(self):
        g = build_star_chain(3)
        self.assertEqual(g.order, 15)
        self.assertEqual(g.size, 3 * 4 + 2)
        self.assertEqual(degree(g, star_center(2)), 6)
        self.assertEqual(degree(g, star_center(1)), 5)
        self.assertTrue(g.has_edge(star_center(1), star_center(2)))
        self.assertEqual(max_degree(g), 6)

    def test_graph_validation(self):
        with self.assertRaises(InvalidParameterError):
            Graph.from_edges(3, [(0, 0)])
        with self.assertRaises(InvalidParameterError):
            Graph.from_edges(3, [(0, 3)])
        with self.assertRaises(InvalidParameterError):
            Graph(2, (0b10, 0))


class TestDomination(unittest.TestCase):
    """Closed neighborhoods and the domination predicate."""

    def test_closed_neighborhood(self):
        self.assertEqual(closed_neighborhood(build_cycle(6), 0).indices(), (0, 1, 5))

    def test_cycle_dominating_sets(self):
        g = build_cycle(6)
        self.assertTrue(is_dominating(g, VertexSet.of(6, [0, 3])))
        self.assertFalse(is_dominating(g, VertexSet.of(6, [0, 1])))

    def test_universe_must_match(self):
        with self.assertRaises(InvalidParameterError):
            is_dominating(build_cycle(5), VertexSet.of(6, [0]))

    @settings(max_examples=60, deadline=None)
    @given(small_graphs(), st.data())
    def test_matches_networkx(self, g, data):
        members = data.draw(st.lists(st.integers(0, g.order - 1), unique=True))
        s = VertexSet.of(g.order, members)
        self.assertEqual(is_dominating(g, s), nx.is_dominating_set(to_networkx(g), set(members)))

    def test_cycle_distance(self):
        self.assertEqual(cycle_distance(8, 1, 7), 2)
        self.assertEqual(cycle_distance(8, 0, 4), 4)
        with self.assertRaises(InvalidParameterError):
            cycle_distance(5, 0, 5)


class TestSubgraphsAndRelabeling(unittest.TestCase):

    def test_induced_subgraph(self):
        g = build_cycle(6)
        sub, index_map = induced_subgraph(g, VertexSet.of(6, [0, 1, 2, 4]))
        self.assertEqual(index_map, (0, 1, 2, 4))
        self.assertEqual(sorted(sub.edges()), [(0, 1), (1, 2)])

    def test_induced_subgraph_empty_rejected(self):
        with self.assertRaises(InvalidParameterError):
            induced_subgraph(build_cycle(4), VertexSet.empty(4))

    @settings(max_examples=40, deadline=None)
    @given(small_graphs(), st.randoms(use_true_random=False))
    def test_permute_preserves_isomorphism_class(self, g, rnd):
        perm = list(range(g.order))
        rnd.shuffle(perm)
        h = permute_vertices(g, perm)
        self.assertTrue(nx.is_isomorphic(to_networkx(g), to_networkx(h)))
        for i, j in g.edges():
            self.assertTrue(h.has_edge(perm[i], perm[j]))


class TestGraphText(unittest.TestCase):
    """The ``n <order>`` / ``e <i> <j>`` format."""

    def test_parse(self):
        g = parse_graph("n 4\ne 0 1\n\ne 2 3\n")
        self.assertEqual(g.order, 4)
        self.assertEqual(sorted(g.edges()), [(0, 1), (2, 3)])

    def test_parse_errors(self):
        for text in ("", "e 0 1\n", "n 3\ne 0 0\n", "n 3\ne 0 1\ne 1 0\n", "n 3\ne 0 5\n", "n x\n", "n 3\nx 0 1\n"):
            with self.subTest(text=text):
                with self.assertRaises(ParseError):
                    parse_graph(text)

    def test_file_round_trip(self):
        g = build_star_chain(2)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "chain.txt")
            write_graph(g, path)
            self.assertEqual(read_graph(path), g)


if __name__ == "__main__":
    unittest.main()
