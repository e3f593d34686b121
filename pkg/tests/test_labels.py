"""
Tests for the u_i / v_i' label convention.
"""

import unittest

from hypothesis import given
from hypothesis import strategies as st

from functidom.errors import InvalidParameterError, ParseError
from functidom.labels import format_labels, parse_vertex_label, vertex_label, vertex_labels


class TestLabels(unittest.TestCase):

    def test_functigraph_labels(self):
        self.assertEqual(vertex_label(0, 5), "u1")
        self.assertEqual(vertex_label(4, 5), "u5")
        self.assertEqual(vertex_label(5, 5), "v1'")
        self.assertEqual(vertex_label(9, 5), "v5'")

    def test_plain_labels(self):
        self.assertEqual(vertex_label(0), "1")
        self.assertEqual(parse_vertex_label("12"), 11)

    def test_format_sorts_domain_first(self):
        self.assertEqual(format_labels([7, 0, 3], 5), "{u1, u4, v3'}")
        self.assertEqual(vertex_labels([], 5), [])
        self.assertEqual(format_labels([], 5), "{}")

    def test_parse(self):
        self.assertEqual(parse_vertex_label("u3", 5), 2)
        self.assertEqual(parse_vertex_label("v3'", 5), 7)

    def test_parse_errors(self):
        for text in ("u0", "u6", "u2'", "w1", "v", "v3"):
            with self.subTest(text=text):
                with self.assertRaises(ParseError):
                    parse_vertex_label(text, 5)
        with self.assertRaises(ParseError):
            parse_vertex_label("0")

    def test_out_of_range(self):
        with self.assertRaises(InvalidParameterError):
            vertex_label(10, 5)
        with self.assertRaises(InvalidParameterError):
            vertex_label(-1)

    @given(st.integers(1, 40).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2 * n - 1))))
    def test_round_trip(self, data):
        n, index = data
        self.assertEqual(parse_vertex_label(vertex_label(index, n), n), index)


if __name__ == "__main__":
    unittest.main()
