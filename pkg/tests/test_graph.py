import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gerbe.errors import BoundExceededError, ParseError
from gerbe.graph import (
    Graph,
    Permutation,
    SignMatrix,
    conjugate_matrix,
    epsilon_matrix,
    format_graph,
    graph_automorphisms,
    graph_from_sign_matrix,
    parse_graph,
)

TRIANGLE = "3\n1 2\n2 3\n1 3"
SQUARE = "4\n1 2\n2 3\n3 4\n1 4"


def random_graph(rng, n):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
    return Graph.from_edges(n, edges)


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


@st.composite
def permutations(draw, n):
    images = list(range(n))
    rnd = draw(st.randoms(use_true_random=False))
    rnd.shuffle(images)
    return Permutation(tuple(images))


class TestParse:
    def test_triangle(self):
        g = parse_graph(TRIANGLE)
        assert g.n == 3
        assert g.edges == frozenset({(0, 1), (1, 2), (0, 2)})

    def test_square_with_comments(self):
        g = parse_graph("# the 4-cycle\n" + SQUARE + "\n# trailing\n")
        assert g.n == 4
        assert g.sorted_edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]

    def test_self_loop_rejected(self):
        with pytest.raises(ParseError, match="self-loop"):
            parse_graph("3\n1 1")

    def test_out_of_range(self):
        with pytest.raises(ParseError, match="out of range"):
            parse_graph("3\n1 4")

    def test_duplicate_edge(self):
        with pytest.raises(ParseError, match="duplicate"):
            parse_graph("3\n1 2\n2 1")

    def test_non_integer(self):
        with pytest.raises(ParseError):
            parse_graph("3\n1 x")

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_graph("# nothing\n")

    def test_roundtrip(self):
        g = parse_graph(SQUARE)
        assert parse_graph(format_graph(g)) == g


class TestEpsilonMatrix:
    def test_triangle_all_minus_off_diagonal(self):
        m = epsilon_matrix(parse_graph(TRIANGLE))
        expected = np.array([[1, -1, -1], [-1, 1, -1], [-1, -1, 1]])
        assert np.array_equal(m.entries, expected)

    def test_edgeless_all_plus(self):
        m = epsilon_matrix(Graph(3, frozenset()))
        assert np.array_equal(m.entries, np.ones((3, 3), dtype=int))

    def test_square_matches_known_matrix(self):
        m = epsilon_matrix(parse_graph(SQUARE))
        expected = np.array([
            [1, -1, 1, -1],
            [-1, 1, -1, 1],
            [1, -1, 1, -1],
            [-1, 1, -1, 1],
        ])
        assert np.array_equal(m.entries, expected)

    @given(graphs())
    def test_bijection_with_graphs(self, g):
        assert graph_from_sign_matrix(epsilon_matrix(g)) == g


class TestConjugation:
    def test_identity(self):
        m = epsilon_matrix(parse_graph(SQUARE))
        assert conjugate_matrix(Permutation.identity(4), m) == m

    def test_automorphism_fixes_matrix(self):
        m = epsilon_matrix(parse_graph(SQUARE))
        rotation = Permutation((1, 2, 3, 0))
        assert conjugate_matrix(rotation, m) == m

    def test_relabeling_oracle(self):
        # independent oracle: relabel the edge set, rebuild the matrix
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randint(2, 7)
            g = random_graph(rng, n)
            images = list(range(n))
            rng.shuffle(images)
            s = Permutation(tuple(images))
            relabeled = Graph.from_edges(n, [(s(i), s(j)) for i, j in g.edges])
            assert conjugate_matrix(s, epsilon_matrix(g)) == epsilon_matrix(relabeled)

    def test_size_mismatch(self):
        with pytest.raises(ValueError, match="mismatch"):
            conjugate_matrix(Permutation.identity(3), epsilon_matrix(parse_graph(SQUARE)))

    @given(st.data())
    @settings(max_examples=60)
    def test_action_property(self, data):
        g = data.draw(graphs(max_n=6))
        s = data.draw(permutations(g.n))
        t = data.draw(permutations(g.n))
        m = epsilon_matrix(g)
        assert conjugate_matrix(s.compose(t), m) == conjugate_matrix(s, conjugate_matrix(t, m))


class TestAutomorphisms:
    def test_square_dihedral(self):
        assert len(graph_automorphisms(parse_graph(SQUARE))) == 8

    def test_pentagon_dihedral(self):
        g = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
        assert len(graph_automorphisms(g)) == 10

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_edgeless_full_symmetric(self, n):
        assert len(graph_automorphisms(Graph(n, frozenset()))) == math.factorial(n)

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            graph_automorphisms(Graph(11, frozenset()), max_n=10)

    def test_env_bound(self, monkeypatch):
        monkeypatch.setenv("GERBE_MAX_N", "4")
        with pytest.raises(BoundExceededError):
            graph_automorphisms(Graph(5, frozenset()))

    @given(graphs(max_n=5))
    @settings(max_examples=40)
    def test_group_properties(self, g):
        auts = graph_automorphisms(g)
        m = epsilon_matrix(g)
        images = {a.images for a in auts}
        assert tuple(range(g.n)) in images
        for a in auts:
            assert conjugate_matrix(a, m) == m
            assert a.inverse().images in images
        for a in auts[:4]:
            for b in auts[:4]:
                assert a.compose(b).images in images


class TestSignMatrix:
    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError, match="symmetric"):
            SignMatrix([[1, 1], [-1, 1]])

    def test_rejects_bad_diagonal(self):
        with pytest.raises(ValueError, match="diagonal"):
            SignMatrix([[-1, 1], [1, 1]])

    def test_rejects_non_sign_entries(self):
        with pytest.raises(ValueError):
            SignMatrix([[1, 0], [0, 1]])

    def test_linked_masks(self):
        m = epsilon_matrix(parse_graph(TRIANGLE))
        assert m.linked_masks() == [0b110, 0b101, 0b011]
