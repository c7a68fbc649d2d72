import itertools
import math
import random

import numpy as np
import pytest

from gerbe.autgroup import (
    SheafGroup,
    SignedPermutation,
    compose,
    enumerate_group,
    extend_signs,
    inverse,
    line_action,
    orbits_on_lines,
    realize_isometry,
)
from gerbe.errors import BoundExceededError
from gerbe.fixtures import PENTAGON, POINTED_HEXAGON, SQUARE, TRIANGLE
from gerbe.graph import Graph, Permutation, epsilon_matrix, graph_automorphisms
from gerbe.quadspace import Representation
from gerbe.sheaf import LinePartition


def random_graph(rng, n):
    return Graph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
    )


class TestCompose:
    def test_identity_neutral(self):
        grp = enumerate_group(epsilon_matrix(SQUARE.graph))
        ident = SignedPermutation.identity(4)
        for el in grp.elements:
            assert compose(ident, el) == el
            assert compose(el, ident) == el

    def test_central_involution(self):
        c = SignedPermutation.central(4)
        assert compose(c, c) == SignedPermutation.identity(4)

    def test_closure_and_inverse(self):
        grp = enumerate_group(epsilon_matrix(SQUARE.graph))
        members = set(grp.elements)
        ident = SignedPermutation.identity(4)
        for a in grp.elements:
            assert inverse(a) in members
            assert compose(a, inverse(a)) == ident
        rng = random.Random(3)
        for _ in range(200):
            a, b = rng.choice(grp.elements), rng.choice(grp.elements)
            assert compose(a, b) in members

    def test_associativity_spot_check(self):
        grp = enumerate_group(epsilon_matrix(PENTAGON.graph))
        rng = random.Random(5)
        for _ in range(100):
            a, b, c = (rng.choice(grp.elements) for _ in range(3))
            assert compose(compose(a, b), c) == compose(a, compose(b, c))

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            compose(SignedPermutation.identity(3), SignedPermutation.identity(4))


class TestExtendSigns:
    def test_identity_permutation(self):
        m = epsilon_matrix(SQUARE.graph)
        sols = extend_signs(Permutation.identity(4), m)
        assert sols == [(1, 1, 1, 1), (-1, -1, -1, -1)]

    def test_diagonal_transposition_on_square(self):
        # (1 3) in 1-based terms: a graph automorphism of the 4-cycle
        m = epsilon_matrix(SQUARE.graph)
        sols = extend_signs(Permutation((2, 1, 0, 3)), m)
        assert (1, 1, 1, 1) in sols and (-1, -1, -1, -1) in sols

    def test_brute_force_oracle(self):
        # every permutation, checked against exhaustive sign search
        rng = random.Random(7)
        for _ in range(30):
            n = rng.randint(3, 5)
            g = random_graph(rng, n)
            m = epsilon_matrix(g)
            for images in itertools.permutations(range(n)):
                s = Permutation(images)
                expected = []
                for bits in range(1 << n):
                    nu = tuple(1 if not (bits >> i) & 1 else -1 for i in range(n))
                    if SignedPermutation(s, nu).is_valid(m):
                        expected.append(nu)
                got = extend_signs(s, m)
                assert sorted(got) == sorted(expected)
                assert len(got) in (0, 2)
                if got:
                    assert got[1] == tuple(-v for v in got[0])

    def test_small_n_rejected(self):
        m = epsilon_matrix(Graph(2, frozenset()))
        with pytest.raises(ValueError):
            extend_signs(Permutation.identity(2), m)


class TestEnumerateGroup:
    def test_square_order_48(self):
        grp = enumerate_group(epsilon_matrix(SQUARE.graph))
        assert grp.order == 48
        assert grp.n_sigma == 24
        assert grp.order == 2 * grp.n_sigma

    def test_pointed_hexagon_order_120(self):
        grp = enumerate_group(epsilon_matrix(POINTED_HEXAGON.graph))
        assert grp.order == 120

    def test_edgeless_three(self):
        grp = enumerate_group(epsilon_matrix(Graph(3, frozenset())))
        assert grp.order == 12
        for el in grp.elements:
            assert len(set(el.nu)) == 1  # constant sign vectors only

    def test_contains_identity_and_center(self):
        grp = enumerate_group(epsilon_matrix(PENTAGON.graph))
        assert SignedPermutation.identity(5) in grp
        assert SignedPermutation.central(5) in grp

    def test_graph_automorphisms_embed(self):
        for fx in (TRIANGLE, SQUARE, PENTAGON, POINTED_HEXAGON):
            m = epsilon_matrix(fx.graph)
            grp = enumerate_group(m)
            members = set(grp.elements)
            for s in graph_automorphisms(fx.graph):
                assert SignedPermutation(s, (1,) * fx.graph.n) in members

    def test_naive_matches_pruned(self):
        rng = random.Random(11)
        for _ in range(25):
            g = random_graph(rng, rng.randint(3, 5))
            m = epsilon_matrix(g)
            assert enumerate_group(m).elements == enumerate_group(m, naive=True).elements

    def test_all_elements_valid(self):
        m = epsilon_matrix(PENTAGON.graph)
        for el in enumerate_group(m).elements:
            assert el.is_valid(m)

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            enumerate_group(epsilon_matrix(Graph(6, frozenset())), max_n=5)

    def test_tiny_n(self):
        # one vertex: just the two global signs; two vertices: signs must agree
        assert enumerate_group(epsilon_matrix(Graph(1, frozenset()))).order == 2
        assert enumerate_group(epsilon_matrix(Graph(2, frozenset()))).order == 4


class TestRealize:
    @pytest.fixture()
    def cube(self):
        u = Representation.build(SQUARE.graph, 1.0, -1 / 3)
        grp = enumerate_group(epsilon_matrix(SQUARE.graph))
        return u, grp

    def test_identity_and_center(self, cube):
        u, _ = cube
        f = realize_isometry(SignedPermutation.identity(4), u)
        assert np.abs(f - np.eye(3)).max() < 1e-9
        f = realize_isometry(SignedPermutation.central(4), u)
        assert np.abs(f + np.eye(3)).max() < 1e-9

    def test_defining_property(self, cube):
        u, grp = cube
        for el in grp.elements:
            f = realize_isometry(el, u)
            for i in range(4):
                target = el.nu[i] * u.vectors[el.sigma(i)]
                assert np.abs(f @ u.vectors[i] - target).max() < 1e-8

    def test_forty_eight_distinct_orthogonal(self, cube):
        u, grp = cube
        mats = [realize_isometry(el, u) for el in grp.elements]
        assert len(mats) == 48
        for m in mats:
            assert np.abs(m.T @ m - np.eye(3)).max() < 1e-8
        for a, b in itertools.combinations(mats, 2):
            assert np.abs(a - b).max() > 1e-6

    def test_morphism_property(self, cube):
        u, grp = cube
        mats = {el: realize_isometry(el, u) for el in grp.elements}
        for a in grp.elements:
            for b in grp.elements:
                assert np.abs(mats[a] @ mats[b] - mats[compose(a, b)]).max() < 1e-7


class TestOrbits:
    def test_pointed_hexagon_two_transitive(self):
        grp = enumerate_group(epsilon_matrix(POINTED_HEXAGON.graph))
        info = orbits_on_lines(grp, LinePartition.trivial(6))
        assert info.is_transitive
        assert info.is_2_transitive
        assert info.orbits == ((0, 1, 2, 3, 4, 5),)

    def test_square_transitive(self):
        grp = enumerate_group(epsilon_matrix(SQUARE.graph))
        info = orbits_on_lines(grp, LinePartition.trivial(4))
        assert info.is_transitive
        assert info.is_2_transitive

    def test_pentagon_not_two_transitive(self):
        grp = enumerate_group(epsilon_matrix(PENTAGON.graph))
        info = orbits_on_lines(grp, LinePartition.trivial(5))
        assert info.is_transitive
        assert not info.is_2_transitive

    def test_center_only_group_not_transitive(self):
        m = epsilon_matrix(PENTAGON.graph)
        tiny = SheafGroup(m, (SignedPermutation.identity(5), SignedPermutation.central(5)))
        info = orbits_on_lines(tiny, LinePartition.trivial(5))
        assert not info.is_transitive
        assert len(info.orbits) == 5

    def test_line_action_on_collapsed_partition(self):
        # square at c = 1: one line; every element must act trivially
        p = LinePartition(1, (0,), (0, 0, 0, 0), (1, -1, 1, -1))
        grp = enumerate_group(epsilon_matrix(SQUARE.graph))
        for el in grp.elements:
            assert line_action(el, p) == (0,)

    def test_disconnected_two_orbits(self):
        # two disjoint edges: lines cannot mix between non-isomorphic pieces
        g = Graph.from_edges(5, [(0, 1), (2, 3)])
        grp = enumerate_group(epsilon_matrix(g))
        info = orbits_on_lines(grp, LinePartition.trivial(5))
        assert not info.is_2_transitive


class TestGroupLawMatchesIsometries:
    def test_product_against_isometry_oracle(self):
        # realize(a) . realize(b) must equal realize(a * b) on the 4-cycle
        u = Representation.build(SQUARE.graph, 1.0, -1 / 3)
        grp = enumerate_group(epsilon_matrix(SQUARE.graph))
        rng = random.Random(17)
        for _ in range(30):
            a, b = rng.choice(grp.elements), rng.choice(grp.elements)
            fa = realize_isometry(a, u)
            fb = realize_isometry(b, u)
            fab = realize_isometry(compose(a, b), u)
            assert np.abs(fa @ fb - fab).max() < 1e-7

    def test_faithful_when_lines_distinct(self):
        u = Representation.build(SQUARE.graph, 1.0, -1 / 3)
        grp = enumerate_group(epsilon_matrix(SQUARE.graph))
        seen = []
        for el in grp.elements:
            f = realize_isometry(el, u)
            for other in seen:
                assert np.abs(f - other).max() > 1e-6
            seen.append(f)
