from fractions import Fraction as F

import networkx as nx
import pytest
from hypothesis import given, settings

from circlecolor.augment import color_system
from circlecolor.generator import gen_crossing_clique, gen_nested_chain, gen_uniform_matching
from circlecolor.intervals import IntervalSystem, normalize
from circlecolor.oracles import (
    TooLarge,
    chromatic_number_exact,
    clique_number_exact,
    p_degree_oracle,
    verify_permutation_certificate,
    verify_proper,
    verify_run,
)
from circlecolor.perm_coloring import compose
from circlecolor.pillars import Pillar, make_state
from helpers import systems, triangle


def nx_graph(s):
    g = nx.Graph()
    g.add_nodes_from(range(s.n))
    g.add_edges_from(s.edges)
    return g


def brute_chromatic(s):
    from itertools import product

    if s.n == 0:
        return 0
    for k in range(1, s.n + 1):
        for colors in product(range(k), repeat=s.n):
            if all(colors[i] != colors[j] for i, j in s.edges):
                return k


class TestClique:
    def test_nested_pair(self):
        assert clique_number_exact(normalize([[1, 4], [2, 3]])) == 1

    def test_triangle(self):
        assert clique_number_exact(triangle()) == 3

    @pytest.mark.parametrize("k", [1, 4, 9])
    def test_crossing_clique(self, k):
        assert clique_number_exact(gen_crossing_clique(k)) == k

    def test_cap(self):
        with pytest.raises(TooLarge):
            clique_number_exact(gen_nested_chain(20), cap=10)

    @settings(max_examples=100)
    @given(systems(max_n=25))
    def test_matches_networkx(self, s):
        g = nx_graph(s)
        expected = max((len(c) for c in nx.find_cliques(g)), default=0)
        assert clique_number_exact(s) == expected

    @pytest.mark.parametrize("seed", range(3))
    def test_large_random(self, seed):
        s = gen_uniform_matching(150, seed)
        assert clique_number_exact(s) == max(len(c) for c in nx.find_cliques(nx_graph(s)))


class TestChromatic:
    def test_edgeless(self):
        assert chromatic_number_exact(gen_nested_chain(3)) == 1

    def test_triangle(self):
        assert chromatic_number_exact(triangle()) == 3

    def test_pair_plus_disjoint(self):
        assert chromatic_number_exact(normalize([[1, 3], [2, 4], [5, 6]])) == 2

    def test_k5(self):
        assert chromatic_number_exact(gen_crossing_clique(5)) == 5

    def test_cap(self):
        with pytest.raises(TooLarge):
            chromatic_number_exact(gen_nested_chain(17))

    @settings(max_examples=60, deadline=None)
    @given(systems(max_n=7))
    def test_matches_exhaustive(self, s):
        assert chromatic_number_exact(s) == brute_chromatic(s)


class TestVerifyProper:
    def test_pipeline_output(self):
        s = gen_uniform_matching(40, 3)
        _, c = color_system(s)
        assert verify_proper(s, c.final_color).passed

    def test_monochrome_pair(self):
        r = verify_proper(normalize([[1, 3], [2, 4]]), [1, 1])
        assert not r.passed and r.checks[0].witness == [0, 1]

    def test_empty(self):
        assert verify_proper(IntervalSystem(()), []).passed


class TestCertificate:
    def test_pipeline_output(self):
        s = gen_uniform_matching(40, 4)
        state, c = color_system(s)
        assert verify_permutation_certificate(s, state, c.pillar, c.class_color).passed
        assert verify_run(s, state, c).passed

    def test_same_colour_distinct_pillars(self):
        s = normalize([[1, 3], [2, 4]])  # (1/5,3/5), (2/5,4/5)
        state = make_state(s, [Pillar(F(3, 10), 1, 0), Pillar(F(7, 10), 1, 1)])
        r = verify_permutation_certificate(s, state, state.assignment, [1, 1])
        assert not r.passed
        assert r.failures()[0].witness["pillars"] == [0, 1]

    def test_singletons(self):
        s = normalize([[1, 2], [3, 4]])
        state = make_state(s, [Pillar(F(3, 10), 1, 0), Pillar(F(7, 10), 1, 1)])
        assert verify_permutation_certificate(s, state, state.assignment, [1, 1]).passed

    def test_bounds_failure(self):
        s = normalize([[1, 2], [3, 4]])
        state = make_state(s, [Pillar(F(3, 10), 1, 0), Pillar(F(7, 10), 2, 1)])
        c = compose(state)
        r = verify_run(s, state, c)
        assert not r.passed and [f.name for f in r.failures()] == ["colors_le_1"]


class TestPDegreeOracle:
    def test_empty(self):
        assert p_degree_oracle(IntervalSystem(()), [F(1, 2)], F(1, 4), F(1, 2)) == 0

    def test_triangle(self):
        assert p_degree_oracle(triangle(), [F(3, 14), F(9, 14)], F(3, 14), F(9, 14)) == 2
