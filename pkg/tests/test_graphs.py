"""Graph core: construction, weighted totals, containment, coloring."""

import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from dwturan import (
    Graph,
    PartSizes,
    blowup_k3,
    chromatic_number,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    contains_subgraph,
    cycle_graph,
    e_f,
    empty_graph,
    half,
    log_family,
    petersen_graph,
    power,
    turan_graph,
)
from oracles import naive_contains


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return Graph(n)
    edges = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
    return Graph(n, edges)


class TestConstruction:
    def test_from_edges_triangle(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        assert g == complete_graph(3)

    def test_from_edges_empty(self):
        g = Graph.from_edges(2, [])
        assert g.num_edges == 0 and g.n == 2

    def test_duplicate_edges_collapse(self):
        g = Graph.from_edges(4, [(0, 1), (0, 1), (1, 0)])
        assert g.num_edges == 1

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 3)])

    def test_multipartite_octahedron(self):
        g = complete_multipartite([2, 2, 2])
        assert g == blowup_k3(2)
        assert g.n == 6 and g.num_edges == 12

    def test_multipartite_single_part_is_empty(self):
        g = complete_multipartite([5])
        assert g.num_edges == 0

    def test_multipartite_degree_law(self):
        g = complete_multipartite([3, 2])
        assert sorted(g.degrees) == [2, 2, 2, 3, 3]

    def test_multipartite_zero_parts(self):
        g = complete_multipartite([3, 0, 2])
        assert g == complete_bipartite(3, 2)

    def test_turan_graph_parts(self):
        assert sorted(turan_graph(2, 5).degrees) == sorted(complete_bipartite(3, 2).degrees)
        assert turan_graph(3, 6) == blowup_k3(2)

    def test_turan_mantel_value(self):
        v = e_f(turan_graph(2, 4), power(1))
        assert v.exact == 8 == 2 * (4 * 4 // 4)

    def test_blowup_k3(self):
        assert blowup_k3(1) == complete_graph(3)
        g = blowup_k3(5)
        assert g.n == 15 and g.num_edges == 75
        assert chromatic_number(g) == 3


class TestObjective:
    def test_k3_square_weight(self):
        assert e_f(complete_graph(3), power(2)).exact == 12

    def test_half_counts_edges(self):
        g = petersen_graph()
        assert e_f(g, half()).exact == g.num_edges

    def test_empty_graph_zero(self):
        assert e_f(empty_graph(5), power(1)).exact == 0

    def test_star_fourth_power(self):
        star = Graph(4, [(0, 1), (0, 2), (0, 3)])
        assert e_f(star, power(4)).exact == 84

    def test_log_is_log_of_degree_product(self):
        import math

        v = e_f(complete_graph(3), log_family())
        assert v.approx == pytest.approx(3 * math.log(2))
        assert math.exp(v.approx) == pytest.approx(8.0)

    @given(graphs())
    def test_handshake(self, g):
        assert sum(g.degrees) == 2 * g.num_edges

    @given(graphs(), st.randoms(use_true_random=False))
    def test_isomorphism_invariance(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert e_f(g.relabel(perm), power(2)).exact == e_f(g, power(2)).exact

    @given(graphs(max_n=7))
    def test_monotone_under_edge_addition(self, g):
        f = power(2)
        base = e_f(g, f)
        for u, v in combinations(range(g.n), 2):
            if not g.has_edge(u, v):
                bigger = Graph(g.n, g.edges() + [(u, v)])
                assert e_f(bigger, f) >= base
                break


class TestContainment:
    def test_clique_nesting(self):
        assert contains_subgraph(complete_graph(4), complete_graph(3))

    def test_bipartite_triangle_free(self):
        assert not contains_subgraph(complete_bipartite(3, 3), complete_graph(3))

    def test_petersen_has_c5(self):
        assert contains_subgraph(petersen_graph(), cycle_graph(5))

    def test_petersen_no_c3_c4(self):
        assert not contains_subgraph(petersen_graph(), cycle_graph(3))
        assert not contains_subgraph(petersen_graph(), cycle_graph(4))

    def test_not_induced(self):
        # C4 sits inside K4 as a (non-induced) subgraph
        assert contains_subgraph(complete_graph(4), cycle_graph(4))

    def test_octahedron_contains_c5(self):
        assert contains_subgraph(blowup_k3(2), cycle_graph(5))

    @given(graphs(max_n=6), graphs(max_n=4))
    @settings(max_examples=60)
    def test_matches_naive_oracle(self, g, f):
        assert contains_subgraph(g, f) == naive_contains(g, f)

    @given(graphs(max_n=6), graphs(max_n=4))
    @settings(max_examples=40)
    def test_monotone_in_host(self, g, f):
        if not contains_subgraph(g, f):
            return
        for u, v in combinations(range(g.n), 2):
            if not g.has_edge(u, v):
                assert contains_subgraph(Graph(g.n, g.edges() + [(u, v)]), f)
                return


class TestIncrementalContainment:
    """exists_using_edge must equal full containment when the host was
    pattern-free before the edge arrived (every new copy uses the edge)."""

    @pytest.mark.parametrize("pattern", [
        complete_graph(3), complete_graph(4), cycle_graph(4), cycle_graph(5),
        blowup_k3(2), complete_bipartite(2, 3), Graph(4, [(0, 1), (1, 2), (2, 3)]),
    ])
    def test_matches_full_search_on_growing_hosts(self, pattern):
        from dwturan.graphs import SubgraphMatcher

        matcher = SubgraphMatcher(pattern)
        rng = random.Random(hash(pattern) & 0xFFFF)
        for _ in range(15):
            n = rng.randrange(pattern.n, 9)
            slots = [(u, v) for u in range(n) for v in range(u + 1, n)]
            rng.shuffle(slots)
            adj = [0] * n
            deg = [0] * n
            edges = []
            for u, v in slots:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                deg[u] += 1
                deg[v] += 1
                incremental = matcher.exists_using_edge(adj, deg, n, u, v)
                full = contains_subgraph(Graph(n, edges + [(u, v)]), pattern)
                assert incremental == full
                if incremental:
                    adj[u] ^= 1 << v
                    adj[v] ^= 1 << u
                    deg[u] -= 1
                    deg[v] -= 1
                else:
                    edges.append((u, v))


class TestChromaticNumber:
    @pytest.mark.parametrize("g,chi", [
        (complete_graph(4), 4),
        (cycle_graph(5), 3),
        (blowup_k3(2), 3),
        (complete_bipartite(3, 3), 2),
        (empty_graph(4), 1),
        (petersen_graph(), 3),
        (cycle_graph(6), 2),
    ])
    def test_known_values(self, g, chi):
        assert chromatic_number(g) == chi

    def test_empty_order_rejected(self):
        with pytest.raises(ValueError):
            chromatic_number(Graph(0))


class TestPartSizes:
    def test_canonical_order(self):
        assert PartSizes([1, 3, 2]).sizes == (3, 2, 1)

    def test_total(self):
        assert PartSizes([2, 0, 2]).total == 4

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            PartSizes([2, -1])


def test_induced_subgraph_relabels():
    g = cycle_graph(5)
    sub = g.induced_subgraph([1, 2, 3])
    assert sub.edges() == [(0, 1), (1, 2)]


def test_random_relabel_preserves_edge_count():
    rng = random.Random(7)
    g = petersen_graph()
    for _ in range(5):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert g.relabel(perm).num_edges == g.num_edges
