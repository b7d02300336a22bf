"""Graph type, family constructors, structure queries, and the two text formats."""

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qspectral import (
    Graph,
    GraphFormatError,
    complete,
    complete_bipartite,
    components,
    delete_edge,
    disjoint_union,
    edge_mask,
    edge_order,
    from_edge_list,
    from_edge_mask,
    from_graph6,
    join,
    join_split,
    random_gnp,
    to_edge_list,
    to_graph6,
    vertex_connectivity,
)

from conftest import random_graph, to_networkx


@st.composite
def graphs_st(draw, n_min=1, n_max=8):
    n = draw(st.integers(n_min, n_max))
    ne = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << ne) - 1))
    return from_edge_mask(n, mask)


class TestGraphBasics:
    def test_rejects_nonpositive_n(self):
        with pytest.raises(ValueError):
            Graph(0)
        with pytest.raises(ValueError):
            Graph(-3)

    def test_rejects_loops_and_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])
        with pytest.raises(ValueError):
            Graph(3, [(-1, 0)])

    def test_edges_normalized_and_deduplicated(self):
        g = Graph(4, [(2, 0), (0, 2), (1, 3)])
        assert g.edges == frozenset({(0, 2), (1, 3)})
        assert g.edge_count == 2
        assert g.has_edge(2, 0) and g.has_edge(0, 2)
        assert not g.has_edge(0, 1)

    def test_adjacency_masks(self):
        g = Graph(3, [(0, 1), (1, 2)])
        assert g.adj == (0b010, 0b101, 0b010)
        assert g.degrees() == (1, 2, 1)

    def test_immutable_and_hashable(self):
        g = Graph(3, [(0, 1)])
        with pytest.raises(AttributeError):
            g.n = 5
        assert g == Graph(3, [(1, 0)])
        assert hash(g) == hash(Graph(3, [(1, 0)]))

    @given(graphs_st())
    def test_degree_sum_is_twice_edges(self, g):
        assert sum(g.degrees()) == 2 * g.edge_count


class TestConstructors:
    def test_complete(self):
        g = complete(5)
        assert g.n == 5 and g.edge_count == 10
        assert complete(1).edge_count == 0

    def test_complete_bipartite_layout(self):
        g = complete_bipartite(2, 3)
        assert g.n == 5 and g.edge_count == 6
        assert not g.has_edge(0, 1)  # inside the left side
        assert not g.has_edge(2, 3)  # inside the right side
        assert g.has_edge(0, 2)
        with pytest.raises(ValueError):
            complete_bipartite(0, 3)

    def test_disjoint_union_shifts_right_block(self):
        g = disjoint_union(complete(2), complete(3))
        assert g.n == 5
        assert g.has_edge(0, 1) and g.has_edge(2, 3) and not g.has_edge(1, 2)

    def test_join_adds_all_cross_edges(self):
        g = join(complete(2), Graph(2))
        # K_2 joined with two isolated vertices: only the 2-3 edge is missing
        assert g.edge_count == 5 and not g.has_edge(2, 3)

    def test_join_split_structure(self):
        g = join_split(7, 2, 2)
        # blocks: {0,1} clique, {2,3} clique, {4,5,6} clique, full join to {0,1}
        assert g.n == 7
        assert g.edge_count == 1 + 1 + 3 + 2 * 5
        assert g.has_edge(0, 6) and g.has_edge(1, 2)
        assert not g.has_edge(2, 4)
        assert vertex_connectivity(g) == 2

    def test_join_split_validation(self):
        with pytest.raises(ValueError):
            join_split(5, 0, 1)
        with pytest.raises(ValueError):
            join_split(5, 4, 1)
        with pytest.raises(ValueError):
            join_split(5, 1, 0)
        with pytest.raises(ValueError):
            join_split(5, 1, 4)

    def test_delete_edge(self):
        g = complete(4)
        h = delete_edge(g, 1, 2)
        assert h.edge_count == 5 and not h.has_edge(1, 2)
        with pytest.raises(ValueError):
            delete_edge(h, 1, 2)

    def test_random_gnp_bounds(self):
        rng = random.Random(7)
        g = random_gnp(10, 0.0, rng)
        assert g.edge_count == 0
        g = random_gnp(10, 1.0, rng)
        assert g.edge_count == 45


class TestMasks:
    def test_edge_order_is_lexicographic(self):
        assert edge_order(4) == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

    @given(graphs_st())
    def test_mask_round_trip(self, g):
        assert from_edge_mask(g.n, edge_mask(g)) == g

    def test_mask_out_of_range(self):
        with pytest.raises(ValueError):
            from_edge_mask(3, 8)


class TestComponents:
    def test_connected_bipartite(self):
        summary = components(complete_bipartite(3, 4))
        assert summary.count == 1
        assert summary.is_bipartite
        assert summary.bipartite_count == 1

    def test_odd_cycle_not_bipartite(self):
        g = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
        summary = components(g)
        assert summary.count == 1 and summary.bipartite_count == 0

    def test_mixed_components(self):
        # triangle plus a single edge plus an isolated vertex
        g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4)])
        summary = components(g)
        assert summary.count == 3
        assert summary.bipartite_flags == (False, True, True)
        assert summary.vertex_sets == (0b000111, 0b011000, 0b100000)

    @given(graphs_st())
    @settings(max_examples=60)
    def test_components_match_networkx(self, g):
        nx = pytest.importorskip("networkx")
        G = to_networkx(g)
        summary = components(g)
        assert summary.count == nx.number_connected_components(G)
        assert summary.is_bipartite == nx.is_bipartite(G)


class TestVertexConnectivity:
    def test_known_values(self):
        assert vertex_connectivity(complete(5)) == 4
        assert vertex_connectivity(complete(1)) == 0
        assert vertex_connectivity(complete_bipartite(2, 5)) == 2
        path = Graph(4, [(0, 1), (1, 2), (2, 3)])
        assert vertex_connectivity(path) == 1
        assert vertex_connectivity(Graph(3, [(0, 1)])) == 0  # disconnected

    def test_join_split_has_connectivity_k(self):
        for n, k, r in [(6, 1, 2), (7, 2, 2), (8, 3, 2), (9, 4, 2)]:
            assert vertex_connectivity(join_split(n, k, r)) == k

    def test_matches_networkx_on_random_graphs(self):
        nx = pytest.importorskip("networkx")
        rng = random.Random(2024)
        for _ in range(120):
            g = random_graph(rng, n_max=8)
            assert vertex_connectivity(g) == nx.node_connectivity(to_networkx(g))


class TestGraph6:
    def test_known_encodings(self):
        # single vertex and the 5-cycle, both checkable by hand
        assert to_graph6(Graph(1)) == "@"
        assert from_graph6("@") == Graph(1)
        c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
        assert from_graph6(to_graph6(c5)) == c5

    def test_header_is_tolerated(self):
        g = complete(4)
        assert from_graph6(">>graph6<<" + to_graph6(g)) == g

    @given(graphs_st())
    def test_round_trip(self, g):
        assert from_graph6(to_graph6(g)) == g

    @given(graphs_st(n_max=7))
    @settings(max_examples=60)
    def test_matches_networkx_encoding(self, g):
        nx = pytest.importorskip("networkx")
        ours = to_graph6(g)
        theirs = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
        assert ours == theirs
        back = nx.from_graph6_bytes(ours.encode())
        assert {tuple(sorted(e)) for e in back.edges()} == set(g.sorted_edges())

    def test_rejects_garbage(self):
        with pytest.raises(GraphFormatError):
            from_graph6("")
        with pytest.raises(GraphFormatError):
            from_graph6("D")  # promises n=5 but has no body
        with pytest.raises(GraphFormatError):
            from_graph6("~??")  # extended size prefix unsupported
        with pytest.raises(GraphFormatError):
            from_graph6("D" + chr(200))

    def test_writer_size_cap(self):
        with pytest.raises(GraphFormatError):
            to_graph6(Graph(63))


class TestEdgeListFormat:
    def test_round_trip(self):
        g = join_split(6, 1, 2)
        assert from_edge_list(to_edge_list(g)) == g

    def test_exact_text(self):
        g = Graph(3, [(0, 2), (0, 1)])
        assert to_edge_list(g) == "3 2\n0 1\n0 2\n"

    @given(graphs_st())
    def test_round_trip_random(self, g):
        assert from_edge_list(to_edge_list(g)) == g

    def test_error_messages_carry_the_token(self):
        with pytest.raises(GraphFormatError, match="header"):
            from_edge_list("3\n0 1\n")
        with pytest.raises(GraphFormatError, match="'x'"):
            from_edge_list("3 1\n0 x\n")
        with pytest.raises(GraphFormatError, match="promises 2"):
            from_edge_list("3 2\n0 1\n")
        with pytest.raises(GraphFormatError):
            from_edge_list("3 1\n0 3\n")
        with pytest.raises(GraphFormatError):
            from_edge_list("")
