import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hibires.bitset import full_mask, mask_of
from hibires.errors import EmptyInput, NoPerfectMatching, NotUnmixed, TooLarge
from hibires.graphs import (
    BipartiteGraph,
    cover_lattice,
    graph_from_lattice,
    graph_to_text,
    is_unmixed,
    minimal_vertex_covers,
    normalize_graph,
    parse_graph_text,
)
from hibires.lattice import random_sublattice, validate_sublattice


def cover_sets(G):
    """(xs, ys) index pairs for easy comparison."""
    return {
        (tuple(i + 1 for i in range(G.n_left) if c.xs >> i & 1),
         tuple(j + 1 for j in range(G.n_right) if c.ys >> j & 1))
        for c in minimal_vertex_covers(G)
    }


class TestNormalize:
    def test_single_edge(self):
        G = normalize_graph([("a", "b")])
        assert G.n == 1
        assert G.edges == frozenset({(1, 1)})

    def test_k22(self):
        G = normalize_graph(
            [("a1", "b1"), ("a1", "b2"), ("a2", "b1"), ("a2", "b2")]
        )
        assert G.n == 2
        assert (1, 1) in G.edges and (2, 2) in G.edges
        assert len(G.edges) == 4

    def test_star_has_no_matching(self):
        with pytest.raises(NoPerfectMatching):
            normalize_graph([("a", "b1"), ("a", "b2")])

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            normalize_graph([])

    def test_labels_recorded(self):
        G = normalize_graph([("u", "v")])
        assert G.raw_labels["left"][1] == "u"
        assert G.raw_labels["right"][1] == "v"

    def test_deterministic(self):
        edges = [("a2", "b2"), ("a1", "b1"), ("a1", "b2")]
        assert normalize_graph(edges) == normalize_graph(list(reversed(edges)))


class TestMinimalVertexCovers:
    def test_single_edge(self):
        G = BipartiteGraph(1, 1, frozenset({(1, 1)}))
        assert cover_sets(G) == {((1,), ()), ((), (1,))}

    def test_k22(self):
        G = BipartiteGraph(2, 2, frozenset({(1, 1), (1, 2), (2, 1), (2, 2)}))
        assert cover_sets(G) == {((1, 2), ()), ((), (1, 2))}

    def test_path(self):
        G = BipartiteGraph(2, 2, frozenset({(1, 1), (1, 2), (2, 2)}))
        assert cover_sets(G) == {((1, 2), ()), ((1,), (2,)), ((), (1, 2))}

    def test_minimality_by_single_removal(self):
        G = BipartiteGraph(2, 2, frozenset({(1, 1), (1, 2), (2, 2)}))
        for c in minimal_vertex_covers(G):
            for i in range(2):
                for xs, ys in ((c.xs & ~(1 << i), c.ys), (c.xs, c.ys & ~(1 << i))):
                    if (xs, ys) == (c.xs, c.ys):
                        continue
                    assert not all(
                        xs >> (a - 1) & 1 or ys >> (b - 1) & 1
                        for a, b in G.edges
                    )

    def test_enumeration_bound(self):
        G = BipartiteGraph(2, 2, frozenset({(1, 1), (2, 2)}))
        with pytest.raises(TooLarge):
            minimal_vertex_covers(G, bound=3)


class TestUnmixed:
    def test_k22(self):
        G = BipartiteGraph(2, 2, frozenset({(1, 1), (1, 2), (2, 1), (2, 2)}))
        assert is_unmixed(G)

    def test_path(self):
        G = BipartiteGraph(2, 2, frozenset({(1, 1), (1, 2), (2, 2)}))
        assert is_unmixed(G)

    def test_non_normalized_star_is_mixed(self):
        G = BipartiteGraph(1, 2, frozenset({(1, 1), (1, 2)}))
        assert not is_unmixed(G)


class TestCoverLattice:
    def test_single_edge(self):
        G = BipartiteGraph(1, 1, frozenset({(1, 1)}))
        assert cover_lattice(G).elements == (0, 1)

    def test_k22(self):
        G = BipartiteGraph(2, 2, frozenset({(1, 1), (1, 2), (2, 1), (2, 2)}))
        assert cover_lattice(G).elements == (0, 0b11)

    def test_chain(self):
        G = BipartiteGraph(2, 2, frozenset({(1, 1), (1, 2), (2, 2)}))
        assert cover_lattice(G).elements == (0, 0b01, 0b11)

    def test_not_normalized_rejected(self):
        G = BipartiteGraph(2, 2, frozenset({(1, 2), (2, 1)}))
        with pytest.raises(NotUnmixed):
            cover_lattice(G)

    def test_mixed_rejected(self):
        # pendant edge (3,1) makes covers of different sizes
        G = BipartiteGraph(
            3, 3, frozenset({(1, 1), (2, 2), (3, 3), (3, 1), (1, 3), (2, 3)})
        )
        if not is_unmixed(G):
            with pytest.raises(NotUnmixed):
                cover_lattice(G)


class TestGraphFromLattice:
    def test_single_edge(self):
        L = validate_sublattice({0, 1}, 1)
        assert graph_from_lattice(L).edges == frozenset({(1, 1)})

    def test_k22(self):
        L = validate_sublattice({0, 0b11}, 2)
        assert graph_from_lattice(L).edges == frozenset(
            {(1, 1), (1, 2), (2, 1), (2, 2)}
        )

    def test_chain(self):
        L = validate_sublattice({0, 0b01, 0b11}, 2)
        assert graph_from_lattice(L).edges == frozenset({(1, 1), (1, 2), (2, 2)})

    @given(st.integers(2, 6), st.integers(0, 6), st.integers(0, 2**32 - 1))
    @settings(max_examples=200, deadline=None)
    def test_round_trip(self, n, seeds, seed):
        L = random_sublattice(n, seeds, seed)
        G = graph_from_lattice(L)
        assert G.is_normalized
        assert cover_lattice(G).elements == L.elements

    @given(st.integers(2, 6), st.integers(0, 6), st.integers(0, 2**32 - 1))
    @settings(max_examples=100, deadline=None)
    def test_cover_structure(self, n, seeds, seed):
        L = random_sublattice(n, seeds, seed)
        G = graph_from_lattice(L)
        covers = minimal_vertex_covers(G)
        assert all(c.size == n for c in covers)
        assert all(c.ys == full_mask(n) & ~c.xs for c in covers)


class TestTextFormat:
    def test_round_trip(self):
        G = BipartiteGraph(2, 2, frozenset({(1, 1), (1, 2), (2, 2)}))
        assert parse_graph_text(graph_to_text(G)) == G

    def test_comments_ignored(self):
        G = parse_graph_text("# a path\ngraph 2 2\n1 1\n\n1 2\n2 2\n")
        assert len(G.edges) == 3
