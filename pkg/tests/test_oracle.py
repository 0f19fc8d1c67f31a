import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hibires.errors import ZeroIdeal
from hibires.graphs import BipartiteGraph, graph_from_lattice
from hibires.ideals import Monomial, MonomialIdeal, edge_ideal, hibi_ideal, lcm_closure
from hibires.lattice import random_sublattice
from hibires.oracle import (
    SimplicialComplex,
    betti_oracle,
    betti_value_at,
    graded_betti_in_degree,
    invariants_from_table,
    reduced_homology_ranks,
    total_betti_in_degree,
    upper_koszul_complex,
)


def simplex_complex(k):
    """Full simplex on k vertices, including the empty face."""
    faces = {}
    for sub in range(1 << k):
        faces.setdefault(sub.bit_count() - 1, []).append(sub)
    return SimplicialComplex(tuple(range(k)), {d: sorted(f) for d, f in faces.items()})


def sphere_complex(k):
    """Boundary of the k-vertex simplex: a (k-2)-sphere."""
    full = (1 << k) - 1
    faces = {}
    for sub in range(1 << k):
        if sub != full:
            faces.setdefault(sub.bit_count() - 1, []).append(sub)
    return SimplicialComplex(tuple(range(k)), {d: sorted(f) for d, f in faces.items()})


class TestHomologyEngine:
    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_simplex_is_acyclic(self, k):
        assert reduced_homology_ranks(simplex_complex(k)) == {}

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_sphere(self, k):
        assert reduced_homology_ranks(sphere_complex(k)) == {k - 2: 1}

    def test_two_points(self):
        K = SimplicialComplex((0, 1), {-1: [0], 0: [0b01, 0b10]})
        assert reduced_homology_ranks(K) == {0: 1}

    def test_empty_complex(self):
        K = SimplicialComplex((), {-1: [0]})
        assert reduced_homology_ranks(K) == {-1: 1}

    def test_void_complex(self):
        assert reduced_homology_ranks(SimplicialComplex((), {})) == {}

    @pytest.mark.parametrize("k", [3, 4])
    def test_fields_agree_on_spheres(self, k):
        K = sphere_complex(k)
        assert reduced_homology_ranks(K, field=2) == {k - 2: 1}
        assert reduced_homology_ranks(K, field=32749) == {k - 2: 1}


class TestUpperKoszul:
    def test_generator_gives_simplex_minus_nothing(self):
        # at a generator's own degree only the empty face survives removal
        I = MonomialIdeal.of(1, [Monomial.of(0b1, 0b1)])
        K = upper_koszul_complex(I, Monomial.of(0b1, 0b1))
        assert K.faces == {-1: [0]}

    def test_chain_hibi_top_lcm_is_acyclic(self, CHAIN):
        # the complex at x1*x2*y1*y2 is the path x1-x2-y1-y2
        H = hibi_ideal(CHAIN)
        K = upper_koszul_complex(H, Monomial.of(0b11, 0b11))
        assert reduced_homology_ranks(K) == {}

    def test_chain_hibi_syzygy_degree(self, CHAIN):
        # two disconnected vertices at x1*y1*y2: one first syzygy
        H = hibi_ideal(CHAIN)
        K = upper_koszul_complex(H, Monomial.of(0b01, 0b11))
        assert reduced_homology_ranks(K) == {0: 1}


class TestBettiOracle:
    def test_chain_hibi_totals(self, CHAIN):
        T = betti_oracle(hibi_ideal(CHAIN))
        assert T.totals() == {0: 3, 1: 2}

    def test_chain_edge_quotient(self, CHAIN):
        T = betti_oracle(edge_ideal(graph_from_lattice(CHAIN))).to_quotient()
        assert T.pd() == 2
        assert T.depth(4) == 2
        assert T.reg() == 1

    def test_k22_edge_quotient(self, K22):
        T = betti_oracle(edge_ideal(graph_from_lattice(K22))).to_quotient()
        assert (T.depth(4), T.reg(), T.pd()) == (1, 1, 3)

    def test_zero_ideal(self):
        with pytest.raises(ZeroIdeal):
            betti_oracle(MonomialIdeal(1, ()))

    def test_degree_filter(self, CHAIN):
        H = hibi_ideal(CHAIN)
        full = betti_oracle(H)
        filtered = betti_oracle(H, degree_filter={3})
        assert filtered.entries == {
            k: v for k, v in full.entries.items() if k[1].degree == 3
        }

    @given(st.integers(2, 4), st.integers(0, 4), st.integers(0, 2**32 - 1))
    @settings(max_examples=15, deadline=None)
    def test_field_independence_small(self, n, seeds, seed):
        # squarefree Betti numbers here happen to be characteristic-free;
        # a disagreement would be a finding worth recording
        H = hibi_ideal(random_sublattice(n, seeds, seed))
        assert betti_oracle(H).entries == betti_oracle(H, field=2).entries


class TestCheapPaths:
    def test_value_at_matches_table(self, B2):
        I = edge_ideal(graph_from_lattice(B2))
        T = betti_oracle(I)
        for b in lcm_closure(I):
            for i in range(5):
                assert betti_value_at(I, b, i) == T.value(i, b)

    def test_total_in_degree(self, K22):
        I = edge_ideal(graph_from_lattice(K22))
        T = betti_oracle(I)
        for i in range(4):
            assert total_betti_in_degree(I, i) == T.totals().get(i, 0)

    def test_graded_in_degree(self, CHAIN):
        I = edge_ideal(graph_from_lattice(CHAIN))
        T = betti_oracle(I)
        g = T.graded()
        for i in range(3):
            for d in range(1, 5):
                assert graded_betti_in_degree(I, i, d) == g.get((i, d), 0)


class TestInvariantsFromTable:
    def test_chain(self, CHAIN):
        T = betti_oracle(edge_ideal(graph_from_lattice(CHAIN))).to_quotient()
        inv = invariants_from_table(T, 4)
        assert (inv.depth, inv.reg, inv.pd) == (2, 1, 2)
        assert inv.t == T.totals()[T.pd()]
