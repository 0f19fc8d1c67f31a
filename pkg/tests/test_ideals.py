import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hibires.errors import ClosureTooLarge, ZeroIdeal
from hibires.graphs import BipartiteGraph, graph_from_lattice
from hibires.ideals import (
    UNIT,
    Monomial,
    MonomialIdeal,
    alexander_dual,
    edge_ideal,
    hibi_ideal,
    lattice_generator,
    lcm_closure,
    ideal_from_json_obj,
    ideal_to_json_obj,
)
from hibires.lattice import random_sublattice


def mono(x, y):
    return Monomial.of(x, y)


class TestMonomial:
    def test_of_degree(self):
        assert mono(0b101, 0b1).degree == 3

    def test_divides(self):
        assert mono(0b1, 0).divides(mono(0b11, 0b1))
        assert not mono(0b10, 0).divides(mono(0b01, 0b11))

    def test_lcm_quotient(self):
        a, b = mono(0b01, 0b10), mono(0b10, 0b10)
        l = a.lcm(b)
        assert l == mono(0b11, 0b10)
        assert l.quotient(a) == mono(0b10, 0)

    def test_times_disjoint(self):
        assert mono(0b01, 0).times_disjoint(mono(0b10, 0b1)) == mono(0b11, 0b1)

    def test_strictly_divides(self):
        a = mono(0b1, 0)
        assert not a.strictly_divides(a)
        assert a.strictly_divides(mono(0b1, 0b1))

    def test_render(self):
        assert mono(0b011, 0b100).render() == "x1*x2*y3"
        assert UNIT.render() == "1"

    def test_order_is_degree_first(self):
        assert mono(0b1, 0) < mono(0b11, 0)
        assert mono(0b01, 0) < mono(0b10, 0)


class TestMonomialIdeal:
    def test_minimalization(self):
        I = MonomialIdeal.of(2, [mono(0b1, 0), mono(0b11, 0), mono(0, 0b1)])
        assert I.gens == (mono(0, 0b1), mono(0b1, 0))

    def test_contains_monomial(self):
        I = MonomialIdeal.of(2, [mono(0b1, 0b1)])
        assert I.contains_monomial(mono(0b11, 0b11))
        assert not I.contains_monomial(mono(0b1, 0))

    def test_json_round_trip(self):
        I = MonomialIdeal.of(2, [mono(0b1, 0b10), mono(0b10, 0b1)])
        assert ideal_from_json_obj(ideal_to_json_obj(I)) == I


class TestHibiIdeal:
    def test_chain(self, CHAIN):
        H = hibi_ideal(CHAIN)
        assert set(H.gens) == {
            mono(0, 0b11),     # y1*y2 from the empty set
            mono(0b01, 0b10),  # x1*y2 from {1}
            mono(0b11, 0),     # x1*x2 from {1,2}
        }

    def test_generator_count_matches_lattice(self, FIG1):
        assert len(hibi_ideal(FIG1).gens) == len(FIG1)

    def test_all_degree_n(self, FIG1):
        assert all(g.degree == FIG1.n for g in hibi_ideal(FIG1).gens)

    def test_lattice_generator(self, CHAIN):
        assert lattice_generator(CHAIN, 0b01) == mono(0b01, 0b10)


class TestEdgeIdeal:
    def test_chain_graph(self):
        G = BipartiteGraph(2, 2, frozenset({(1, 1), (1, 2), (2, 2)}))
        assert set(edge_ideal(G).gens) == {
            mono(0b01, 0b01),
            mono(0b01, 0b10),
            mono(0b10, 0b10),
        }


class TestAlexanderDual:
    def test_chain_duality(self, CHAIN):
        H = hibi_ideal(CHAIN)
        I = edge_ideal(graph_from_lattice(CHAIN))
        assert alexander_dual(H) == I
        assert alexander_dual(I) == H

    def test_zero_ideal(self):
        with pytest.raises(ZeroIdeal):
            alexander_dual(MonomialIdeal(1, ()))

    def test_generator_cap(self, FIG1):
        with pytest.raises(ClosureTooLarge):
            alexander_dual(hibi_ideal(FIG1), cap=3)

    @given(st.integers(2, 5), st.integers(0, 5), st.integers(0, 2**32 - 1))
    @settings(max_examples=60, deadline=None)
    def test_involution_and_transversal(self, n, seeds, seed):
        L = random_sublattice(n, seeds, seed)
        H = hibi_ideal(L)
        D = alexander_dual(H)
        assert alexander_dual(D) == H
        # every dual generator meets the support of every generator of H
        for d in D.gens:
            for g in H.gens:
                assert d.xmask & g.xmask or d.ymask & g.ymask

    @given(st.integers(2, 5), st.integers(0, 5), st.integers(0, 2**32 - 1))
    @settings(max_examples=40, deadline=None)
    def test_dual_gens_are_minimal_transversals(self, n, seeds, seed):
        L = random_sublattice(n, seeds, seed)
        H = hibi_ideal(L)
        for d in alexander_dual(H).gens:
            for xbit in range(n):
                for drop in (
                    mono(d.xmask & ~(1 << xbit), d.ymask),
                    mono(d.xmask, d.ymask & ~(1 << xbit)),
                ):
                    if drop == d:
                        continue
                    assert not all(
                        drop.xmask & g.xmask or drop.ymask & g.ymask
                        for g in H.gens
                    )


class TestLcmClosure:
    def test_chain(self, CHAIN):
        H = hibi_ideal(CHAIN)
        closure = set(lcm_closure(H))
        assert set(H.gens) <= closure
        for a in closure:
            for b in closure:
                assert a.lcm(b) in closure

    def test_cap(self, FIG1):
        with pytest.raises(ClosureTooLarge):
            lcm_closure(hibi_ideal(FIG1), cap=5)

    def test_zero_ideal(self):
        with pytest.raises(ZeroIdeal):
            lcm_closure(MonomialIdeal(1, ()))
