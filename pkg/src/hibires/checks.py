"""Property suite run over a lattice instance.

Each check verifies one structural claim: the distinct-meets lemma and its
cardinality corollary, the rank-two neighbor fact, interval monotonicity,
the basis/interval bijection, graph and duality round-trips, resolution
correctness, and (at oracle level) agreement of every closed-form value
with the homology oracle.  Checks return (name, ok, detail); findings that
are not failures (bound strictness, graded-value mismatches) are reported
separately.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .bitset import is_subset
from .graphs import cover_lattice, graph_from_lattice
from .ideals import alexander_dual, edge_ideal, hibi_ideal, lcm_closure
from .invariants import (
    cm_extremal_placement_check,
    depth_edge_ring,
    extremal_graded_edge_ring,
    extremal_multigraded_edge_ring,
    extremal_multigraded_H,
    is_cohen_macaulay,
    last_betti_lower_bound,
    pd_and_reg_H,
    regularity_edge_ring,
)
from .lattice import a_set, boolean_intervals, f_value, scan_boolean_intervals
from .oracle import betti_oracle, betti_value_at, total_betti_in_degree
from .resolution import (
    betti_table_from_basis,
    build_resolution,
    strand_exactness,
    verify_complex,
    verify_minimality,
)

LEMMA_NEIGHBOR_CAP = 12  # exhaustive subset checks stay below 2^12


@dataclass
class CheckReport:
    results: list = field(default_factory=list)
    findings: list = field(default_factory=list)

    @property
    def ok(self):
        return all(ok for _, ok, _ in self.results)

    def add(self, name, ok, detail=None):
        self.results.append((name, ok, detail))

    def find(self, kind, detail):
        self.findings.append((kind, detail))

    def first_failure(self):
        for name, ok, detail in self.results:
            if not ok:
                return (name, detail)
        return None


def check_lemma_distinct_meets(L, report):
    """Distinct subsets of N(p) have distinct meets (empty meet is p)."""
    for p in L.elements:
        nb = L.neighbors(p)
        if len(nb) > LEMMA_NEIGHBOR_CAP:
            continue
        seen = {}
        for k in range(len(nb) + 1):
            for S in combinations(nb, k):
                m = L.meet_of(S, p)
                if m in seen:
                    report.add("lemma1_distinct_meets", False, (p, S, seen[m]))
                    return
                seen[m] = S
    report.add("lemma1_distinct_meets", True)


def check_lemma_corollary(L, report):
    """Nested subsets S in S' of N(p): |S'| - |S| <= |meet S| - |meet S'|."""
    for p in L.elements:
        nb = L.neighbors(p)
        if len(nb) > 10:
            continue
        for k in range(len(nb) + 1):
            for Sp in combinations(nb, k):
                mp = L.meet_of(Sp, p).bit_count()
                for k2 in range(k + 1):
                    for S in combinations(Sp, k2):
                        m = L.meet_of(S, p).bit_count()
                        if len(Sp) - len(S) > m - mp:
                            report.add(
                                "lemma1_corollary", False, (p, S, Sp)
                            )
                            return
    report.add("lemma1_corollary", True)


def check_rank_two(L, report):
    """Distinct lower neighbors meet into a lower neighbor; the interval
    [q_i meet q_j, p] has exactly four elements."""
    for p in L.elements:
        nb = L.neighbors(p)
        for qi, qj in combinations(nb, 2):
            m = qi & qj
            if m not in L.neighbors(qi):
                report.add("rank_two_fact", False, (p, qi, qj))
                return
            members = [
                c for c in L.elements if is_subset(m, c) and is_subset(c, p)
            ]
            if len(members) != 4:
                report.add("rank_two_fact", False, (p, qi, qj, members))
                return
    report.add("rank_two_fact", True)


def check_interval_monotonicity(L, report):
    """Interval containment into a maximal interval forces f(q) <= f(p)."""
    from .lattice import interval_of

    for p in a_set(L):
        ip = interval_of(L, p)
        for q in L.elements:
            if q == 0:
                continue
            if ip.contains(interval_of(L, q)) and f_value(L, q) > f_value(L, p):
                report.add("interval_monotonicity", False, (p, q))
                return
    report.add("interval_monotonicity", True)


def check_interval_bijection(L, report):
    """Basis labels biject onto the Boolean intervals of L."""
    pairs = boolean_intervals(L)
    expected = sum(2 ** len(L.neighbors(p)) for p in L.elements)
    image = {(iv.bottom, iv.top, iv.rank) for _, iv in pairs}
    ok = (
        len(pairs) == expected
        and len(image) == expected
        and image == scan_boolean_intervals(L)
    )
    report.add("interval_bijection", ok)


def check_graph_round_trip(L, report):
    G = graph_from_lattice(L)
    ok = G.is_normalized and cover_lattice(G).elements == L.elements
    report.add("graph_round_trip", ok)


def check_duality(L, report):
    """Alexander duality swaps the lattice ideal and the edge ideal."""
    H = hibi_ideal(L)
    I = edge_ideal(graph_from_lattice(L))
    ok = alexander_dual(H) == I and alexander_dual(I) == H
    report.add("alexander_duality", ok)


def check_resolution(L, report, field="Q"):
    C = build_resolution(L)
    report.add("complex_d_squared_zero", bool(verify_complex(C)))
    report.add("complex_minimality", bool(verify_minimality(C)))
    H = hibi_ideal(L)
    bad = [
        b
        for b in lcm_closure(H)
        if not strand_exactness(C, H, b, field=field)
    ]
    report.add("strand_exactness", not bad, bad[:3])
    table = betti_table_from_basis(L)
    report.add(
        "basis_betti_multiplicity_one",
        all(v == 1 for v in table.entries.values()),
    )
    return C, table


def check_formula_consistency(L, report):
    """Internal relations among the closed-form invariants."""
    pd_RI, _ = pd_and_reg_H(L)
    ok = (
        pd_RI == 2 * L.n - depth_edge_ring(L)
        and is_cohen_macaulay(L) == (depth_edge_ring(L) == L.n)
        and regularity_edge_ring(L) >= 1
    )
    report.add("formula_consistency", ok)


def check_oracle_hibi(L, basis_table, report, field="Q"):
    """The decisive cross-check: basis counts equal the homology oracle."""
    H = hibi_ideal(L)
    oracle_table = betti_oracle(H, field=field)
    report.add(
        "betti_formula_vs_oracle",
        oracle_table.entries == basis_table.entries,
    )
    i_extremal = all(
        oracle_table.is_i_extremal(i, b) for (i, b) in oracle_table.entries
    )
    report.add("oracle_i_extremality_H", i_extremal)
    expected = [
        (i, b, 1) for i, b in extremal_multigraded_H(L)
    ]
    report.add(
        "extremal_H_vs_oracle",
        oracle_table.extremal_multigraded() == sorted(expected),
    )
    return oracle_table


def check_oracle_edge_ring(L, report, field="Q"):
    """Formula invariants of R/I(G) against the full edge-ring table."""
    I = edge_ideal(graph_from_lattice(L))
    quotient = betti_oracle(I, field=field).to_quotient()
    pd_RI, _ = pd_and_reg_H(L)
    report.add(
        "depth_reg_pd_vs_oracle",
        (
            quotient.pd() == pd_RI
            and quotient.depth(2 * L.n) == depth_edge_ring(L)
            and quotient.reg() == regularity_edge_ring(L)
        ),
        (quotient.pd(), quotient.depth(2 * L.n), quotient.reg()),
    )
    claimed = extremal_multigraded_edge_ring(L)
    report.add(
        "extremal_transfer",
        all(quotient.value(i, b) == v for i, b, v in claimed),
    )
    graded_formula = extremal_graded_edge_ring(L)
    graded_oracle = quotient.extremal_graded()
    if graded_formula != graded_oracle:
        report.find(
            "graded_extremal_mismatch", (graded_formula, graded_oracle)
        )
    bound = last_betti_lower_bound(L)
    t = quotient.t()
    report.add("last_betti_bound", t >= bound, (t, bound))
    if t > bound:
        report.find("bound_strict", (t, bound))
    else:
        report.find("bound_equality", (t, bound))
    if is_cohen_macaulay(L):
        report.add("cm_extremal_placement", cm_extremal_placement_check(I, quotient))
    return quotient


def check_extremal_transfer_spot(L, report, field="Q"):
    """Oracle value at each transferred extremal position, without the full
    edge-ring table (one homology computation per claimed position)."""
    I = edge_ideal(graph_from_lattice(L))
    ok = all(
        betti_value_at(I, b, i - 1, field=field) == v
        for i, b, v in extremal_multigraded_edge_ring(L)
    )
    report.add("extremal_transfer_spot", ok)


def check_bound_audit_spot(L, report, field="Q"):
    """t(R/I) >= |B_G| using only the top homological degree of the table."""
    I = edge_ideal(graph_from_lattice(L))
    pd_RI, _ = pd_and_reg_H(L)
    t = total_betti_in_degree(I, pd_RI - 1, field=field)
    bound = last_betti_lower_bound(L)
    report.add("last_betti_bound", t >= bound, (t, bound))
    report.find("bound_strict" if t > bound else "bound_equality", (t, bound))


def run_checks(L, level="formulas", field="Q", mutate=False):
    """Run the property suite on one lattice.

    level "formulas" runs the structural and resolution checks; "oracle"
    additionally compares everything against the homology oracle.  The
    mutate flag flips the sign of one differential entry first, as a
    self-test that the d^2 = 0 check can fail.
    """
    report = CheckReport()
    check_lemma_distinct_meets(L, report)
    check_lemma_corollary(L, report)
    check_rank_two(L, report)
    check_interval_monotonicity(L, report)
    check_interval_bijection(L, report)
    check_graph_round_trip(L, report)
    check_duality(L, report)
    check_formula_consistency(L, report)
    if mutate:
        C = build_resolution(L)
        _mutate_differential(C)
        report.add("complex_d_squared_zero", bool(verify_complex(C)))
        return report
    _, basis_table = check_resolution(L, report, field=field)
    if level == "oracle":
        check_oracle_hibi(L, basis_table, report, field=field)
        check_oracle_edge_ring(L, report, field=field)
    return report


def _mutate_differential(C):
    """Negate one differential term (debug aid for the verify command)."""
    for per_source in C.diffs:
        for entries in per_source:
            if entries:
                tpos, sign, coeff = entries[0]
                entries[0] = (tpos, -sign, coeff)
                return
    raise ValueError("resolution has no differential entries to mutate")
