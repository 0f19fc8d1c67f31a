"""Closed-form homological invariants of the edge ring from the lattice.

Everything here is a direct lattice computation: depth, regularity and
projective dimension of R/I(G), the extremal Betti data transferred from
the lattice ideal by Alexander duality, and the lower bound on the last
total Betti number.
"""

from dataclasses import dataclass, field

from .bitset import indices_of
from .errors import NotCM
from .ideals import alexander_dual
from .lattice import a_set, b_set, f_value
from .resolution import multidegree_of


def _max_f(L):
    return max(f_value(L, p) for p in a_set(L))


def depth_edge_ring(L):
    """depth(R/I(G)) = n - max f(p) over the maximal-interval elements."""
    return L.n - _max_f(L)


def regularity_edge_ring(L):
    """reg(R/I(G)) = max |N(p)| over the lattice."""
    return max(len(L.neighbors(p)) for p in L.elements)


def pd_and_reg_H(L):
    """(pd(R/I(G)) = reg(H_L), pd(H_L) = top resolution level)."""
    return L.n + _max_f(L), regularity_edge_ring(L)


def extremal_multigraded_H(L):
    """Extremal positions of the lattice ideal: (|N(p)|, multideg(b(p;N(p)))).

    One position per element of A_G, each with Betti value 1.
    """
    out = []
    for p in sorted(a_set(L)):
        nb = L.neighbors(p)
        out.append((len(nb), multidegree_of(L, p, nb)))
    return sorted(out)


def extremal_multigraded_edge_ring(L):
    """Extremal positions transferred to R/I(G) by duality.

    For p in A_G with b = multideg(b(p; N(p))), the quotient ring has
    Betti value 1 at homological degree |b| - |N(p)| and multidegree b.
    """
    out = []
    for i, b in extremal_multigraded_H(L):
        out.append((b.degree - i, b, 1))
    return sorted(out, key=lambda e: (e[0], e[1]))


def extremal_graded_edge_ring(L):
    """Graded extremal positions (i, i+j) of R/I(G), with witness counts.

    A witness is p in A_G with i = n + f(p), j = |N(p)| such that every
    q in A_G with more lower neighbors has a strictly smaller f-value, and
    every q with equally many satisfies |q| - |meet(N(q))| <= the same
    quantity for p.
    """
    A = sorted(a_set(L))
    stats = {}
    for p in A:
        nb = L.neighbors(p)
        stats[p] = (
            len(nb),
            f_value(L, p),
            p.bit_count() - L.meet_of(nb, p).bit_count(),
        )
    out = {}
    for p in A:
        j, fp, span_p = stats[p]
        ok = all(
            fq < fp for q, (jq, fq, _) in stats.items() if jq > j
        ) and all(
            span_q <= span_p
            for q, (jq, _, span_q) in stats.items()
            if jq == j and q != p
        )
        if ok:
            i = L.n + fp
            key = (i, i + j)
            out[key] = out.get(key, 0) + 1
    return out


def last_betti_lower_bound(L):
    """|B_G|, a lower bound for the last total Betti number of R/I(G)."""
    return len(b_set(L))


def is_cohen_macaulay(L):
    """depth = dim = n, equivalently max f over A_G is zero."""
    return _max_f(L) == 0


def cm_extremal_placement_check(I, oracle_table):
    """Every extremal position of a CM quotient sits at pd(R/I).

    oracle_table must be the full multigraded table of R/I.  Raises NotCM
    when depth differs from dim (computed as ambient minus the smallest
    generator degree of the Alexander dual, the codimension).
    """
    assert oracle_table.subject == "quotient"
    ambient = 2 * I.n
    codim = min(g.degree for g in alexander_dual(I).gens)
    depth = oracle_table.depth(ambient)
    if depth != ambient - codim:
        raise NotCM(f"depth {depth} != dim {ambient - codim}")
    pd = oracle_table.pd()
    return all(i == pd for i, _, _ in oracle_table.extremal_multigraded())


@dataclass
class InvariantReport:
    """All lattice-side invariants of one instance, serializable to JSON."""

    n: int
    depth_RI: int
    reg_RI: int
    pd_RI: int
    reg_H: int
    pd_H: int
    a_set: list
    b_set: list
    extremal_H: list
    extremal_RI_multigraded: list
    extremal_RI_graded: dict
    last_betti_lower_bound: int
    is_cm: bool
    lattice_size: int = 0
    level_ranks: list = field(default_factory=list)

    def to_json_obj(self):
        return {
            "n": self.n,
            "depth": self.depth_RI,
            "reg": self.reg_RI,
            "pd": self.pd_RI,
            "reg_H": self.reg_H,
            "pd_H": self.pd_H,
            "a_set": [indices_of(p) for p in self.a_set],
            "b_set": [indices_of(p) for p in self.b_set],
            "extremal_H": [
                {"i": i, "deg": b.render()} for i, b in self.extremal_H
            ],
            "extremal_multigraded": [
                {"i": i, "deg": b.render(), "value": v}
                for i, b, v in self.extremal_RI_multigraded
            ],
            "extremal_graded": [
                {"i": i, "j": j, "value": v}
                for (i, j), v in sorted(self.extremal_RI_graded.items())
            ],
            "last_betti_lower_bound": self.last_betti_lower_bound,
            "cohen_macaulay": self.is_cm,
            "lattice_size": self.lattice_size,
            "resolution_level_ranks": self.level_ranks,
        }


def invariant_report(L, level_ranks=None):
    pd_RI, pd_H = pd_and_reg_H(L)
    return InvariantReport(
        n=L.n,
        depth_RI=depth_edge_ring(L),
        reg_RI=regularity_edge_ring(L),
        pd_RI=pd_RI,
        reg_H=pd_RI,
        pd_H=pd_H,
        a_set=sorted(a_set(L)),
        b_set=sorted(b_set(L)),
        extremal_H=extremal_multigraded_H(L),
        extremal_RI_multigraded=extremal_multigraded_edge_ring(L),
        extremal_RI_graded=extremal_graded_edge_ring(L),
        last_betti_lower_bound=last_betti_lower_bound(L),
        is_cm=is_cohen_macaulay(L),
        lattice_size=len(L),
        level_ranks=level_ranks or [],
    )
