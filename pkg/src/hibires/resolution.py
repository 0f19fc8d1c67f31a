"""Explicit minimal multigraded free resolution of the lattice ideal H_L.

The free module at homological degree i has basis elements b(p; S) with p
a lattice element and S an i-element subset of the lower neighbors N(p).
The differential sends b(p; S), for each q in S, to a y-monomial multiple
of b(p; S \\ {q}) and an x-monomial multiple of b(q; q meet (S \\ {q})),
with alternating signs governed by the position of q inside S.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .betti import BettiTable
from .bitset import full_mask, order_key
from .errors import HomDegreeZero, TooManyNeighbors
from .ideals import Monomial, lattice_generator, x_monomial, y_monomial
from .lattice import lattice_to_json_obj
from .linalg import rank_exact

NEIGHBOR_CAP = 20  # max |N(p)| before basis enumeration is refused


@dataclass(frozen=True)
class BasisElement:
    """Basis element b(p; S); S is kept sorted by the lattice total order."""

    p: int
    S: tuple
    multidegree: Monomial

    @property
    def hom_degree(self):
        return len(self.S)


def multidegree_of(L, p, S):
    """X_p * Y over the complement of the meet of S (empty meet = p)."""
    meet = L.meet_of(S, p)
    return Monomial.of(p, full_mask(L.n) & ~meet)


def resolution_basis(L, neighbor_cap=NEIGHBOR_CAP):
    """Levels of basis elements; level i holds all b(p; S) with |S| = i.

    Within a level, elements are ordered by p in the lattice order, then
    by S lexicographically in the order of N(p).
    """
    for p in L.elements:
        if len(L.neighbors(p)) > neighbor_cap:
            raise TooManyNeighbors(
                f"|N(p)| = {len(L.neighbors(p))} exceeds the cap {neighbor_cap}"
            )
    top_level = max(len(L.neighbors(p)) for p in L.elements)
    levels = []
    for i in range(top_level + 1):
        level = []
        for p in L.elements:
            nb = L.neighbors(p)
            for S in combinations(nb, i):
                level.append(BasisElement(p, S, multidegree_of(L, p, S)))
        levels.append(level)
    return levels


def differential(L, g):
    """Terms of the differential applied to one basis element.

    Returns a list of (target BasisElement, sign, coefficient Monomial).
    The two term families never share a target: one keeps p, the other
    moves to some q in S.
    """
    if g.hom_degree == 0:
        raise HomDegreeZero("degree-0 elements map through the augmentation")
    p, S = g.p, g.S
    terms = []
    for sigma, q in enumerate(S):
        rest = tuple(r for r in S if r != q)
        sign = -1 if sigma % 2 else 1
        # y-term: stay at p, drop q from S
        target1 = BasisElement(p, rest, multidegree_of(L, p, rest))
        ycoeff = y_monomial(L.meet_of(rest, p) & ~q)
        terms.append((target1, sign, ycoeff))
        # x-term: descend to q, meet the rest of S into N(q)
        T = tuple(sorted({q & r for r in rest}, key=order_key))
        target2 = BasisElement(q, T, multidegree_of(L, q, T))
        terms.append((target2, -sign, x_monomial(p & ~q)))
    targets = [(t.p, t.S) for t, _, _ in terms]
    assert len(targets) == len(set(targets)), "differential targets collided"
    return terms


@dataclass
class ResolutionComplex:
    """Basis levels plus sparse differentials with signed monomial entries.

    diffs[i] maps each level-(i+1) source position to its list of
    (target position in level i, sign, coefficient monomial).
    """

    L: object
    levels: list
    diffs: list
    index: dict

    @property
    def top_level(self):
        return len(self.levels) - 1

    def level_ranks(self):
        return [len(lv) for lv in self.levels]

    def augmentation(self, g):
        """Image of a degree-0 basis element: the generator attached to p."""
        assert g.hom_degree == 0
        return lattice_generator(self.L, g.p)


def build_resolution(L, neighbor_cap=NEIGHBOR_CAP):
    levels = resolution_basis(L, neighbor_cap)
    index = {
        (g.p, g.S): (i, pos)
        for i, lv in enumerate(levels)
        for pos, g in enumerate(lv)
    }
    diffs = []
    for i in range(1, len(levels)):
        per_source = []
        for g in levels[i]:
            entries = []
            for target, sign, coeff in differential(L, g):
                ti, tpos = index[(target.p, target.S)]
                assert ti == i - 1
                # multigraded homogeneity of the entry
                assert target.multidegree.lcm(coeff) == g.multidegree
                assert coeff.divides(g.multidegree)
                entries.append((tpos, sign, coeff))
            per_source.append(entries)
        diffs.append(per_source)
    expected = [
        sum(comb(len(L.neighbors(p)), i) for p in L.elements)
        for i in range(len(levels))
    ]
    assert [len(lv) for lv in levels] == expected
    return ResolutionComplex(L, levels, diffs, index)


@dataclass
class CheckResult:
    ok: bool
    failure: object = None

    def __bool__(self):
        return self.ok


def verify_complex(C):
    """Check that consecutive differentials compose to zero.

    Compositions are expanded symbolically over integer coefficients; the
    augmentation composed with the first differential must also vanish.
    Returns a falsy result carrying the first violating pair on failure.
    """
    # augmentation after the first differential
    if C.diffs:
        for src_pos, g in enumerate(C.levels[1]):
            acc = {}
            for tpos, sign, coeff in C.diffs[0][src_pos]:
                u = C.augmentation(C.levels[0][tpos])
                m = coeff.times_disjoint(u)
                key = (m.xmask, m.ymask)
                acc[key] = acc.get(key, 0) + sign
            if any(acc.values()):
                return CheckResult(False, ("augmentation", g, acc))
    for i in range(1, len(C.diffs)):
        for src_pos, g in enumerate(C.levels[i + 1]):
            acc = {}
            for mid_pos, sign1, coeff1 in C.diffs[i][src_pos]:
                for tpos, sign2, coeff2 in C.diffs[i - 1][mid_pos]:
                    m = coeff1.times_disjoint(coeff2)
                    key = (tpos, m.xmask, m.ymask)
                    acc[key] = acc.get(key, 0) + sign1 * sign2
            if any(acc.values()):
                return CheckResult(False, (i + 1, g, acc))
    return CheckResult(True)


def verify_minimality(C):
    """Check no differential entry is a nonzero constant."""
    for i, per_source in enumerate(C.diffs):
        for src_pos, entries in enumerate(per_source):
            for tpos, sign, coeff in entries:
                if coeff.is_unit:
                    return CheckResult(
                        False, (i + 1, C.levels[i + 1][src_pos], tpos)
                    )
    return CheckResult(True)


def strand_exactness(C, I, b, field="Q"):
    """Exactness of the degree-b strand of the augmented complex.

    Basis elements survive when their multidegree divides b; entries
    become their integer signs.  The augmentation maps onto the
    one-dimensional degree-b component of the ideal when some generator
    divides b.  True iff the resulting complex of vector spaces is exact
    in every positive position and the augmentation is onto when present.
    """
    survivors = [
        [pos for pos, g in enumerate(lv) if g.multidegree.divides(b)]
        for lv in C.levels
    ]
    local = [
        {pos: k for k, pos in enumerate(sv)} for sv in survivors
    ]
    dims = [len(sv) for sv in survivors]
    has_ideal_component = I.contains_monomial(b)
    if has_ideal_component and dims[0] == 0:
        return False  # augmentation cannot be surjective
    # ranks of the restricted sign matrices, one per differential
    ranks = []
    for i, per_source in enumerate(C.diffs):
        rows = []
        for pos in survivors[i + 1]:
            row = {}
            for tpos, sign, _ in per_source[pos]:
                if tpos in local[i]:
                    row[local[i][tpos]] = sign
            rows.append(row)
        ranks.append(rank_exact(rows, dims[i], field))
    aug_rank = 1 if has_ideal_component else 0
    # exactness at level 0 against the augmentation, then at each level up;
    # at the top the last differential must be injective
    prev = aug_rank
    for i in range(len(C.diffs)):
        if ranks[i] + prev != dims[i]:
            return False
        prev = ranks[i]
    return dims[-1] == prev


def betti_table_from_basis(L):
    """Betti table of H_L read off the basis: one count per (level, multidegree)."""
    table = BettiTable(L.n, "ideal")
    for i, level in enumerate(resolution_basis(L)):
        for g in level:
            table.add(i, g.multidegree, 1)
    return table


# --- JSON dump -----------------------------------------------------------

def complex_to_json_obj(C):
    from .bitset import indices_of

    levels = [
        [
            {
                "p": indices_of(g.p),
                "S": [indices_of(q) for q in g.S],
                "multideg": {
                    "x": indices_of(g.multidegree.xmask),
                    "y": indices_of(g.multidegree.ymask),
                },
            }
            for g in lv
        ]
        for lv in C.levels
    ]
    diffs = []
    for i, per_source in enumerate(C.diffs):
        entries = []
        for src, terms in enumerate(per_source):
            for tpos, sign, coeff in terms:
                entries.append(
                    {
                        "source": src,
                        "target": tpos,
                        "sign": sign,
                        "monomial": coeff.render(),
                    }
                )
        diffs.append(entries)
    return {"lattice": lattice_to_json_obj(C.L), "levels": levels, "diffs": diffs}
