"""Brute-force Betti numbers via simplicial homology of upper Koszul complexes.

Independent of the closed-form resolution: for each candidate multidegree
b, build the simplicial complex of variable subsets that still divide into
the ideal, and read the Betti number off the reduced homology ranks of its
boundary matrices, computed with exact linear algebra.
"""

from dataclasses import dataclass

from .betti import BettiTable
from .errors import ClosureTooLarge, ZeroIdeal
from .ideals import lcm_closure
from .linalg import rank_exact

# variables are numbered 0..2n-1: x_i at bit i-1, y_j at bit n+j-1


def _combined(mono, n):
    return mono.xmask | (mono.ymask << n)


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces stored as bit masks over the vertex set, grouped by dimension.

    faces[d] lists the faces of dimension d; the empty face has dimension
    -1 and is present iff the complex is nonvoid.
    """

    vertices: tuple
    faces: dict

    @property
    def dim(self):
        return max(self.faces, default=-2)

    def face_count(self, d):
        return len(self.faces.get(d, ()))


def upper_koszul_complex(I, b):
    """Subsets t of supp(b) with b/t still in the ideal.

    Downward closure is automatic (dividing out fewer variables keeps the
    monomial in the ideal) and asserted.
    """
    n = I.n
    bmask = _combined(b, n)
    gens = [_combined(g, n) for g in I.gens if g.divides(b)]
    verts = tuple(i for i in range(2 * n) if bmask >> i & 1)
    faces = {}
    sub = bmask
    while True:
        rest = bmask & ~sub
        if any(g & ~rest == 0 for g in gens):
            faces.setdefault(sub.bit_count() - 1, []).append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & bmask
    all_faces = {f for fs in faces.values() for f in fs}
    for f in all_faces:
        for i in range(2 * n):
            if f >> i & 1:
                assert f & ~(1 << i) in all_faces, "complex not downward closed"
    return SimplicialComplex(verts, {d: sorted(fs) for d, fs in faces.items()})


def _boundary_matrix(K, d):
    """Sparse rows (one per d-face) of the boundary map into dimension d-1."""
    lower = {f: i for i, f in enumerate(K.faces.get(d - 1, ()))}
    rows = []
    for f in K.faces.get(d, ()):
        row = {}
        bits = [i for i in range(f.bit_length()) if f >> i & 1]
        for t, i in enumerate(bits):
            sub = f & ~(1 << i)
            row[lower[sub]] = 1 if t % 2 == 0 else -1
        rows.append(row)
    return rows


def reduced_homology_ranks(K, field="Q"):
    """Ranks of reduced homology, as a dict degree -> rank (degree >= -1)."""
    if K.dim < -1:
        return {}
    boundary_rank = {}
    for d in range(0, K.dim + 1):
        boundary_rank[d] = rank_exact(
            _boundary_matrix(K, d), K.face_count(d - 1), field
        )
    out = {}
    for d in range(-1, K.dim + 1):
        h = (
            K.face_count(d)
            - boundary_rank.get(d, 0)
            - boundary_rank.get(d + 1, 0)
        )
        if h:
            out[d] = h
    return out


def betti_oracle(I, field="Q", closure_cap=5000, degree_filter=None):
    """Multigraded Betti table of the ideal from upper Koszul homology.

    Candidate multidegrees are the lcm closure of the generators; pass
    degree_filter (a set of total degrees) to restrict the computation to
    those total degrees only.
    """
    if I.is_zero:
        raise ZeroIdeal("the zero ideal has no Betti table")
    closure = lcm_closure(I, cap=closure_cap)
    if len(closure) > closure_cap:
        raise ClosureTooLarge(f"{len(closure)} multidegrees exceed the cap")
    table = BettiTable(I.n, "ideal")
    for b in closure:
        if degree_filter is not None and b.degree not in degree_filter:
            continue
        K = upper_koszul_complex(I, b)
        for d, h in reduced_homology_ranks(K, field).items():
            table.add(d + 1, b, h)
    return table


def _faces_of_size(I, b, k):
    """k-subsets t of supp(b) with b/t still in the ideal, as masks."""
    from itertools import combinations

    if k < 0:
        return []
    n = I.n
    bmask = _combined(b, n)
    gens = [_combined(g, n) for g in I.gens if g.divides(b)]
    if not gens:
        return []
    verts = [i for i in range(2 * n) if bmask >> i & 1]
    out = []
    for combo in combinations(verts, k):
        sub = 0
        for i in combo:
            sub |= 1 << i
        rest = bmask & ~sub
        if any(g & ~rest == 0 for g in gens):
            out.append(sub)
    return out


def betti_value_at(I, b, i, field="Q"):
    """Single Betti number beta_{i,b}(I), touching only three face sizes.

    Much cheaper than the full table when only a few positions matter
    (extremal spot checks, last-column totals).
    """
    if i == 0:
        return 1 if b in I.gens else 0
    mid = _faces_of_size(I, b, i)        # dimension i-1
    below = _faces_of_size(I, b, i - 1)  # dimension i-2
    above = _faces_of_size(I, b, i + 1)  # dimension i
    below_index = {f: k for k, f in enumerate(below)}
    mid_index = {f: k for k, f in enumerate(mid)}

    def boundary_rows(faces, lower_index):
        rows = []
        for f in faces:
            row = {}
            bits = [j for j in range(f.bit_length()) if f >> j & 1]
            for t, j in enumerate(bits):
                row[lower_index[f & ~(1 << j)]] = 1 if t % 2 == 0 else -1
            rows.append(row)
        return rows

    rank_down = rank_exact(boundary_rows(mid, below_index), len(below), field)
    rank_up = rank_exact(boundary_rows(above, mid_index), len(mid), field)
    return len(mid) - rank_down - rank_up


def total_betti_in_degree(I, i, field="Q", closure_cap=5000):
    """Total Betti number of the ideal in one homological degree."""
    return sum(
        betti_value_at(I, b, i, field=field) for b in lcm_closure(I, cap=closure_cap)
    )


def graded_betti_in_degree(I, i, total_degree, field="Q", closure_cap=5000):
    """Graded Betti number beta_{i, total_degree}(I), summed multigrade-wise."""
    return sum(
        betti_value_at(I, b, i, field=field)
        for b in lcm_closure(I, cap=closure_cap)
        if b.degree == total_degree
    )


@dataclass
class TableInvariants:
    pd: int
    reg: int
    depth: int
    totals: dict
    extremal_multigraded: list
    extremal_graded: dict
    t: int


def invariants_from_table(T, ambient_vars):
    """Homological invariants read off a complete Betti table."""
    return TableInvariants(
        pd=T.pd(),
        reg=T.reg(),
        depth=T.depth(ambient_vars),
        totals=T.totals(),
        extremal_multigraded=T.extremal_multigraded(),
        extremal_graded=T.extremal_graded(),
        t=T.t(),
    )
