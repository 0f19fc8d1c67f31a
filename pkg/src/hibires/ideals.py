"""Squarefree monomials and monomial ideals in K[x_1..x_n, y_1..y_n]."""

from dataclasses import dataclass

from .bitset import full_mask, indices_of, is_subset, mask_of
from .errors import ClosureTooLarge, ZeroIdeal

GENERATOR_CAP = 64  # cap for the transversal expansion
CLOSURE_CAP = 5000  # cap for lcm-closure size


@dataclass(frozen=True, order=True)
class Monomial:
    """Squarefree monomial: xmask over the x-variables, ymask over the y's.

    Ordering is (degree, xmask, ymask), the canonical generator order.
    """

    degree: int
    xmask: int
    ymask: int

    @staticmethod
    def of(xmask, ymask):
        return Monomial(xmask.bit_count() + ymask.bit_count(), xmask, ymask)

    @property
    def is_unit(self):
        return self.xmask == 0 and self.ymask == 0

    def divides(self, other):
        return is_subset(self.xmask, other.xmask) and is_subset(
            self.ymask, other.ymask
        )

    def lcm(self, other):
        return Monomial.of(self.xmask | other.xmask, self.ymask | other.ymask)

    def quotient(self, other):
        """self / other, defined when other divides self."""
        assert other.divides(self)
        return Monomial.of(self.xmask & ~other.xmask, self.ymask & ~other.ymask)

    def times_disjoint(self, other):
        """Product of monomials with disjoint supports (stays squarefree)."""
        assert self.xmask & other.xmask == 0 and self.ymask & other.ymask == 0
        return Monomial.of(self.xmask | other.xmask, self.ymask | other.ymask)

    def strictly_divides(self, other):
        return self != other and self.divides(other)

    def render(self):
        parts = [f"x{i}" for i in indices_of(self.xmask)]
        parts += [f"y{j}" for j in indices_of(self.ymask)]
        return "*".join(parts) if parts else "1"


UNIT = Monomial.of(0, 0)


def x_monomial(mask):
    return Monomial.of(mask, 0)


def y_monomial(mask):
    return Monomial.of(0, mask)


def _minimalize(monomials):
    """Keep the divisibility-minimal monomials, canonically sorted."""
    ms = sorted(set(monomials))
    out = []
    for m in ms:
        if not any(g.divides(m) for g in out):
            out.append(m)
    return tuple(out)


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal generating set of squarefree monomials, 2n ambient variables."""

    n: int
    gens: tuple

    @staticmethod
    def of(n, monomials):
        return MonomialIdeal(n, _minimalize(monomials))

    @property
    def is_zero(self):
        return not self.gens

    def contains_monomial(self, m):
        return any(g.divides(m) for g in self.gens)

    def render(self):
        return "(" + ", ".join(g.render() for g in self.gens) + ")"


def hibi_ideal(L):
    """Generators u_p = X_p * Y_(complement of p) over the lattice elements.

    Distinct p give incomparable monomials, so no minimalization happens.
    """
    top = full_mask(L.n)
    gens = [Monomial.of(p, top & ~p) for p in L.elements]
    I = MonomialIdeal.of(L.n, gens)
    assert len(I.gens) == len(L.elements)
    return I


def lattice_generator(L, p):
    """The generator u_p attached to a lattice element."""
    return Monomial.of(p, full_mask(L.n) & ~p)


def edge_ideal(G):
    """Generators x_i * y_j over the edges of a normalized graph."""
    gens = [
        Monomial.of(1 << (i - 1), 1 << (j - 1)) for i, j in G.edges
    ]
    return MonomialIdeal.of(G.n, gens)


def alexander_dual(I, cap=GENERATOR_CAP):
    """Minimal transversals of the generator supports.

    Incremental expand-and-minimalize: fold the generators in one at a
    time, multiplying each partial transversal by each variable of the
    next generator and pruning non-minimal products.  Involutive on
    minimalized squarefree ideals.
    """
    if I.is_zero:
        raise ZeroIdeal("the zero ideal has no Alexander dual")
    if len(I.gens) > cap:
        raise ClosureTooLarge(f"{len(I.gens)} generators exceed the cap {cap}")
    trans = [UNIT]
    for g in I.gens:
        variables = [x_monomial(1 << (i - 1)) for i in indices_of(g.xmask)]
        variables += [y_monomial(1 << (j - 1)) for j in indices_of(g.ymask)]
        trans = list(_minimalize(t.lcm(v) for t in trans for v in variables))
    return MonomialIdeal(I.n, tuple(trans))


def lcm_closure(I, cap=CLOSURE_CAP):
    """Smallest set containing the generators and closed under pairwise lcm.

    These are the lcm-lattice elements above the bottom; every multidegree
    with a nonzero Betti number lies here.
    """
    if I.is_zero:
        raise ZeroIdeal("the zero ideal has an empty lcm closure")
    closure = set(I.gens)
    frontier = set(I.gens)
    while frontier:
        new = set()
        for m in frontier:
            for g in I.gens:
                l = m.lcm(g)
                if l not in closure:
                    new.add(l)
        closure |= new
        if len(closure) > cap:
            raise ClosureTooLarge(f"lcm closure exceeds the cap {cap}")
        frontier = new
    return sorted(closure)


# --- JSON format ---------------------------------------------------------

def ideal_to_json_obj(I):
    return {
        "n": I.n,
        "gens": [
            {"x": indices_of(g.xmask), "y": indices_of(g.ymask)} for g in I.gens
        ],
    }


def ideal_from_json_obj(obj):
    n = int(obj["n"])
    gens = [
        Monomial.of(mask_of(g["x"], n), mask_of(g["y"], n)) for g in obj["gens"]
    ]
    return MonomialIdeal.of(n, gens)
