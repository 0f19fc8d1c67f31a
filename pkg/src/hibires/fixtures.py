"""Named fixture lattices used across the package and its test suite.

FIG1 is a 10-element sublattice of B_7 chosen so that the defect function
f takes value 1 at {1,2,3}, {1,2,3,4} and the top, value 0 at {1,2,3,5}
and {1,2,3,4,5}, and the unique graded extremal position of the edge ring
is (8, 10) with value 2.  The element {3} is required for closure once
both {3,4} and {1,2,3} are present.
"""

from .bitset import mask_of
from .lattice import lattice_to_text, validate_sublattice


def _lattice(n, *element_lists):
    return validate_sublattice({mask_of(e, n) for e in element_lists}, n)


def e1():
    """Single edge: L = {empty, {1}}."""
    return _lattice(1, [], [1])


def k22():
    """Complete bipartite on two pairs: L = {empty, {1,2}}."""
    return _lattice(2, [], [1, 2])


def chain():
    """Path on two pairs: the chain {empty, {1}, {1,2}}."""
    return _lattice(2, [], [1], [1, 2])


def b2():
    """Two disjoint edges: the full Boolean lattice B_2."""
    return _lattice(2, [], [1], [2], [1, 2])


def fig1():
    """Reconstructed 10-element sublattice of B_7 (see module docstring)."""
    return _lattice(
        7,
        [],
        [3],
        [1, 2],
        [3, 4],
        [1, 2, 3],
        [1, 2, 5],
        [1, 2, 3, 4],
        [1, 2, 3, 5],
        [1, 2, 3, 4, 5],
        [1, 2, 3, 4, 5, 6, 7],
    )


FIXTURES = {
    "E1": e1,
    "K22": k22,
    "CHAIN": chain,
    "B2": b2,
    "FIG1": fig1,
}


def fixture_lattice(name):
    return FIXTURES[name.upper()]()


def fixture_files():
    """Name -> lattice text file content, for export by the CLI."""
    return {name: lattice_to_text(fn()) for name, fn in FIXTURES.items()}
