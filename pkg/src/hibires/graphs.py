"""Bipartite graphs, vertex covers, and the cover lattice in both directions."""

from dataclasses import dataclass, field

from .bitset import full_mask, indices_of, is_subset
from .errors import (
    EmptyInput,
    InputFormatError,
    LatticeValidation,
    NoPerfectMatching,
    NotUnmixed,
    TooLarge,
)
from .lattice import validate_sublattice

ENUMERATION_BOUND = 24  # max total vertices for exhaustive cover enumeration


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with 1-based sides [n_left] x [n_right].

    A normalized graph has equal sides and contains every matching edge
    (i, i); ``n`` is then the number of matched pairs.
    """

    n_left: int
    n_right: int
    edges: frozenset
    raw_labels: dict = field(default=None, compare=False)

    @property
    def n(self):
        if not self.is_normalized:
            raise ValueError("n is only defined for normalized graphs")
        return self.n_left

    @property
    def is_normalized(self):
        return self.n_left == self.n_right and all(
            (i, i) in self.edges for i in range(1, self.n_left + 1)
        )

    def __post_init__(self):
        if self.n_left < 1 or self.n_right < 1 or not self.edges:
            raise EmptyInput("graph must have vertices on both sides and an edge")
        for i, j in self.edges:
            if not (1 <= i <= self.n_left and 1 <= j <= self.n_right):
                raise InputFormatError(f"edge ({i},{j}) out of range")
        lefts = {i for i, _ in self.edges}
        rights = {j for _, j in self.edges}
        if lefts != set(range(1, self.n_left + 1)) or rights != set(
            range(1, self.n_right + 1)
        ):
            raise EmptyInput("graph has an isolated vertex")


@dataclass(frozen=True)
class VertexCover:
    """Vertex cover split by side: xs over [n_left], ys over [n_right]."""

    xs: int
    ys: int

    @property
    def size(self):
        return self.xs.bit_count() + self.ys.bit_count()


def _perfect_matching(n, adj):
    """Left->right matching by augmenting paths, lowest index first.

    adj[i] is the sorted list of right neighbors of left vertex i.
    Returns match_left (1-based dict) or None.
    """
    match_right = {}
    match_left = {}

    def augment(i, seen):
        for j in adj[i]:
            if j in seen:
                continue
            seen.add(j)
            if j not in match_right or augment(match_right[j], seen):
                match_right[j] = i
                match_left[i] = j
                return True
        return False

    for i in range(1, n + 1):
        if not augment(i, set()):
            return None
    return match_left


def normalize_graph(raw_edges):
    """Relabel so the perfect matching is (i, i) for every i.

    raw_edges are (left-label, right-label) pairs with arbitrary hashable
    labels.  Raises NoPerfectMatching when sides differ in size or no
    perfect matching exists (such a graph cannot be unmixed bipartite).
    """
    raw_edges = list(dict.fromkeys(raw_edges))
    if not raw_edges:
        raise EmptyInput("no edges given")
    lefts = sorted({a for a, _ in raw_edges}, key=str)
    rights = sorted({b for _, b in raw_edges}, key=str)
    if len(lefts) != len(rights):
        raise NoPerfectMatching(
            f"side sizes differ: {len(lefts)} vs {len(rights)}"
        )
    n = len(lefts)
    lidx = {a: i for i, a in enumerate(lefts, 1)}
    ridx = {b: j for j, b in enumerate(rights, 1)}
    adj = {i: [] for i in range(1, n + 1)}
    for a, b in raw_edges:
        adj[lidx[a]].append(ridx[b])
    for i in adj:
        adj[i] = sorted(set(adj[i]))
    match = _perfect_matching(n, adj)
    if match is None:
        raise NoPerfectMatching("the graph has no perfect matching")
    # right vertex matched to left i becomes y_i
    right_relabel = {match[i]: i for i in range(1, n + 1)}
    edges = frozenset(
        (lidx[a], right_relabel[ridx[b]]) for a, b in raw_edges
    )
    labels = {
        "left": {i: lefts[i - 1] for i in range(1, n + 1)},
        "right": {right_relabel[j]: rights[j - 1] for j in range(1, n + 1)},
    }
    return BipartiteGraph(n, n, edges, labels)


def minimal_vertex_covers(G, bound=ENUMERATION_BOUND):
    """All minimal vertex covers, by enumeration over left-side subsets.

    For each subset xs of the left side, xs together with the right
    vertices of the edges it misses is a cover, and every minimal cover
    arises this way; an inclusion filter then keeps the minimal ones.
    """
    if G.n_left + G.n_right > bound:
        raise TooLarge(
            f"{G.n_left + G.n_right} vertices exceed the enumeration bound {bound}"
        )
    candidates = set()
    for xs in range(1 << G.n_left):
        ys = 0
        for i, j in G.edges:
            if not xs >> (i - 1) & 1:
                ys |= 1 << (j - 1)
        candidates.add((xs, ys))
    covers = set()
    for xs, ys in candidates:
        if not any(
            (oxs, oys) != (xs, ys) and is_subset(oxs, xs) and is_subset(oys, ys)
            for oxs, oys in candidates
        ):
            covers.add(VertexCover(xs, ys))
    return covers


def is_unmixed(G, bound=ENUMERATION_BOUND):
    """True when all minimal vertex covers have the same cardinality."""
    sizes = {c.size for c in minimal_vertex_covers(G, bound)}
    return len(sizes) == 1


def _implication_lattice_family(G):
    """Fast path: subsets p of [n] with j in p => i in p for every edge (i, j)."""
    n = G.n
    fam = []
    for p in range(1 << n):
        if all(
            not (p >> (j - 1) & 1) or (p >> (i - 1) & 1) for i, j in G.edges
        ):
            fam.append(p)
    return set(fam)


def cover_lattice(G, bound=ENUMERATION_BOUND):
    """The lattice {xs(C) : C minimal vertex cover} for a normalized unmixed G.

    Computed by the edge-implication fast path and, within the enumeration
    bound, cross-checked against the cover-enumeration slow path.
    """
    if not G.is_normalized:
        raise NotUnmixed("graph must be normalized first (use normalize_graph)")
    fam = _implication_lattice_family(G)
    if G.n_left + G.n_right <= bound:
        if not is_unmixed(G, bound):
            raise NotUnmixed("graph has minimal vertex covers of different sizes")
        slow = {c.xs for c in minimal_vertex_covers(G, bound)}
        if slow != fam:
            raise LatticeValidation(
                "implication path and cover enumeration disagree (internal bug)"
            )
    return validate_sublattice(fam, G.n)


def graph_from_lattice(L):
    """The unmixed bipartite graph whose cover lattice is L.

    Edge (i, j) is present exactly when every lattice element containing j
    also contains i; the result is normalized and round-trips through
    cover_lattice.
    """
    n = L.n
    edges = set()
    for j in range(1, n + 1):
        jbit = 1 << (j - 1)
        forced = full_mask(n)
        for p in L.elements:
            if p & jbit:
                forced &= p
        for i in indices_of(forced):
            edges.add((i, j))
    return BipartiteGraph(n, n, frozenset(edges))


# --- text / JSON formats -------------------------------------------------

def parse_graph_text(text):
    """Parse the graph text format.

    First line "graph <n_left> <n_right>"; further non-comment lines "i j"
    for the edge {left_i, right_j}.
    """
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise InputFormatError("empty graph file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "graph":
        raise InputFormatError("first line must be 'graph <n_left> <n_right>'")
    nl, nr = int(head[1]), int(head[2])
    edges = set()
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 2:
            raise InputFormatError(f"bad edge line: {ln!r}")
        edges.add((int(toks[0]), int(toks[1])))
    return BipartiteGraph(nl, nr, frozenset(edges))


def graph_to_text(G):
    lines = [f"graph {G.n_left} {G.n_right}"]
    for i, j in sorted(G.edges):
        lines.append(f"{i} {j}")
    return "\n".join(lines) + "\n"


def graph_to_json_obj(G):
    return {
        "left": G.n_left,
        "right": G.n_right,
        "edges": [list(e) for e in sorted(G.edges)],
    }


def graph_from_json_obj(obj):
    return BipartiteGraph(
        int(obj["left"]),
        int(obj["right"]),
        frozenset((int(i), int(j)) for i, j in obj["edges"]),
    )
