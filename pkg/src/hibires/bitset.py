"""Subsets of [n] as machine integers.

A subset mask stores index i (1-based in all user-facing formats) at bit
i-1.  All lattice and monomial code works on these plain ints; the ground
set size n travels with the containing object.
"""

from itertools import combinations

MAX_GROUND = 32


def mask_of(indices, n):
    """Build a mask from 1-based indices."""
    m = 0
    for i in indices:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range 1..{n}")
        m |= 1 << (i - 1)
    return m


def indices_of(mask):
    """1-based indices of the set bits, ascending."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def full_mask(n):
    return (1 << n) - 1


def is_subset(a, b):
    return a & b == a


def popcount(mask):
    return mask.bit_count()


def order_key(mask):
    """Sort key for the fixed total order: cardinality, then bit pattern.

    Any linear extension of containment works for the resolution; this one
    is deterministic and cheap.
    """
    return (mask.bit_count(), mask)


def submasks(mask):
    """All submasks of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def masks_of_size(mask, k):
    """Submasks of mask with exactly k bits set."""
    bits = [1 << (i - 1) for i in indices_of(mask)]
    for combo in combinations(bits, k):
        m = 0
        for b in combo:
            m |= b
        yield m


def render_set(mask):
    """Human-readable set, e.g. '{1,3}' or 'empty'."""
    idx = indices_of(mask)
    return "{" + ",".join(map(str, idx)) + "}" if idx else "empty"
