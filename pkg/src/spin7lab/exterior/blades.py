"""Bitmask encoding of basis blades e^{i1} ^ ... ^ e^{ik} on R^8.

A blade is an int whose bit (i-1) is set iff the covector e^i appears.
Signs come from counting transpositions, so everything stays exact.
"""

from __future__ import annotations

from itertools import combinations

DIM = 8
FULL_MASK = (1 << DIM) - 1

__all__ = ["DIM", "FULL_MASK", "wedge_sign", "contract_sign", "mask_of",
           "indices_of", "complement_sign", "blades_of_degree"]


def wedge_sign(m1: int, m2: int) -> int:
    """Sign of blade(m1) ^ blade(m2) relative to blade(m1 | m2); 0 on overlap."""
    if m1 & m2:
        return 0
    sign = 1
    t = m2
    while t:
        low = t & -t
        j = low.bit_length() - 1
        if (m1 >> (j + 1)).bit_count() & 1:
            sign = -sign
        t ^= low
    return sign


def contract_sign(slot: int, mask: int) -> int:
    """Sign picked up when e_slot (0-based) is pulled out of the front of mask.

    Returns 0 if the slot is absent, else (-1)**(number of earlier slots).
    """
    bit = 1 << slot
    if not (mask & bit):
        return 0
    return -1 if (mask & (bit - 1)).bit_count() & 1 else 1


def mask_of(indices) -> tuple[int, int]:
    """(sign, mask) for a possibly unsorted list of 1-based indices.

    The sign is the parity of the permutation sorting the indices; it is 0
    when an index repeats (the blade collapses).
    """
    mask = 0
    sign = 1
    for idx in indices:
        if not 1 <= idx <= DIM:
            raise ValueError(f"index {idx} out of range 1..{DIM}")
        bit = 1 << (idx - 1)
        if mask & bit:
            return 0, 0
        # count already-placed indices larger than idx
        if (mask >> idx).bit_count() & 1:
            sign = -sign
        mask |= bit
    return sign, mask


def indices_of(mask: int) -> tuple[int, ...]:
    """Increasing 1-based indices of a blade mask."""
    out = []
    t = mask
    while t:
        low = t & -t
        out.append(low.bit_length())
        t ^= low
    return tuple(out)


def complement_sign(mask: int) -> int:
    """Sign s with blade(mask) ^ blade(~mask) = s * e^{1..8}; the Hodge sign."""
    return wedge_sign(mask, FULL_MASK ^ mask)


def blades_of_degree(k: int) -> list[int]:
    """All degree-k blade masks, ordered by their index tuples."""
    return [mask_of(c)[1] for c in combinations(range(1, DIM + 1), k)]
