"""Basis blades of Cl(p,q) as bitmasks, with exact sign arithmetic.

A blade is an ``int`` whose bit ``i-1`` says whether generator ``e^i`` is
present (indices are 1-based).  The geometric product of two basis blades is
always ``sign * (a ^ b)`` with ``sign`` in ``{+1, -1}``, so all structure
constants are computed exactly in integer arithmetic.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

MAX_GENERATORS = 12

# Dense sign tables are cached per signature up to this many generators
# (4**8 = 65536 entries); beyond that signs are computed on the fly.
_TABLE_CAP = 8


@dataclass(frozen=True)
class Signature:
    """Diagonal metric with ``p`` generators squaring to +1, then ``q`` to -1.

    Only nondegenerate signatures are supported, with 1 <= p+q <= 12.
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        if not (isinstance(self.p, int) and isinstance(self.q, int)) or \
                isinstance(self.p, bool) or isinstance(self.q, bool):
            raise TypeError("signature components must be integers")
        if self.p < 0 or self.q < 0:
            raise ValueError("signature components must be nonnegative")
        n = self.p + self.q
        if n < 1 or n > MAX_GENERATORS:
            raise ValueError(
                f"need 1 <= p+q <= {MAX_GENERATORS}, got p={self.p}, q={self.q}"
            )

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def blade_count(self) -> int:
        return 1 << self.n

    def metric(self, i: int) -> int:
        """Square of generator ``e^i`` (1-based index)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"generator index {i} out of range 1..{self.n}")
        return 1 if i <= self.p else -1

    def blades(self) -> range:
        """All basis blade masks, ascending."""
        return range(self.blade_count)

    def check_blade(self, mask: int) -> None:
        if not (isinstance(mask, int) and 0 <= mask < self.blade_count):
            raise ValueError(f"blade mask {mask!r} invalid for n={self.n}")

    def __str__(self) -> str:
        return f"Cl({self.p},{self.q})"


def grade(mask: int) -> int:
    """Number of generators in the blade (popcount)."""
    return mask.bit_count()


def blade_indices(mask: int) -> tuple[int, ...]:
    """Ascending 1-based generator indices of a blade mask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_from_indices(indices, n: int) -> int:
    """Build a blade mask from strictly increasing 1-based indices."""
    mask = 0
    prev = 0
    for i in indices:
        if not (isinstance(i, int) and 1 <= i <= n):
            raise ValueError(f"generator index {i!r} out of range 1..{n}")
        if i <= prev:
            raise ValueError("generator indices must be strictly increasing")
        mask |= 1 << (i - 1)
        prev = i
    return mask


def reorder_sign(a: int, b: int) -> int:
    """Sign from sorting the concatenation of blades ``a`` and ``b``.

    Equals (-1)**T where T counts pairs (j in a, i in b) with j > i, i.e.
    the adjacent transpositions needed to interleave the two sorted
    generator sequences.
    """
    swaps = 0
    x = a >> 1
    while x:
        swaps += (x & b).bit_count()
        x >>= 1
    return -1 if swaps & 1 else 1


def metric_sign(a: int, b: int, sig: Signature) -> int:
    """Product of generator squares over the generators common to a and b."""
    neg = (a & b) >> sig.p  # bits of the shared part that square to -1
    return -1 if neg.bit_count() & 1 else 1


def canonical_sign(a: int, b: int, sig: Signature) -> tuple[int, int]:
    """Geometric product of basis blades: returns (sign, result mask)."""
    sig.check_blade(a)
    sig.check_blade(b)
    return reorder_sign(a, b) * metric_sign(a, b, sig), a ^ b


@functools.lru_cache(maxsize=None)
def sign_table(sig: Signature):
    """Flat product-sign table indexed by ``(a << n) | b``, or None if n is
    too large to cache densely."""
    n = sig.n
    if n > _TABLE_CAP:
        return None
    size = 1 << n
    table = [1] * (size * size)
    for a in range(size):
        row = a << n
        for b in range(size):
            table[row | b] = reorder_sign(a, b) * metric_sign(a, b, sig)
    return table
