"""Pure-Python mask kernels.

A soft set over a context with n parameters is a tuple of n bitmasks
(0 = parameter undefined).  Each operation below is the per-parameter
word form of the corresponding soft-set operation; the compiled twin in
``_kernels_cy`` implements the same contracts.

Why single words suffice:

* intersection  x & y        : 0 if either side is undefined or the
                               images are disjoint, which is exactly the
                               normalization the operation demands
* union         x | y        : keeps x where y is undefined, y where x
                               is undefined, the joined image otherwise
* complement    full ^ x     : undefined becomes the whole universe, a
                               full image becomes undefined, anything
                               else flips within the universe
* difference    x & ~y       : drops parameters whose image is covered
                               by y, keeps x where y is undefined
* subset        x & ~y == 0  : per-parameter image inclusion; a nonzero
                               x forces a nonzero y, so domain inclusion
                               comes for free
"""

from __future__ import annotations

__all__ = [
    "intersection_masks",
    "union_masks",
    "complement_masks",
    "difference_masks",
    "subset_masks",
]


def _check_lengths(a: tuple, b: tuple) -> None:
    if len(a) != len(b):
        raise ValueError(f"mask length mismatch: {len(a)} vs {len(b)}")


def intersection_masks(a: tuple, b: tuple) -> tuple:
    _check_lengths(a, b)
    return tuple(x & y for x, y in zip(a, b))


def union_masks(a: tuple, b: tuple) -> tuple:
    _check_lengths(a, b)
    return tuple(x | y for x, y in zip(a, b))


def complement_masks(a: tuple, full: int) -> tuple:
    return tuple(full ^ x for x in a)


def difference_masks(a: tuple, b: tuple) -> tuple:
    _check_lengths(a, b)
    return tuple(x & ~y for x, y in zip(a, b))


def subset_masks(a: tuple, b: tuple) -> bool:
    _check_lengths(a, b)
    return all(x & ~y == 0 for x, y in zip(a, b))
