"""Operations and relations on soft sets sharing one context.

All six entry points are pure functions over immutable values.  The two
operands of a binary operation must be built over equal contexts;
nothing is ever coerced across frames, because the complement (and with
it every derived identity) changes meaning when the universe or the
parameter space changes underneath it.

Results come out normalized: a parameter whose computed image would be
empty is simply undefined in the result, so no operation can ever leak
an empty image.
"""

from __future__ import annotations

from . import _backend
from .errors import ContextMismatch
from .model import Context, SoftSet

__all__ = [
    "subset",
    "equals",
    "intersection",
    "union",
    "complement",
    "difference",
]


def _shared_context(s: SoftSet, t: SoftSet) -> Context:
    if s.context != t.context:
        raise ContextMismatch(
            f"soft sets live over different contexts: {s.context!r} vs {t.context!r}"
        )
    return s.context


def subset(s: SoftSet, t: SoftSet) -> bool:
    """True iff every parameter defined in s is defined in t with a
    superset image.  The empty soft set is a subset of everything."""
    ctx = _shared_context(s, t)
    kernel = _backend.kernel_for(len(ctx.objects))
    return kernel.subset_masks(s.masks, t.masks)


def equals(s: SoftSet, t: SoftSet) -> bool:
    """True iff s and t have the same domain and the same images;
    equivalently, each is a subset of the other."""
    _shared_context(s, t)
    return s.masks == t.masks


def intersection(s: SoftSet, t: SoftSet) -> SoftSet:
    """Parameter-wise image intersection, defined exactly where both
    operands are defined and the images meet."""
    ctx = _shared_context(s, t)
    kernel = _backend.kernel_for(len(ctx.objects))
    return SoftSet(ctx, kernel.intersection_masks(s.masks, t.masks))


def union(s: SoftSet, t: SoftSet) -> SoftSet:
    """Defined wherever either operand is; keeps the lone image on the
    symmetric difference of the domains, joins images on the overlap."""
    ctx = _shared_context(s, t)
    kernel = _backend.kernel_for(len(ctx.objects))
    return SoftSet(ctx, kernel.union_masks(s.masks, t.masks))


def complement(s: SoftSet) -> SoftSet:
    """Complement with respect to the universal soft set.

    Parameters with a full image drop out of the domain, undefined
    parameters come back with the whole universe, and every other image
    flips within the universe.  Total: the result is always a valid
    soft set.
    """
    ctx = s.context
    kernel = _backend.kernel_for(len(ctx.objects))
    return SoftSet(ctx, kernel.complement_masks(s.masks, ctx.full_mask))


def difference(s: SoftSet, t: SoftSet) -> SoftSet:
    """Relative complement of t in s: image-wise s minus t where both
    are defined (dropping parameters t fully covers), s's own image
    elsewhere on s's domain."""
    ctx = _shared_context(s, t)
    kernel = _backend.kernel_for(len(ctx.objects))
    return SoftSet(ctx, kernel.difference_masks(s.masks, t.masks))
