"""Subsets of GF(2^m) stored as boolean masks over all 2^m slots."""

from __future__ import annotations

import numpy as np

from .gf2m import FieldCtx


class ElementSet:
    """Immutable subset of F_{2^m}.  Slot 0 stands for the zero element and is
    clear for every multiplicative-group set built by this package."""

    __slots__ = ("m", "mask", "_size")

    def __init__(self, mask, m: int):
        mask = np.array(mask, dtype=bool)
        if mask.shape != (1 << m,):
            raise ValueError(f"mask must have length 2^{m}")
        mask.setflags(write=False)
        self.m = m
        self.mask = mask
        self._size = int(mask.sum())

    @classmethod
    def from_elements(cls, elements, ctx: FieldCtx) -> "ElementSet":
        mask = np.zeros(ctx.size, dtype=bool)
        el = np.asarray(list(elements) if not isinstance(elements, np.ndarray) else elements,
                        dtype=np.int64)
        if el.size and (el.min() < 0 or el.max() >= ctx.size):
            raise ValueError("element out of range for the field")
        mask[el] = True
        return cls(mask, ctx.m)

    @classmethod
    def full_group(cls, ctx: FieldCtx) -> "ElementSet":
        mask = np.ones(ctx.size, dtype=bool)
        mask[0] = False
        return cls(mask, ctx.m)

    @classmethod
    def empty(cls, ctx: FieldCtx) -> "ElementSet":
        return cls(np.zeros(ctx.size, dtype=bool), ctx.m)

    def elements(self) -> np.ndarray:
        """Members in ascending order."""
        return np.flatnonzero(self.mask).astype(np.int64)

    @property
    def has_zero(self) -> bool:
        return bool(self.mask[0])

    def __len__(self):
        return self._size

    def __iter__(self):
        return iter(int(e) for e in self.elements())

    def __contains__(self, x):
        return 0 <= int(x) < len(self.mask) and bool(self.mask[int(x)])

    def __eq__(self, other):
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.m == other.m and bool(np.array_equal(self.mask, other.mask))

    def __hash__(self):
        return hash((self.m, self.mask.tobytes()))

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.mask & other.mask, self.m)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.mask | other.mask, self.m)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.mask & ~other.mask, self.m)

    def isdisjoint(self, other: "ElementSet") -> bool:
        return not bool((self.mask & other.mask).any())

    def __repr__(self):
        head = ", ".join(str(e) for e in self.elements()[:6])
        more = ", ..." if self._size > 6 else ""
        return f"ElementSet(m={self.m}, size={self._size}, {{{head}{more}}})"
