"""Difference sets in the cyclic group (F*_{2^m}, x)."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from . import kernels
from .errors import ConfigError, DomainError
from .gf2m import FieldCtx
from .polyfun import dd_map, punctured_value_set
from .sets import ElementSet


def _require_multiplicative(D: ElementSet):
    if D.has_zero:
        raise DomainError("0 is not in the multiplicative group")


def difference_histogram(D: ElementSet, ctx: FieldCtx) -> np.ndarray:
    """lam[g] = #{(x, y) in D x D : x != y, x / y = g}, indexed by element.

    lam[0] and lam[1] are always 0.
    """
    _require_multiplicative(D)
    logs = ctx.log[D.elements()]
    by_log = kernels.difference_counts(logs, ctx.order)
    lam = np.zeros(ctx.size, dtype=np.int64)
    lam[ctx.exp[: ctx.order]] = by_log
    lam[1] = 0
    return lam


def difference_histogram_naive(D: ElementSet, ctx: FieldCtx) -> np.ndarray:
    """Same as difference_histogram via the literal double loop with scalar
    inversion; the oracle for small sets."""
    from .gf2m import inv, mul

    _require_multiplicative(D)
    lam = np.zeros(ctx.size, dtype=np.int64)
    el = [int(e) for e in D.elements()]
    for y in el:
        yi = inv(y, ctx)
        for x in el:
            if x != y:
                lam[mul(x, yi, ctx)] += 1
    return lam


def singer_families(m: int) -> dict:
    v = (1 << m) - 1
    return {
        "singer": (v, 1 << (m - 1), 1 << (m - 2)),
        "singer_complement": (v, (1 << (m - 1)) - 1, (1 << (m - 2)) - 1),
    }


@dataclass(frozen=True)
class DiffSetVerdict:
    is_difference_set: bool
    v: int
    k: int
    lam: int | None
    lambda_histogram: dict = field(default_factory=dict)
    singer_family: str | None = None

    @property
    def params(self):
        return (self.v, self.k, self.lam)

    def as_dict(self):
        return {
            "is_difference_set": self.is_difference_set,
            "v": self.v,
            "k": self.k,
            "lambda": self.lam,
            "lambda_histogram": {str(a): b for a, b in sorted(self.lambda_histogram.items())},
            "singer_family": self.singer_family,
        }


def check_difference_set(D: ElementSet, ctx: FieldCtx) -> DiffSetVerdict:
    lam = difference_histogram(D, ctx)
    vals, freq = np.unique(lam[2:], return_counts=True)
    hist = {int(a): int(b) for a, b in zip(vals, freq)}
    k = len(D)
    if sum(a * b for a, b in hist.items()) != k * (k - 1):
        raise AssertionError("difference histogram does not account for all pairs")
    is_ds = len(hist) == 1
    lam_value = next(iter(hist)) if is_ds else None
    family = None
    if is_ds:
        for name, params in singer_families(ctx.m).items():
            if params == (ctx.order, k, lam_value):
                family = name
    return DiffSetVerdict(is_ds, ctx.order, k, lam_value, hist, family)


def complement_set(D: ElementSet, ctx: FieldCtx) -> ElementSet:
    _require_multiplicative(D)
    return ElementSet.full_group(ctx) - D


def power_image(D: ElementSet, e: int, ctx: FieldCtx, allow_noncoprime: bool = False) -> ElementSet:
    """{d^e : d in D}."""
    _require_multiplicative(D)
    if gcd(e, ctx.order) != 1:
        if not allow_noncoprime:
            raise DomainError(f"gcd({e}, {ctx.order}) != 1; pass allow_noncoprime=True to force")
        warnings.warn(f"x -> x^{e} is not a bijection on F*; the image may shrink", stacklevel=2)
    el = D.elements()
    img = ctx.exp[(ctx.log[el] * (e % ctx.order)) % ctx.order]
    return ElementSet.from_elements(img, ctx)


def trace_power_set(n: int, ctx: FieldCtx) -> ElementSet:
    """T_n = {x : Tr(x^n) = 1}."""
    if n < 1:
        raise ConfigError("n must be positive")
    pts = np.arange(ctx.size, dtype=np.int64)
    xn = np.where(pts == 0, 0, ctx.exp[(ctx.log[pts] * n) % ctx.order])
    return ElementSet(ctx.trace_table[xn] == 1, ctx.m)


def dd_exponent(k: int) -> int:
    return (1 << (2 * k)) - (1 << k) + 1


def dd_value_set(d: int, ctx: FieldCtx) -> ElementSet:
    """Punctured value-set of (x+1)^d + x^d + 1, without parameter checks."""
    return punctured_value_set(dd_map(d), ctx)


def dillon_dobbertin_set(k: int, ctx: FieldCtx) -> ElementSet:
    if not (1 <= k and 2 * k <= ctx.m):
        raise ConfigError(f"need 1 <= k <= m/2, got k={k}, m={ctx.m}")
    if gcd(k, ctx.m) != 1:
        raise ConfigError(f"need gcd(k, m) = 1, got k={k}, m={ctx.m}")
    return dd_value_set(dd_exponent(k), ctx)
