"""Sums of monomials x^e on F*_{2^m} with exponents given symbolically in m.

A map is a tuple of exponent expressions.  At a concrete m every exponent is
reduced into Z/(2^m - 1) and equal residues cancel in pairs, so a map is
really a GF(2)-linear combination of characters of the cyclic group F*.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import gf2m
from .errors import CatalogError, DomainError
from .expr import ExponentExpr, parse
from .gf2m import FieldCtx
from .sets import ElementSet


@dataclass(frozen=True)
class RationalMap:
    name: str
    terms: tuple[ExponentExpr, ...]

    @classmethod
    def from_strings(cls, name, terms) -> "RationalMap":
        return cls(name, tuple(parse(t) for t in terms))

    def exponents(self, m: int) -> tuple[int, ...]:
        """Residues that survive pairwise cancellation, sorted."""
        return _exponents(self, m)

    def raw_exponents(self, m: int) -> tuple[int, ...] | None:
        """Exact nonnegative integer exponents, or None if any term is
        negative or needed a modular division (the map is then undefined
        at 0)."""
        return _raw_exponents(self, m)

    def is_polynomial(self, m: int) -> bool:
        return self.raw_exponents(m) is not None

    def describe(self, m: int) -> str:
        ex = self.exponents(m)
        if not ex:
            return "0"
        return " + ".join("1" if e == 0 else f"x^{e}" for e in ex)

    def __str__(self):
        return " + ".join(f"x^({t})" for t in self.terms) or "0"


def _eval_terms(f: RationalMap, m: int):
    out = []
    for t in f.terms:
        try:
            out.append(t.evaluate(m))
        except CatalogError as exc:
            raise CatalogError(f"{f.name}: term {t.text!r} at m={m}: {exc}") from None
    return out


@functools.lru_cache(maxsize=4096)
def _exponents(f: RationalMap, m: int) -> tuple[int, ...]:
    parity = Counter(r for r, _ in _eval_terms(f, m))
    return tuple(sorted(e for e, c in parity.items() if c % 2))


@functools.lru_cache(maxsize=4096)
def _raw_exponents(f: RationalMap, m: int):
    raws = [raw for _, raw in _eval_terms(f, m)]
    if any(r is None or r < 0 for r in raws):
        return None
    parity = Counter(raws)
    return tuple(sorted(e for e, c in parity.items() if c % 2))


# -- catalog -------------------------------------------------------------------

_CATALOG = {
    "identity": ["1"],
    "f1": ["2**m - 17", "(2**m + 19)//3", "1"],
    "f2": ["2**m - 2**(m-4) - 1", "2**m - (2**(m-2) + 4)//3", "1"],
    "f3": ["2**m - 3", "2**((m+3)//2) + 2**((m+1)//2) + 4", "1"],
    "f4": ["2**m - 2**((m-1)//2) - 1", "2**(m-1) - 2**((m-1)//2)", "1"],
    "f5": ["2**m - 2 - (2**(m-1) - 2**2)//3", "2**m - 2**2 - (2**m - 2**3)//3", "1"],
    "f6": ["2**m - 2**((m+1)//2) + 2**((m-1)//2)", "2**m - 2**((m+1)//2) - 1", "1"],
    "f7": ["2**m - 3*(2**((m+1)//2) - 1)", "2**((m+1)//2) + 2**((m-1)//2) - 2", "1"],
    "f8": ["2**m - 2**(m-2) - 1", "2**(m-1) - 2", "1"],
    "f9": ["2**m - 2**((m+3)//2) - 3", "2**((m+1)//2) + 2", "1"],
    "f10": ["2**m - 3*(2**((m-1)//2) + 1)", "2**(m-1) - 1", "1"],
    "f11": ["2**m - 5", "6", "1"],
    "canon_a": ["-4", "6", "1"],
    "canon_b": ["3", "20", "-48"],
    "canon_c": ["-s/2", "-(s-1)/2", "1"],
    "canon_d": ["3*s + 4", "-2", "1"],
    "g": ["s", "1"],
    "h": ["1", "-1", "-s", "s-1", "2-s"],
    "p": ["s+1", "1"],
    "R": ["s+1", "s-1", "1"],
    "h_s": ["s+1", "s", "s-1", "s-2", "1-s"],
    "f_s": ["3*s + 4", "-2", "1"],
    "sextic1": ["6", "1"],
    "sextic2": ["6", "5"],
    "dickson_shift": ["5", "4", "3", "2", "1", "0"],
    # x^2 + x, the k = 1 Dillon-Dobbertin polynomial
    "trace0": ["2", "1"],
}

# Q(x) = (x^s + x^2 + 1) / x^(s+1), expanded termwise
_CATALOG["Q"] = ["-1", "1-s", "-s-1"]

TRINOMIALS = tuple(f"f{i}" for i in range(1, 12))

# The four value-set classes of the trinomials and their representatives.
CLASSES = {
    "canon_a": ("f5", "f8", "f11"),
    "canon_b": ("f1", "f2"),
    "canon_c": ("f4", "f6", "f9"),
    "canon_d": ("f3", "f7", "f10"),
}

# Binomials value-set equivalent to f_i(x)/x + 1, in the order f1..f11.
OBSERVED_QUOTIENTS = {
    "f1": ["-3", "1"],
    "f2": ["4", "3"],
    "f3": ["-s-1", "1"],
    "f4": ["-3*s-4", "1"],
    "f5": ["2", "1"],
    "f6": ["s+2", "1"],
    "f7": ["s", "1"],
    "f8": ["2", "1"],
    "f9": ["-s-1", "1"],
    "f10": ["s+2", "1"],
    "f11": ["1", "-1"],
}


def catalog_ids() -> list[str]:
    return sorted(_CATALOG)


@functools.lru_cache(maxsize=None)
def _entry(name: str) -> RationalMap:
    if name not in _CATALOG:
        raise CatalogError(f"unknown map id {name!r}; known: {', '.join(catalog_ids())}")
    return RationalMap.from_strings(name, _CATALOG[name])


def catalog(name: str, m: int) -> RationalMap:
    """Look up a map and check its exponents are well defined at m."""
    f = _entry(name)
    f.exponents(m)
    return f


def observed_quotient(name: str) -> RationalMap:
    return RationalMap.from_strings(f"obs_{name}", OBSERVED_QUOTIENTS[name])


def dd_map(d: int) -> RationalMap:
    """(x+1)^d + x^d + 1 expanded over GF(2): by Lucas, the surviving terms
    are x^i for the nonzero proper submasks i of d."""
    terms = []
    i = (d - 1) & d
    while i:
        terms.append(str(i))
        i = (i - 1) & d
    return RationalMap.from_strings(f"dd_{d}", sorted(terms, key=int))


def quotient_plus_one(f: RationalMap) -> RationalMap:
    """f(x)/x + 1: every exponent lowered by one, plus the constant 1."""
    terms = tuple(t.shifted(-1) for t in f.terms) + (parse(0),)
    return RationalMap(f"{f.name}/x+1", terms)


# -- evaluation ----------------------------------------------------------------


def eval_map(f: RationalMap, x: int, ctx: FieldCtx) -> int:
    if x == 0:
        raise DomainError(f"{f.name} is evaluated on nonzero elements only")
    acc = 0
    for e in f.exponents(ctx.m):
        acc ^= gf2m.pow_signed(x, e, ctx)
    return acc


def eval_array(f: RationalMap, xs, ctx: FieldCtx) -> np.ndarray:
    """Vectorised evaluation.  Zero inputs are accepted only when every
    exponent is a plain nonnegative integer."""
    xs = np.asarray(xs, dtype=np.int64)
    zero = xs == 0
    lx = ctx.log[xs]
    out = np.zeros(xs.shape, dtype=np.int64)
    for e in f.exponents(ctx.m):
        out ^= ctx.exp[(lx * e) % ctx.order]
    if zero.any():
        raw = f.raw_exponents(ctx.m)
        if raw is None:
            raise DomainError(f"{f.name} is not defined at 0")
        out = np.where(zero, 1 if 0 in raw else 0, out)
    return out


def nonzero_table(f: RationalMap, ctx: FieldCtx) -> np.ndarray:
    """T[x] = f(x) for x in F*; T[0] is f(0) for polynomials and 0 otherwise.
    Callers that sweep F* should ignore slot 0."""
    pts = np.arange(ctx.size, dtype=np.int64)
    if f.is_polynomial(ctx.m):
        return eval_array(f, pts, ctx)
    out = np.zeros(ctx.size, dtype=np.int64)
    out[1:] = eval_array(f, pts[1:], ctx)
    return out


def field_table(f: RationalMap, ctx: FieldCtx) -> np.ndarray:
    """f at every element of F, for maps defined at 0."""
    return eval_array(f, np.arange(ctx.size, dtype=np.int64), ctx)


# -- value sets and profiles ---------------------------------------------------


@dataclass(frozen=True)
class ValueProfile:
    """Preimage counts of a map over F*.

    ``per_value[v]`` counts x in F* with f(x) = v; slot 0 is the zero bucket.
    ``histogram`` maps multiplicity -> number of nonzero values attaining it
    (unattained values are left out).
    """

    value_set: ElementSet
    per_value: np.ndarray
    histogram: dict

    @property
    def zero_hits(self) -> int:
        return int(self.per_value[0])

    def parameter_histogram(self, include_zero: bool = True) -> dict:
        """multiplicity -> number of parameters a with that many preimages,
        a ranging over F (or F* when include_zero is False)."""
        counts = self.per_value if include_zero else self.per_value[1:]
        vals, freq = np.unique(counts, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, freq)}

    def values_with(self, multiplicity: int) -> ElementSet:
        mask = self.per_value == multiplicity
        mask[0] = False
        return ElementSet(mask, self.value_set.m)


def _profile_from_values(values: np.ndarray, ctx: FieldCtx) -> ValueProfile:
    per_value = np.bincount(values, minlength=ctx.size).astype(np.int64)
    per_value.setflags(write=False)
    mask = per_value > 0
    mask[0] = False
    attained = per_value[1:][per_value[1:] > 0]
    vals, freq = np.unique(attained, return_counts=True)
    hist = {int(v): int(c) for v, c in zip(vals, freq)}
    return ValueProfile(ElementSet(mask, ctx.m), per_value, hist)


def preimage_profile(f: RationalMap, ctx: FieldCtx) -> ValueProfile:
    values = nonzero_table(f, ctx)[1:]
    return _profile_from_values(values, ctx)


def punctured_value_set(f: RationalMap, ctx: FieldCtx) -> ElementSet:
    return preimage_profile(f, ctx).value_set


def value_set_equal(f: RationalMap, g: RationalMap, ctx: FieldCtx) -> bool:
    return punctured_value_set(f, ctx) == punctured_value_set(g, ctx)
