"""Affine curves over GF(2) evaluated in F_{2^m}, and one-parameter root counts."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from . import gf2m, kernels
from .errors import CatalogError, ConfigError
from .gf2m import FieldCtx


@dataclass(frozen=True)
class BiPoly:
    """Polynomial in x, y with GF(2) coefficients: the set of monomials
    (i, j) with coefficient 1."""

    monomials: frozenset = field(default_factory=frozenset)
    name: str = field(default="", compare=False)

    @classmethod
    def of(cls, *pairs, name="") -> "BiPoly":
        acc = set()
        for p in pairs:
            acc ^= {tuple(p)}
        return cls(frozenset(acc), name)

    @classmethod
    def x(cls):
        return cls.of((1, 0))

    @classmethod
    def y(cls):
        return cls.of((0, 1))

    @classmethod
    def one(cls):
        return cls.of((0, 0))

    def named(self, name: str) -> "BiPoly":
        return BiPoly(self.monomials, name)

    def __add__(self, other: "BiPoly") -> "BiPoly":
        return BiPoly(self.monomials ^ other.monomials)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        acc = set()
        for i, j in self.monomials:
            for k, l in other.monomials:
                acc ^= {(i + k, j + l)}
        return BiPoly(frozenset(acc))

    def square(self) -> "BiPoly":
        # characteristic 2: cross terms vanish
        return BiPoly(frozenset((2 * i, 2 * j) for i, j in self.monomials))

    def __pow__(self, e: int) -> "BiPoly":
        if e < 0:
            raise ValueError("negative power")
        result, base = BiPoly.one(), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base.square()
        return result

    def swap(self) -> "BiPoly":
        return BiPoly(frozenset((j, i) for i, j in self.monomials))

    def d_dx(self) -> "BiPoly":
        return BiPoly(frozenset((i - 1, j) for i, j in self.monomials if i % 2))

    def d_dy(self) -> "BiPoly":
        return BiPoly(frozenset((i, j - 1) for i, j in self.monomials if j % 2))

    def arrays(self):
        mons = sorted(self.monomials)
        I = np.array([i for i, _ in mons], dtype=np.int64)
        J = np.array([j for _, j in mons], dtype=np.int64)
        return I, J

    @property
    def degree(self) -> int:
        return max((i + j for i, j in self.monomials), default=-1)

    def __len__(self):
        return len(self.monomials)

    def __str__(self):
        def mono(i, j):
            parts = [v if e == 1 else f"{v}^{e}" for v, e in (("x", i), ("y", j)) if e]
            return "*".join(parts) or "1"

        mons = sorted(self.monomials, key=lambda t: (-(t[0] + t[1]), -t[0]))
        return " + ".join(mono(i, j) for i, j in mons) or "0"


X, Y, ONE = BiPoly.x(), BiPoly.y(), BiPoly.one()


def _mono(i, j):
    return BiPoly.of((i, j))


def _dd_univariate(d: int) -> BiPoly:
    """(y+1)^d + y^d + 1 as a polynomial in y."""
    return (Y + ONE) ** d + Y ** d + ONE


def _build_catalog() -> dict:
    c = {}
    # degree-14 family
    c["c41_C"] = _mono(0, 4) * (_mono(10, 0) + _mono(5, 0) + ONE) + _mono(4, 0) * (
        _mono(0, 10) + _mono(0, 5) + ONE
    )
    c["c41_C1"] = X + Y
    c["c41_C2"] = _mono(3, 2) + _mono(2, 3) + ONE
    c["c41_C3"] = BiPoly.of((6, 2), (4, 4), (3, 0), (2, 6), (2, 1), (1, 2), (0, 3))
    # degree-106 family
    c["c42_C"] = _mono(0, 48) * (_mono(58, 0) + _mono(51, 0) + ONE) + _mono(48, 0) * (
        _mono(0, 58) + _mono(0, 51) + ONE
    )
    # f(x) = f(y) for x^-48 + x^20 + x^3 with denominators cleared; this one
    # factors as c42_C1 * c42_C2 * c42_C3 * c42_C4
    c["c42_C_cleared"] = _mono(0, 48) * (_mono(68, 0) + _mono(51, 0) + ONE) + _mono(48, 0) * (
        _mono(0, 68) + _mono(0, 51) + ONE
    )
    c["c42_C1"] = X + Y
    c["c42_C2"] = BiPoly.of((12, 12), (4, 3), (3, 4), (7, 0), (0, 7))
    c["c42_C3"] = _mono(12, 12) * (X + Y) ** 3 + (_mono(2, 0) + _mono(1, 1) + _mono(0, 2)) ** 5
    inner = _mono(20, 12) + _mono(12, 20) + (_mono(3, 0) + _mono(0, 3)) ** 5
    c["c42_C4"] = inner.square() + _mono(16, 16).square() + _mono(16, 16) * inner
    # no-point curves
    c["ec1_curve"] = _mono(10, 0) + _mono(5, 0) + ONE + _mono(4, 0) * (_mono(0, 6) + Y)
    u = X
    c["big241_curve"] = (u ** 4 + u + ONE) ** 17 + u ** 20 * _dd_univariate(241)
    # helper curves used inside the counting arguments
    c["helper_E"] = _mono(0, 2) + Y + _mono(5, 0)
    c["helper_sixfive"] = _mono(5, 0) + (X + ONE) * (_mono(0, 6) + _mono(0, 5))
    c["helper_E17"] = _mono(0, 6) + _mono(0, 5) + _mono(17, 0)
    c["helper_E3"] = _mono(0, 5) + _mono(17, 0) * (Y + ONE)
    return {k: v.named(k) for k, v in c.items()}


_CATALOG = _build_catalog()

# G and H with ec1_curve = G^2 + G H + H^2
EC1_G = (_mono(5, 0) + _mono(4, 1)).named("G")
EC1_H = (_mono(3, 2) + _mono(2, 3) + ONE).named("H")


def curve_ids() -> list[str]:
    return sorted(_CATALOG)


def curve(name: str) -> BiPoly:
    try:
        return _CATALOG[name]
    except KeyError:
        raise CatalogError(f"unknown curve id {name!r}; known: {', '.join(curve_ids())}") from None


# -- evaluation ----------------------------------------------------------------


def eval_bipoly(C: BiPoly, x: int, y: int, ctx: FieldCtx) -> int:
    acc = 0
    for i, j in C.monomials:
        acc ^= gf2m.mul(gf2m.pow_signed(x, i, ctx), gf2m.pow_signed(y, j, ctx), ctx)
    return acc


def eval_points(C: BiPoly, xs, ys, ctx: FieldCtx) -> np.ndarray:
    """C at the points (xs[k], ys[k])."""
    xs = np.asarray(xs, dtype=np.int64)
    ys = np.asarray(ys, dtype=np.int64)
    out = np.zeros(np.broadcast(xs, ys).shape, dtype=np.int64)
    for i, j in C.monomials:
        out ^= gf2m.mul_array(gf2m.pow_array(xs, i, ctx), gf2m.pow_array(ys, j, ctx), ctx)
    return out


def eval_grid(C: BiPoly, ctx: FieldCtx) -> np.ndarray:
    """grid[x, y] = C(x, y) over all of F x F."""
    I, J = C.arrays()
    if len(I) == 0:
        return np.zeros((ctx.size, ctx.size), dtype=np.int64)
    return kernels.bipoly_grid(I, J, ctx.size, ctx.exp, ctx.log, ctx.order)


def zero_points(C: BiPoly, ctx: FieldCtx):
    I, J = C.arrays()
    if len(I) == 0:
        pts = np.arange(ctx.size, dtype=np.int64)
        return np.repeat(pts, ctx.size), np.tile(pts, ctx.size)
    return kernels.bipoly_zero_points(I, J, ctx.size, ctx.exp, ctx.log, ctx.order)


def count_affine_points(C: BiPoly, ctx: FieldCtx, x_nonzero: bool = False) -> int:
    xs, _ = zero_points(C, ctx)
    if x_nonzero:
        return int((xs != 0).sum())
    return int(len(xs))


def find_singular_points(C: BiPoly, ctx: FieldCtx) -> list[tuple[int, int]]:
    xs, ys = zero_points(C, ctx)
    if len(xs) == 0:
        return []
    keep = (eval_points(C.d_dx(), xs, ys, ctx) == 0) & (eval_points(C.d_dy(), xs, ys, ctx) == 0)
    return [(int(a), int(b)) for a, b in zip(xs[keep], ys[keep])]


# -- root-count profiles -------------------------------------------------------


def _hist(counts) -> dict:
    vals, freq = np.unique(np.asarray(counts), return_counts=True)
    return {int(v): int(c) for v, c in zip(vals, freq)}


@dataclass(frozen=True)
class RootProfile:
    histogram: dict
    per_parameter: np.ndarray = field(repr=False)

    @property
    def total(self) -> int:
        return sum(self.histogram.values())


def bluher_root_profile(k: int, ctx: FieldCtx, variant: str = "affine") -> RootProfile:
    """Root counts of a one-parameter family, parameter a over all of F.

    variant "affine": #{x in F : x^(2^k+1) + a x + a = 0}.
    variant "linear": #{x in F* : x^(2^k+1) + x = a}, the preimage profile
    of x^(2^k+1) + x.
    """
    if not 1 <= k < ctx.m:
        raise ConfigError(f"need 1 <= k < m, got k={k}, m={ctx.m}")
    e = (1 << k) + 1
    if variant == "affine":
        per = kernels.root_counts(e, ctx.size, ctx.exp, ctx.log, ctx.order)
    elif variant == "linear":
        xs = np.arange(1, ctx.size, dtype=np.int64)
        vals = gf2m.pow_array(xs, e, ctx) ^ xs
        per = np.bincount(vals, minlength=ctx.size)
    else:
        raise ConfigError(f"unknown variant {variant!r}")
    per = np.asarray(per, dtype=np.int64)
    return RootProfile(_hist(per), per)


def expected_root_profile(k: int, m: int) -> dict:
    """Closed-form |Z_i| for x^(2^k+1) + a x + a, d = gcd(k, m), m odd.

    |Z_1| is 2^(m-d); this agrees with 2^(m-1) exactly when d = 1.
    """
    d = gcd(k, m)
    q = 1 << m
    z0 = (q + 1) * (1 << (d - 1)) // ((1 << d) + 1)
    z1 = 1 << (m - d)
    z2 = (q - 1) * ((1 << (d - 1)) - 1) // ((1 << d) - 1)
    zt = ((1 << (m - d)) - 1) // ((1 << (2 * d)) - 1)
    out = {0: z0, 1: z1, 2: z2, (1 << d) + 1: zt}
    return {i: c for i, c in sorted(out.items()) if c}


def linear_profile_expected(m: int) -> dict:
    """Preimage histogram of x^(s+1) + x with parameter over F."""
    return {0: ((1 << m) + 1) // 3, 1: 1 << (m - 1), 3: ((1 << (m - 1)) - 1) // 3}


@dataclass(frozen=True)
class SixFiveReport:
    ok: bool
    failures: list
    two_root_parameters: list

    def __bool__(self):
        return self.ok


def six_five_check(ctx: FieldCtx) -> SixFiveReport:
    """For a != 0 compare roots of x^5 + a x + a with roots of x^6 + x^5 + a.

    Checks: g has 2 roots iff f has 1; f with 0 or 3 roots forces g to have
    none.  Parameters where f has exactly 2 roots are listed, not judged.
    """
    f_roots = np.asarray(kernels.root_counts(5, ctx.size, ctx.exp, ctx.log, ctx.order))
    pts = np.arange(ctx.size, dtype=np.int64)
    g_vals = gf2m.pow_array(pts, 6, ctx) ^ gf2m.pow_array(pts, 5, ctx)
    g_roots = np.bincount(g_vals, minlength=ctx.size)
    failures, two = [], []
    for a in range(1, ctx.size):
        fa, ga = int(f_roots[a]), int(g_roots[a])
        if (ga == 2) != (fa == 1):
            failures.append((a, fa, ga))
        elif fa in (0, 3) and ga != 0:
            failures.append((a, fa, ga))
        if fa == 2:
            two.append(a)
    return SixFiveReport(not failures, failures, two)


def cubic_factor_check(ctx: FieldCtx) -> list[tuple[int, int]]:
    """Pairs (p, q), q != 0, where Tr(p^3/q^2 + 1) = 0 disagrees with
    x^3 + p x + q having 0 or 3 roots.  Empty means the criterion holds."""
    pts = np.arange(ctx.size, dtype=np.int64)
    cubes = gf2m.pow_array(pts, 3, ctx)
    qs = pts[1:]
    q2inv = gf2m.inv_array(gf2m.mul_array(qs, qs, ctx), ctx)
    bad = []
    for p in range(ctx.size):
        vals = cubes ^ gf2m.mul_array(np.full_like(pts, p), pts, ctx)
        roots = np.bincount(vals, minlength=ctx.size)[1:]
        odd = (roots == 0) | (roots == 3)
        p3 = gf2m.pow_signed(p, 3, ctx)
        arg = gf2m.mul_array(np.full_like(qs, p3), q2inv, ctx) ^ 1
        tr_zero = ctx.trace_table[arg] == 0
        for q in qs[odd != tr_zero]:
            bad.append((p, int(q)))
    return bad
