"""Binary linear codes C_D = {(Tr(x d))_{d in D} : x in F_{2^m}}.

Weight distributions come either from direct enumeration over x or from the
Walsh spectrum of the indicator of D; the low-weight part of the dual code
comes either from the power-moment identities or from counting zero-sum
triples in D.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import gf2m, kernels
from .errors import HypothesisError, InconsistentDataError
from .gf2m import FieldCtx
from .sets import ElementSet


# -- Walsh spectrum ------------------------------------------------------------


@dataclass(frozen=True)
class WalshSpectrum:
    values: np.ndarray
    n_f: int

    def parseval_ok(self) -> bool:
        q = len(self.values)
        return int((self.values.astype(object) ** 2).sum()) == q * q

    def distinct(self) -> dict:
        vals, freq = np.unique(self.values, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, freq)}


def trace_gram(ctx: FieldCtx) -> np.ndarray:
    """G[i, j] = Tr(b_i b_j) for the polynomial basis b_i = x^i."""
    G = np.zeros((ctx.m, ctx.m), dtype=np.uint8)
    for i in range(ctx.m):
        for j in range(ctx.m):
            G[i, j] = gf2m.trace(gf2m.mul(1 << i, 1 << j, ctx), ctx)
    return G


def gf2_rank(rows) -> int:
    """Rank over GF(2) of integers read as bit vectors."""
    basis = []
    for v in rows:
        v = int(v)
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def _dual_index(ctx: FieldCtx) -> np.ndarray:
    """w -> w' with bit i of w' equal to Tr(b_i w), so Tr(w x) = <w', x>."""
    G = trace_gram(ctx)
    rows = [int("".join(str(b) for b in G[i][::-1]), 2) for i in range(ctx.m)]
    if gf2_rank(rows) != ctx.m:
        raise AssertionError("trace form is degenerate")
    w = np.arange(ctx.size, dtype=np.int64)
    out = np.zeros(ctx.size, dtype=np.int64)
    for i in range(ctx.m):
        out |= ctx.trace_table[gf2m.mul_array(np.full_like(w, 1 << i), w, ctx)].astype(np.int64) << i
    return out


def walsh_spectrum(support: ElementSet, ctx: FieldCtx, method: str = "fast") -> WalshSpectrum:
    f = support.mask.astype(np.int64)
    if method == "direct":
        vals = kernels.walsh_direct(f, ctx.exp, ctx.log, ctx.order, ctx.trace_table)
    elif method == "fast":
        signs = 1 - 2 * f
        vals = kernels.fwht(signs)[_dual_index(ctx)]
    else:
        raise ValueError(f"unknown method {method!r}")
    vals = np.asarray(vals, dtype=np.int64)
    vals.setflags(write=False)
    return WalshSpectrum(vals, len(support))


# -- weight distributions ------------------------------------------------------


@dataclass(frozen=True)
class WeightDistribution:
    counts: dict
    n: int
    k: int

    def __post_init__(self):
        if sum(self.counts.values()) != 1 << self.k:
            raise InconsistentDataError(
                f"counts sum to {sum(self.counts.values())}, expected 2^{self.k}"
            )

    @property
    def weights(self):
        return sorted(w for w in self.counts if w)

    @property
    def min_distance(self):
        return min(self.weights, default=None)

    def as_dict(self):
        return {str(w): c for w, c in sorted(self.counts.items())}


def dimension(D: ElementSet) -> int:
    """dim C_D = rank of D over GF(2), as the trace form is nondegenerate."""
    return gf2_rank(D.elements())


def _sorted_hist(values) -> dict:
    vals, freq = np.unique(np.asarray(values), return_counts=True)
    return {int(v): int(c) for v, c in zip(vals, freq)}


def _fold(hist: dict, m: int, k: int) -> dict:
    rep = 1 << (m - k)
    if any(c % rep for c in hist.values()):
        raise InconsistentDataError("weight multiplicities are not multiples of 2^(m-k)")
    return {w: c // rep for w, c in hist.items()}


def codeword_weights(D: ElementSet, ctx: FieldCtx) -> np.ndarray:
    """Weight of the codeword indexed by x, for every x in F (columns in
    ascending element order)."""
    return np.asarray(
        kernels.code_weights(D.elements(), ctx.size, ctx.exp, ctx.log, ctx.order, ctx.trace_table)
    )


def weight_distribution_direct(D: ElementSet, ctx: FieldCtx) -> WeightDistribution:
    k = dimension(D)
    hist = _fold(_sorted_hist(codeword_weights(D, ctx)), ctx.m, k)
    return WeightDistribution(hist, len(D), k)


def weight_distribution(
    D: ElementSet, ctx: FieldCtx, strict: bool = True, spectrum: WalshSpectrum | None = None
) -> WeightDistribution:
    """Distribution from the Walsh spectrum: x != 0 has weight
    (2n + W(x)) / 4 and x = 0 has weight 0.

    With strict=True a vanishing 2n + W(w), w != 0, raises HypothesisError;
    otherwise the repeated codewords are folded using the computed dimension.
    """
    n = len(D)
    spec = spectrum if spectrum is not None else walsh_spectrum(D, ctx)
    num = 2 * n + spec.values[1:]
    bad = np.flatnonzero(num == 0)
    if strict and len(bad):
        w = int(bad[0]) + 1
        raise HypothesisError(f"2n + W(w) = 0 at w = {w}", w=w)
    if (num % 4).any():
        raise InconsistentDataError("2n + W(w) not divisible by 4")
    weights = np.concatenate(([0], num // 4))
    k = ctx.m if strict else dimension(D)
    return WeightDistribution(_fold(_sorted_hist(weights), ctx.m, k), n, k)


def enumerator_string(dist: WeightDistribution) -> str:
    parts = []
    for w, c in sorted(dist.counts.items()):
        if w == 0:
            parts.append(str(c))
            continue
        coef = "" if c == 1 else str(c)
        parts.append(f"{coef}z" if w == 1 else f"{coef}z^{w}")
    return " + ".join(parts)


def tri_weight_expected(m: int) -> dict:
    a = 1 << (m - 2)
    b = 1 << ((m - 3) // 2)
    return {0: 1, a - b: a - b, a: (1 << (m - 1)) - 1, a + b: a + b}


def tri_weight_swapped(m: int) -> dict:
    """The enumerator with the two outer counts exchanged."""
    a = 1 << (m - 2)
    b = 1 << ((m - 3) // 2)
    return {0: 1, a - b: a + b, a: (1 << (m - 1)) - 1, a + b: a - b}


# -- dual code ----------------------------------------------------------------


def dual_low_weights(dist: WeightDistribution) -> tuple[int, int, int]:
    """A1, A2, A3 of the dual code from the first four power moments."""
    n, k = dist.n, dist.k
    if sum(dist.counts.values()) != 1 << k:
        raise InconsistentDataError("distribution is incomplete")
    s1 = sum(Fraction(w) * c for w, c in dist.counts.items())
    s2 = sum(Fraction(w) ** 2 * c for w, c in dist.counts.items())
    s3 = sum(Fraction(w) ** 3 * c for w, c in dist.counts.items())
    p = Fraction(2) ** k
    a1 = n - s1 / (p / 2)
    a2 = (s2 / (p / 4) - n * (n + 1) + 2 * n * a1) / 2
    a3 = -(s3 / (p / 8) - n * n * (n + 3) + (3 * n * n + 3 * n - 2) * a1 - 6 * n * a2) / 6
    out = []
    for name, a in (("A1", a1), ("A2", a2), ("A3", a3)):
        if a.denominator != 1 or a < 0:
            raise InconsistentDataError(f"{name} of the dual came out as {a}")
        out.append(int(a))
    return tuple(out)


def dual_triples_direct(D: ElementSet, ctx: FieldCtx) -> tuple[int, int, int]:
    """Dual words of weight <= 3 read off the columns: a zero column, two
    equal columns, or three columns summing to zero."""
    a1 = int(D.has_zero)
    a2 = 0  # D is a set, and distinct d give distinct columns
    el = D.elements()
    el = el[el != 0]
    a3 = kernels.triple_count(el, D.mask)
    return a1, a2, int(a3)


def dual_a3_expected(m: int) -> int:
    return ((1 << (2 * m - 4)) - (1 << (m - 3))) // 3


# -- export ----------------------------------------------------------------------


def to_csv(dist: WeightDistribution) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["weight", "count"])
    for weight, count in sorted(dist.counts.items()):
        w.writerow([weight, count])
    return buf.getvalue()


def to_json_dict(dist: WeightDistribution, dual=None) -> dict:
    if dual is None:
        dual = dual_low_weights(dist)
    return {
        "n": dist.n,
        "k": dist.k,
        "distribution": dist.as_dict(),
        "dual": {"A1": dual[0], "A2": dual[1], "A3": dual[2]},
        "enumerator": enumerator_string(dist),
    }
