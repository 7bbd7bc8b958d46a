"""Bit-packed arithmetic in GF(2^m) for odd m.

Elements are plain Python ints (or numpy integer arrays) whose bit i is the
coefficient of x^i in the polynomial basis.  Scalar routines use
shift-and-add multiplication; the array routines go through log/antilog
tables built once per field.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from numbers import Integral

import numpy as np

from .errors import ConfigError, DomainError

MIN_M = 3
MAX_M = 19

# Low-weight irreducible moduli, one per supported odd degree.
MODULI = {
    3: 0b1011,  # x^3 + x + 1
    5: 0b100101,  # x^5 + x^2 + 1
    7: (1 << 7) | 0b11,  # x^7 + x + 1
    9: (1 << 9) | 0b11,  # x^9 + x + 1
    11: (1 << 11) | 0b101,  # x^11 + x^2 + 1
    13: (1 << 13) | 0b11011,  # x^13 + x^4 + x^3 + x + 1
    15: (1 << 15) | 0b11,  # x^15 + x + 1
    17: (1 << 17) | 0b1001,  # x^17 + x^3 + 1
    19: (1 << 19) | 0b100111,  # x^19 + x^5 + x^2 + x + 1
}


def poly_mod(a: int, b: int) -> int:
    """Remainder of a modulo b as GF(2)[x] polynomials."""
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def is_irreducible(poly: int) -> bool:
    """Brute-force irreducibility test over GF(2): trial division by every
    polynomial of degree 1..deg/2."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for q in range(1 << d, 1 << (d + 1)):
            if poly_mod(poly, q) == 0:
                return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def clmul_reduce(a: int, b: int, m: int, modulus: int) -> int:
    """Shift-and-add product of a and b reduced by modulus."""
    r = 0
    top = 1 << m
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= modulus
    return r


def _pow_plain(a: int, e: int, m: int, modulus: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = clmul_reduce(r, a, m, modulus)
        a = clmul_reduce(a, a, m, modulus)
        e >>= 1
    return r


def trace_by_definition(x: int, m: int, modulus: int) -> int:
    """Tr(x) = x + x^2 + ... + x^(2^(m-1)), summed literally."""
    s = 0
    y = x
    for _ in range(m):
        s ^= y
        y = clmul_reduce(y, y, m, modulus)
    if s not in (0, 1):
        raise AssertionError("trace landed outside GF(2)")
    return s


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """Immutable GF(2^m) context.

    ``exp`` has length 2*order so that exp[i + j] needs no reduction for
    i, j < order; ``log[0]`` is -1.
    """

    m: int
    modulus: int
    order: int
    sigma: int
    generator: int
    trace_mask: int
    exp: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)
    trace_table: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return self.order + 1

    @property
    def modulus_hex(self) -> str:
        return hex(self.modulus)

    def nonzero(self) -> np.ndarray:
        """All of F* in log order: entry i is generator**i."""
        return self.exp[: self.order]

    def __repr__(self):
        return f"FieldCtx(m={self.m}, modulus={self.modulus_hex})"


@functools.lru_cache(maxsize=None)
def make_field(m: int) -> FieldCtx:
    if not isinstance(m, Integral) or isinstance(m, bool):
        raise ConfigError(f"m must be an integer, got {m!r}")
    m = int(m)
    if m % 2 == 0:
        raise ConfigError(
            f"m must be odd (got {m}); supported degrees are odd {MIN_M}..{MAX_M}"
        )
    if not MIN_M <= m <= MAX_M:
        raise ConfigError(f"m={m} outside supported range: odd {MIN_M}..{MAX_M}")
    modulus = MODULI[m]
    if modulus.bit_length() - 1 != m or not is_irreducible(modulus):
        raise ConfigError(f"built-in modulus {modulus:#x} for m={m} is not irreducible")

    order = (1 << m) - 1
    sigma = 1 << ((m + 1) // 2)
    if (sigma * sigma) % order != 2:
        raise AssertionError("sigma^2 != 2 mod 2^m - 1")

    factors = _prime_factors(order)
    generator = next(
        g
        for g in range(2, 1 << m)
        if all(_pow_plain(g, order // p, m, modulus) != 1 for p in factors)
    )

    exp = np.empty(2 * order, dtype=np.int64)
    x = 1
    for i in range(order):
        exp[i] = x
        x = clmul_reduce(x, generator, m, modulus)
    exp[order:] = exp[:order]
    log = np.full(1 << m, -1, dtype=np.int64)
    log[exp[:order]] = np.arange(order, dtype=np.int64)

    # Tr is GF(2)-linear: Tr(a) is the parity of a & mask.
    trace_mask = 0
    for i in range(m):
        trace_mask |= trace_by_definition(1 << i, m, modulus) << i
    vals = np.arange(1 << m, dtype=np.int64) & trace_mask
    parity = np.zeros(1 << m, dtype=np.uint8)
    while vals.any():
        parity ^= (vals & 1).astype(np.uint8)
        vals >>= 1

    for arr in (exp, log, parity):
        arr.setflags(write=False)
    return FieldCtx(
        m=m,
        modulus=modulus,
        order=order,
        sigma=sigma,
        generator=generator,
        trace_mask=trace_mask,
        exp=exp,
        log=log,
        trace_table=parity,
    )


def _check(a: int, ctx: FieldCtx) -> int:
    a = int(a)
    if not 0 <= a <= ctx.order:
        raise DomainError(f"{a} is not an element of GF(2^{ctx.m})")
    return a


def mul(a: int, b: int, ctx: FieldCtx) -> int:
    return clmul_reduce(_check(a, ctx), _check(b, ctx), ctx.m, ctx.modulus)


def canonical_exponent(e, order: int) -> tuple[int, bool]:
    """Reduce an int or Fraction exponent into Z/order.

    Returns (residue, plain) where plain is True for nonnegative integers,
    the only exponents that also make sense at zero.
    """
    if isinstance(e, Fraction):
        if e.denominator == 1:
            e = e.numerator
        else:
            if gcd(e.denominator, order) != 1:
                raise DomainError(
                    f"denominator {e.denominator} is not invertible mod {order}"
                )
            return (e.numerator * pow(e.denominator, -1, order)) % order, False
    if not isinstance(e, Integral):
        raise TypeError(f"exponent must be int or Fraction, got {type(e).__name__}")
    e = int(e)
    return e % order, e >= 0


def pow_signed(x: int, e, ctx: FieldCtx) -> int:
    """x**e with e read in Z/(2^m - 1); negative and fractional exponents
    need x != 0."""
    x = _check(x, ctx)
    r, plain = canonical_exponent(e, ctx.order)
    if x == 0:
        if not plain:
            raise DomainError("0 raised to a negative or fractional exponent")
        return 1 if int(e) == 0 else 0
    return _pow_plain(x, r, ctx.m, ctx.modulus)


def inv(x: int, ctx: FieldCtx) -> int:
    if x == 0:
        raise DomainError("0 has no inverse")
    return pow_signed(x, ctx.order - 1, ctx)


def trace(x: int, ctx: FieldCtx) -> int:
    return bin(_check(x, ctx) & ctx.trace_mask).count("1") & 1


# -- array versions -----------------------------------------------------------


def mul_array(a, b, ctx: FieldCtx) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    out = ctx.exp[ctx.log[a] + ctx.log[b]]
    return np.where((a == 0) | (b == 0), 0, out)


def pow_array(x, e, ctx: FieldCtx) -> np.ndarray:
    x = np.asarray(x, dtype=np.int64)
    r, plain = canonical_exponent(e, ctx.order)
    zero = x == 0
    if zero.any() and not plain:
        raise DomainError("0 raised to a negative or fractional exponent")
    out = ctx.exp[(ctx.log[x] * r) % ctx.order]
    if zero.any():
        out = np.where(zero, 1 if int(e) == 0 else 0, out)
    return out


def inv_array(x, ctx: FieldCtx) -> np.ndarray:
    x = np.asarray(x, dtype=np.int64)
    if (x == 0).any():
        raise DomainError("0 has no inverse")
    return ctx.exp[(ctx.order - ctx.log[x]) % ctx.order]


def trace_array(x, ctx: FieldCtx) -> np.ndarray:
    return ctx.trace_table[np.asarray(x, dtype=np.int64)]
