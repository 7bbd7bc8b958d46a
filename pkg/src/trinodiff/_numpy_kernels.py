"""Pure-numpy implementations of the exhaustive-sweep kernels.

Each function mirrors the loop kernel of the same name in _numba_kernels.
Work is chunked so that intermediate 2-D arrays stay near CHUNK entries.
"""

import numpy as np

CHUNK = 1 << 20


def _rows(n, width):
    step = max(1, CHUNK // max(width, 1))
    for lo in range(0, n, step):
        yield lo, min(n, lo + step)


def difference_counts(logs, order):
    """counts[t] = #{(i, j), i != j : logs[i] - logs[j] == t (mod order)}."""
    logs = np.asarray(logs, dtype=np.int64)
    n = len(logs)
    counts = np.zeros(order, dtype=np.int64)
    for lo, hi in _rows(n, n):
        d = (logs[lo:hi, None] - logs[None, :]) % order
        counts += np.bincount(d.ravel(), minlength=order)
    counts[0] -= n
    return counts


def _bipoly_rows(I, J, xs, ys, exp, log, order):
    lx = log[xs][:, None]
    ly = log[ys][None, :]
    zx = (xs == 0)[:, None]
    zy = (ys == 0)[None, :]
    out = np.zeros((len(xs), len(ys)), dtype=np.int64)
    for i, j in zip(I, J):
        term = exp[(i * lx + j * ly) % order]
        dead = np.zeros_like(out, dtype=bool)
        if i > 0:
            dead = dead | zx
        if j > 0:
            dead = dead | zy
        out ^= np.where(dead, 0, term)
    return out


def bipoly_grid(I, J, q, exp, log, order):
    """Value of sum_k x^I[k] y^J[k] at every (x, y); row index is x."""
    I = np.asarray(I, dtype=np.int64)
    J = np.asarray(J, dtype=np.int64)
    pts = np.arange(q, dtype=np.int64)
    out = np.empty((q, q), dtype=np.int64)
    for lo, hi in _rows(q, q):
        out[lo:hi] = _bipoly_rows(I, J, pts[lo:hi], pts, exp, log, order)
    return out


def bipoly_zero_points(I, J, q, exp, log, order):
    I = np.asarray(I, dtype=np.int64)
    J = np.asarray(J, dtype=np.int64)
    pts = np.arange(q, dtype=np.int64)
    xs, ys = [], []
    for lo, hi in _rows(q, q):
        block = _bipoly_rows(I, J, pts[lo:hi], pts, exp, log, order)
        r, c = np.nonzero(block == 0)
        xs.append(r + lo)
        ys.append(c)
    return np.concatenate(xs).astype(np.int64), np.concatenate(ys).astype(np.int64)


def fwht(a):
    """Unnormalised Walsh-Hadamard transform; returns a new array."""
    a = np.array(a, dtype=np.int64)
    n = len(a)
    h = 1
    while h < n:
        v = a.reshape(-1, 2, h)
        a = np.concatenate((v[:, 0] + v[:, 1], v[:, 0] - v[:, 1]), axis=1).ravel()
        h *= 2
    return a


def walsh_direct(indicator, exp, log, order, trace_table):
    """W(w) = sum_x (-1)^(f(x) + Tr(w x)), literal double sum."""
    q = len(indicator)
    f = np.asarray(indicator, dtype=np.int64)
    pts = np.arange(q, dtype=np.int64)
    lx = log[pts]
    out = np.empty(q, dtype=np.int64)
    for lo, hi in _rows(q, q):
        w = pts[lo:hi]
        prod = exp[(log[w][:, None] + lx[None, :]) % order]
        prod = np.where((w == 0)[:, None] | (pts == 0)[None, :], 0, prod)
        bits = trace_table[prod].astype(np.int64) ^ f[None, :]
        out[lo:hi] = q - 2 * bits.sum(axis=1)
    return out


def code_weights(defining, q, exp, log, order, trace_table):
    """weights[x] = #{d in defining : Tr(x d) = 1} for every x."""
    d = np.asarray(defining, dtype=np.int64)
    ld = log[d]
    pts = np.arange(q, dtype=np.int64)
    out = np.empty(q, dtype=np.int64)
    for lo, hi in _rows(q, max(len(d), 1)):
        x = pts[lo:hi]
        prod = exp[(log[x][:, None] + ld[None, :]) % order]
        prod = np.where((x == 0)[:, None] | (d == 0)[None, :], 0, prod)
        out[lo:hi] = trace_table[prod].astype(np.int64).sum(axis=1)
    return out


def triple_count(elements, member):
    """Unordered triples {a, b, c} of distinct members with a ^ b ^ c == 0."""
    e = np.sort(np.asarray(elements, dtype=np.int64))
    total = 0
    for lo, hi in _rows(len(e), len(e)):
        a = e[lo:hi, None]
        b = e[None, :]
        c = a ^ b
        ok = (b > a) & (c > b) & member[c]
        total += int(ok.sum())
    return total


def root_counts(e, q, exp, log, order):
    """counts[a] = #{x in F : x^e + a x + a = 0} for every a in F."""
    pts = np.arange(q, dtype=np.int64)
    lx = log[pts]
    xe = np.where(pts == 0, 0, exp[(lx * e) % order])
    out = np.empty(q, dtype=np.int64)
    for lo, hi in _rows(q, q):
        a = pts[lo:hi]
        ax = exp[(log[a][:, None] + lx[None, :]) % order]
        ax = np.where((a == 0)[:, None] | (pts == 0)[None, :], 0, ax)
        v = xe[None, :] ^ ax ^ a[:, None]
        out[lo:hi] = (v == 0).sum(axis=1)
    return out
