"""Loop kernels compiled with numba.  Signatures match _numpy_kernels."""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _fmul(a, b, exp, log):
    if a == 0 or b == 0:
        return 0
    return exp[log[a] + log[b]]


@njit(cache=True, nogil=True)
def difference_counts(logs, order):
    n = logs.shape[0]
    counts = np.zeros(order, dtype=np.int64)
    for i in range(n):
        li = logs[i]
        for j in range(n):
            if i != j:
                t = li - logs[j]
                if t < 0:
                    t += order
                counts[t] += 1
    return counts


@njit(cache=True, nogil=True)
def _mono_power(base, e, exp, log, order):
    if e == 0:
        return 1
    if base == 0:
        return 0
    return exp[(log[base] * e) % order]


@njit(cache=True, nogil=True)
def _coefficients(x, I, slot, L, exp, log, order):
    coef = np.zeros(L, dtype=np.int64)
    for k in range(I.shape[0]):
        coef[slot[k]] ^= _mono_power(x, I[k], exp, log, order)
    return coef


@njit(cache=True, nogil=True)
def _ext_exp(exp, order):
    # zero-safe antilog: the log of 0 is taken as 2*order, and any index
    # at or past 2*order reads 0, so products need no branch
    ext = np.zeros(4 * order + 2, dtype=np.int64)
    ext[: 2 * order] = exp[: 2 * order]
    return ext


@njit(cache=True, nogil=True)
def _safe_log(v, log, order):
    return 2 * order if v == 0 else log[v]


@njit(cache=True, nogil=True)
def _ylog_table(Ju, q, exp, log, order):
    L = Ju.shape[0]
    tab = np.empty((q, L), dtype=np.int64)
    for y in range(q):
        for l in range(L):
            tab[y, l] = _safe_log(_mono_power(y, Ju[l], exp, log, order), log, order)
    return tab


@njit(cache=True, nogil=True)
def _row_logs(x, I, slot, L, exp, log, order, clog):
    coef = _coefficients(x, I, slot, L, exp, log, order)
    for l in range(L):
        clog[l] = _safe_log(coef[l], log, order)


@njit(cache=True, nogil=True)
def _row_value(clog, ylog, y, ext):
    acc = 0
    for l in range(clog.shape[0]):
        acc ^= ext[clog[l] + ylog[y, l]]
    return acc


def _group(J):
    Ju, slot = np.unique(np.asarray(J, dtype=np.int64), return_inverse=True)
    return Ju.astype(np.int64), slot.astype(np.int64)


@njit(cache=True, nogil=True)
def _bipoly_grid(I, Ju, slot, q, exp, log, order):
    L = Ju.shape[0]
    ext = _ext_exp(exp, order)
    ylog = _ylog_table(Ju, q, exp, log, order)
    clog = np.empty(L, dtype=np.int64)
    out = np.empty((q, q), dtype=np.int64)
    for x in range(q):
        _row_logs(x, I, slot, L, exp, log, order, clog)
        for y in range(q):
            out[x, y] = _row_value(clog, ylog, y, ext)
    return out


def bipoly_grid(I, J, q, exp, log, order):
    Ju, slot = _group(J)
    return _bipoly_grid(np.asarray(I, dtype=np.int64), Ju, slot, q, exp, log, order)


@njit(cache=True, nogil=True)
def _bipoly_zero_points(I, Ju, slot, q, exp, log, order):
    L = Ju.shape[0]
    ext = _ext_exp(exp, order)
    ylog = _ylog_table(Ju, q, exp, log, order)
    clog = np.empty(L, dtype=np.int64)
    cap = 4 * q
    xs = np.empty(cap, dtype=np.int64)
    ys = np.empty(cap, dtype=np.int64)
    n = 0
    for x in range(q):
        _row_logs(x, I, slot, L, exp, log, order, clog)
        for y in range(q):
            if _row_value(clog, ylog, y, ext) == 0:
                if n == cap:
                    cap *= 2
                    xs2 = np.empty(cap, dtype=np.int64)
                    ys2 = np.empty(cap, dtype=np.int64)
                    xs2[:n] = xs[:n]
                    ys2[:n] = ys[:n]
                    xs, ys = xs2, ys2
                xs[n] = x
                ys[n] = y
                n += 1
    return xs[:n].copy(), ys[:n].copy()


def bipoly_zero_points(I, J, q, exp, log, order):
    Ju, slot = _group(J)
    return _bipoly_zero_points(np.asarray(I, dtype=np.int64), Ju, slot, q, exp, log, order)


@njit(cache=True, nogil=True)
def _fwht_inplace(a):
    n = a.shape[0]
    h = 1
    while h < n:
        for start in range(0, n, 2 * h):
            for i in range(start, start + h):
                u = a[i]
                v = a[i + h]
                a[i] = u + v
                a[i + h] = u - v
        h *= 2


def fwht(a):
    out = np.array(a, dtype=np.int64)
    _fwht_inplace(out)
    return out


@njit(cache=True, nogil=True)
def _walsh_direct(f, exp, log, order, trace_table):
    q = f.shape[0]
    out = np.empty(q, dtype=np.int64)
    for w in range(q):
        s = 0
        for x in range(q):
            bit = f[x] ^ trace_table[_fmul(w, x, exp, log)]
            s += 1 - 2 * bit
        out[w] = s
    return out


def walsh_direct(indicator, exp, log, order, trace_table):
    return _walsh_direct(np.asarray(indicator, dtype=np.int64), exp, log, order, trace_table)


@njit(cache=True, nogil=True)
def _code_weights(d, q, exp, log, order, trace_table):
    out = np.zeros(q, dtype=np.int64)
    for x in range(q):
        s = 0
        for k in range(d.shape[0]):
            s += trace_table[_fmul(x, d[k], exp, log)]
        out[x] = s
    return out


def code_weights(defining, q, exp, log, order, trace_table):
    return _code_weights(np.asarray(defining, dtype=np.int64), q, exp, log, order, trace_table)


@njit(cache=True, nogil=True)
def _triple_count(e, member):
    n = e.shape[0]
    total = 0
    for i in range(n):
        a = e[i]
        for j in range(i + 1, n):
            b = e[j]
            c = a ^ b
            if c > b and member[c]:
                total += 1
    return total


def triple_count(elements, member):
    e = np.sort(np.asarray(elements, dtype=np.int64))
    return int(_triple_count(e, np.asarray(member, dtype=np.bool_)))


@njit(cache=True, nogil=True)
def root_counts(e, q, exp, log, order):
    xe = np.empty(q, dtype=np.int64)
    for x in range(q):
        xe[x] = _mono_power(x, e, exp, log, order)
    out = np.zeros(q, dtype=np.int64)
    for a in range(q):
        c = 0
        for x in range(q):
            if xe[x] ^ _fmul(a, x, exp, log) ^ a == 0:
                c += 1
        out[a] = c
    return out
