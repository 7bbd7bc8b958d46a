"""Registry of verification checks, grouped into suites and keyed by stable ids.

Every check returns ``(ok, observed, expected)`` with JSON-ready payloads.
Checks marked ``conjecture`` report conjecture-pass / conjecture-fail instead
of pass / fail.
"""

from __future__ import annotations

import functools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable

import numpy as np

from . import codes as cd
from . import curves as cv
from . import diffset as ds
from . import gf2m
from . import polyfun as pf
from .errors import CatalogError
from .gf2m import make_field
from .sets import ElementSet

SUITES = ("diffsets", "profiles", "equivalence", "curves", "identities", "codes", "observations")

# grid scans at or above this degree need --deep
DEEP_CURVES_FROM = 13
# CodeMaker vs direct enumeration is cross-checked up to this degree
DIRECT_CODES_UP_TO = 9


@dataclass(frozen=True)
class Check:
    id: str
    suite: str
    m: int
    fn: Callable
    conjecture: bool = False
    deep_only: bool = False


@dataclass
class CheckResult:
    id: str
    status: str
    observed: dict
    expected: dict
    elapsed: float | None = None

    def as_dict(self):
        return {
            "id": self.id,
            "status": self.status,
            "observed": self.observed,
            "expected": self.expected,
            "elapsed": self.elapsed,
        }


# -- cached building blocks ----------------------------------------------------


@functools.lru_cache(maxsize=None)
def _value_set(name: str, m: int) -> ElementSet:
    return pf.punctured_value_set(pf.catalog(name, m), make_field(m))


@functools.lru_cache(maxsize=None)
def _profile(name: str, m: int) -> pf.ValueProfile:
    return pf.preimage_profile(pf.catalog(name, m), make_field(m))


def _arr(name, xs, ctx):
    return pf.eval_array(pf.catalog(name, ctx.m), xs, ctx)


def _nz(ctx):
    return np.arange(1, ctx.size, dtype=np.int64)


def _h(d: dict) -> dict:
    return {str(k): v for k, v in sorted(d.items())}


def _singer(m, complement=False):
    fam = ds.singer_families(m)["singer_complement" if complement else "singer"]
    return {"v": fam[0], "k": fam[1], "lambda": fam[2]}


def _verdict(D, ctx):
    v = ds.check_difference_set(D, ctx)
    return v, {"v": v.v, "k": v.k, "lambda": v.lam}


def _first_bad(mask, xs):
    bad = np.flatnonzero(~np.asarray(mask))
    return None if len(bad) == 0 else int(np.asarray(xs)[bad[0]])


# -- diffsets ------------------------------------------------------------------


def _diffset_trinomial(name):
    def run(m):
        ctx = make_field(m)
        D = _value_set(name, m)
        v, obs = _verdict(D, ctx)
        obs["lambda_histogram"] = _h(v.lambda_histogram)
        exp = _singer(m)
        return obs["k"] == exp["k"] and obs["lambda"] == exp["lambda"], obs, exp

    return run


# -- profiles ------------------------------------------------------------------


def _profile_014(name):
    def run(m):
        prof = _profile(name, m)
        fours = ((1 << (m - 1)) - 1) // 3
        exp = {"histogram": _h({1: (1 << m) - 1 - 4 * fours, 4: fours}), "zero_hits": 0}
        obs = {"histogram": _h(prof.histogram), "zero_hits": prof.zero_hits}
        return obs == exp, obs, exp

    return run


# -- equivalence ---------------------------------------------------------------


def _equivalence(rep, members):
    def run(m):
        base = _value_set(rep, m)
        eq = {f: _value_set(f, m) == base for f in members}
        return all(eq.values()), {"equal_to_" + rep: eq}, {"equal_to_" + rep: {f: True for f in members}}

    return run


# -- curves --------------------------------------------------------------------


def _curve_count(name, expected_fn, x_nonzero=False):
    def run(m):
        ctx = make_field(m)
        n = cv.count_affine_points(cv.curve(name), ctx, x_nonzero=x_nonzero)
        exp = expected_fn(m)
        return n == exp, {"points": n}, {"points": exp}

    return run


def _curve_off_origin(m):
    """Points of the degree-106 components away from the origin; together
    they must account for every ordered pair a != b with equal values."""
    ctx = make_field(m)
    obs = {}
    for name in ("c42_C2", "c42_C3", "c42_C4"):
        xs, ys = cv.zero_points(cv.curve(name), ctx)
        obs[name] = int(((xs != 0) | (ys != 0)).sum())
    per = _profile("canon_b", m).per_value[1:]
    pairs = int((per * (per - 1)).sum())
    obs["ordered_pairs"] = pairs
    exp = {"c42_C2": (1 << m) - 2, "c42_C3": (1 << m) - 2, "c42_C4": 0,
           "ordered_pairs": (1 << (m + 1)) - 4}
    ok = obs == exp and obs["c42_C2"] + obs["c42_C3"] + obs["c42_C4"] == pairs
    return ok, obs, exp


def _decomposition(whole, parts):
    def run(m):
        ctx = make_field(m)
        zero_whole = cv.eval_grid(cv.curve(whole), ctx) == 0
        zero_union = np.zeros_like(zero_whole)
        for p in parts:
            zero_union |= cv.eval_grid(cv.curve(p), ctx) == 0
        mism = int((zero_whole != zero_union).sum())
        return mism == 0, {"mismatched_points": mism}, {"mismatched_points": 0}

    return run


def _singular(name):
    def run(m):
        pts = cv.find_singular_points(cv.curve(name), make_field(m))
        return not pts, {"singular_points": [list(p) for p in pts[:10]], "count": len(pts)}, {"count": 0}

    return run


def _ec1_identity(m):
    ctx = make_field(m)
    lhs = cv.eval_grid(cv.curve("ec1_curve"), ctx)
    G = cv.eval_grid(cv.EC1_G, ctx)
    H = cv.eval_grid(cv.EC1_H, ctx)
    rhs = gf2m.mul_array(G, G, ctx) ^ gf2m.mul_array(G, H, ctx) ^ gf2m.mul_array(H, H, ctx)
    mism = int((lhs != rhs).sum())
    return mism == 0, {"mismatched_points": mism}, {"mismatched_points": 0}


def _bluher(k):
    def run(m):
        prof = cv.bluher_root_profile(k, make_field(m))
        exp = cv.expected_root_profile(k, m)
        return prof.histogram == exp, {"histogram": _h(prof.histogram)}, {"histogram": _h(exp)}

    return run


def _six_five(m):
    rep = cv.six_five_check(make_field(m))
    obs = {"failures": [list(f) for f in rep.failures[:10]], "f_two_roots": len(rep.two_root_parameters)}
    return rep.ok, obs, {"failures": []}


def _cubic(m):
    bad = cv.cubic_factor_check(make_field(m))
    return not bad, {"disagreements": len(bad)}, {"disagreements": 0}


# -- identities ----------------------------------------------------------------


def _all_ok(mask, xs, **extra):
    ok = bool(np.all(mask))
    obs = {"holds": ok, "first_counterexample": _first_bad(mask, xs)}
    obs.update(extra)
    return ok, obs, {"holds": True}


def _g_trace(m):
    ctx = make_field(m)
    xs = np.arange(ctx.size, dtype=np.int64)
    return _all_ok(ctx.trace_table[_arr("g", xs, ctx)] == 0, xs)


def _g_square(m):
    ctx = make_field(m)
    xs = np.arange(ctx.size, dtype=np.int64)
    gg = _arr("g", _arr("g", xs, ctx), ctx)
    return _all_ok(gg == (gf2m.mul_array(xs, xs, ctx) ^ xs), xs)


def _g_preimages(m):
    ctx = make_field(m)
    xs = np.arange(ctx.size, dtype=np.int64)
    gt = _arr("g", xs, ctx)
    counts = np.bincount(gt, minlength=ctx.size)
    two_to_one = set(np.unique(counts).tolist()) <= {0, 2}
    tr = ctx.trace_table[xs]
    hit_iff_trace0 = bool(np.all((counts == 2) == (tr == 0)))
    pairs = bool(np.all(gt == gt[xs ^ 1])) and bool(np.all(tr != tr[xs ^ 1]))
    ok = two_to_one and hit_iff_trace0 and pairs
    obs = {"two_to_one": two_to_one, "two_preimages_iff_trace0": hit_iff_trace0,
           "preimages_are_alpha_alpha_plus_1": pairs}
    return ok, obs, {k: True for k in obs}


def _eq_i(m):
    ctx = make_field(m)
    xs = _nz(ctx)
    s = ctx.sigma
    lhs = gf2m.pow_array(_arr("canon_c", xs, ctx), s + 1, ctx)
    u = gf2m.pow_array(xs, Fraction(-(s + 1), 2), ctx)
    rhs = _arr("g", _arr("h", u, ctx), ctx) ^ 1
    return _all_ok(lhs == rhs, xs)


def _eq_ii(m):
    ctx = make_field(m)
    xs = _nz(ctx)
    qv = _arr("Q", xs, ctx)
    nonzero = bool(np.all(qv != 0))
    if not nonzero:
        return False, {"Q_nonzero": False}, {"Q_nonzero": True}
    back = _arr("R", gf2m.inv_array(qv, ctx), ctx)
    permutes = len(np.unique(qv)) == ctx.order
    ok, obs, exp = _all_ok(back == xs, xs)
    obs.update(Q_nonzero=True, Q_permutes=permutes)
    exp.update(Q_nonzero=True, Q_permutes=True)
    return ok and permutes, obs, exp


def _eq_iii(m):
    ctx = make_field(m)
    xs = _nz(ctx)
    arg = gf2m.inv_array(xs, ctx) ^ gf2m.pow_array(xs, ctx.sigma - 1, ctx)
    rhs = _arr("g", arg, ctx) ^ xs
    return _all_ok(_arr("h", xs, ctx) == rhs, xs)


def _eq_iv(m):
    ctx = make_field(m)
    xs = _nz(ctx)
    return _all_ok(ctx.trace_table[_arr("h", xs, ctx)] == ctx.trace_table[xs], xs)


def _second_i(m):
    ctx = make_field(m)
    xs = _nz(ctx)
    s = ctx.sigma
    lhs = gf2m.pow_array(_arr("f_s", xs, ctx), 3, ctx)
    rhs = _arr("g", _arr("h_s", gf2m.pow_array(xs, 3 * s + 3, ctx), ctx), ctx) ^ 1
    return _all_ok(lhs == rhs, xs)


def _second_ii(m):
    ctx = make_field(m)
    xs = _nz(ctx)
    r = _arr("R", xs, ctx)
    live = r != 0
    rhs = np.zeros_like(xs)
    rhs[live] = _arr("h", r[live], ctx)
    mask = (~live) | (_arr("h_s", xs, ctx) == rhs)
    return _all_ok(mask, xs, R_zero_at=int((~live).sum()))


def _linear_hist_expected(m):
    return {0: ((1 << m) + 1) // 3, 1: 1 << (m - 1), 3: ((1 << (m - 1)) - 1) // 3}


def _p_profile(m):
    ctx = make_field(m)
    prof = _profile("p", m)
    hist = prof.parameter_histogram(include_zero=True)
    a = _nz(ctx)
    tr = ctx.trace_table[_arr("R", gf2m.inv_array(a, ctx), ctx)]
    cnt = prof.per_value[1:]
    criterion = bool(np.all((cnt == 1) == (tr == 0)))
    exp_hist = _linear_hist_expected(m)
    obs = {"histogram": _h(hist), "zero_bucket": prof.zero_hits, "one_preimage_iff_trace0": criterion}
    exp = {"histogram": _h(exp_hist), "one_preimage_iff_trace0": True}
    return hist == exp_hist and criterion, obs, exp


def _h_profile(m):
    ctx = make_field(m)
    prof = _profile("h", m)
    hist = prof.parameter_histogram(include_zero=True)
    h1_is_t1 = prof.values_with(1) == ds.trace_power_set(1, ctx)
    exp_hist = _linear_hist_expected(m)
    obs = {"histogram": _h(hist), "zero_bucket": prof.zero_hits, "H1_equals_T1": h1_is_t1}
    exp = {"histogram": _h(exp_hist), "H1_equals_T1": True}
    return hist == exp_hist and h1_is_t1, obs, exp


def _change_of_functions(m):
    ctx = make_field(m)
    ph = _profile("h", m).per_value
    pp = _profile("p", m).per_value
    a = np.arange(2, ctx.size, dtype=np.int64)
    b = gf2m.pow_array(a, Fraction(ctx.sigma, 2), ctx) ^ 1
    qb = _arr("Q", b, ctx)
    mask = ph[a] == pp[qb]
    ok, obs, exp = _all_ok(mask, a, h_preimages_of_1=int(ph[1]))
    exp["h_preimages_of_1"] = 1
    return ok and int(ph[1]) == 1, obs, exp


def _set_eq(left_fn, right_fn):
    def run(m):
        ctx = make_field(m)
        A, B = left_fn(ctx), right_fn(ctx)
        eq = A == B
        return eq, {"equal": eq, "sizes": [len(A), len(B)], "symmetric_difference": len((A - B) | (B - A))}, {"equal": True}

    return run


def _partition(left_fn, right_fn):
    def run(m):
        ctx = make_field(m)
        A, B = left_fn(ctx), right_fn(ctx)
        disjoint = A.isdisjoint(B)
        covers = (A | B) == ElementSet.full_group(ctx)
        obs = {"disjoint": disjoint, "union_is_group": covers, "sizes": [len(A), len(B)]}
        return disjoint and covers, obs, {"disjoint": True, "union_is_group": True}

    return run


def _two_to_one(name):
    def run(m):
        prof = _profile(name, m)
        exp = {"histogram": _h({2: (1 << (m - 1)) - 1}), "zero_hits": 1}
        obs = {"histogram": _h(prof.histogram), "zero_hits": prof.zero_hits}
        return obs == exp, obs, exp

    return run


def _sextic_trace(m):
    ctx = make_field(m)
    xs = np.arange(ctx.size, dtype=np.int64)
    vals = pf.field_table(pf.catalog("sextic2", m), ctx)
    order = np.argsort(vals, kind="stable")
    sv = vals[order]
    same = sv[1:] == sv[:-1]
    a, b = xs[order][:-1][same], xs[order][1:][same]
    tr = ctx.trace_table[a ^ b]
    return _all_ok(tr == 1, a, colliding_pairs=int(same.sum()))


def _diffset_of(set_fn, complement=False):
    def run(m):
        ctx = make_field(m)
        v, obs = _verdict(set_fn(ctx), ctx)
        exp = _singer(m, complement)
        return obs == exp, obs, exp

    return run


def _dickson(m):
    ctx = make_field(m)
    t = pf.field_table(pf.catalog("dickson_shift", m), ctx)
    n = len(np.unique(t))
    return n == ctx.size, {"distinct_values": n}, {"distinct_values": ctx.size}


def _complement_law(m):
    ctx = make_field(m)
    obs, exp, ok = {}, {}, True
    for name in ("f1", "sextic1"):
        D = _value_set(name, m)
        v = ds.check_difference_set(D, ctx)
        c = ds.check_difference_set(ds.complement_set(D, ctx), ctx)
        want = [v.v, v.v - v.k, v.v - 2 * v.k + v.lam]
        obs[name] = [c.v, c.k, c.lam]
        exp[name] = want
        ok &= obs[name] == want
    return ok, obs, exp


def _power_law(m):
    ctx = make_field(m)
    D = _value_set("f11", m)
    base = ds.check_difference_set(D, ctx).params
    obs, exp = {}, {}
    for e in (3, 5, ctx.sigma + 1):
        if gcd(e, ctx.order) != 1:
            continue
        obs[str(e)] = list(ds.check_difference_set(ds.power_image(D, e, ctx), ctx).params)
        exp[str(e)] = list(base)
    return obs == exp, obs, exp


def _dd_set(k):
    def run(m):
        ctx = make_field(m)
        v, obs = _verdict(ds.dillon_dobbertin_set(k, ctx), ctx)
        exp = _singer(m, complement=True)
        return obs == exp, obs, exp

    return run


# -- codes ---------------------------------------------------------------------


def _code_tri(name):
    def run(m):
        ctx = make_field(m)
        D = _value_set(name, m)
        dist = cd.weight_distribution(D, ctx)
        exp_counts = cd.tri_weight_expected(m)
        obs = {"n": dist.n, "k": dist.k, "distribution": dist.as_dict(),
               "enumerator": cd.enumerator_string(dist)}
        exp = {"n": 1 << (m - 1), "k": m, "distribution": _h(exp_counts)}
        return dist.counts == exp_counts and dist.n == exp["n"] and dist.k == m, obs, exp

    return run


def _code_walsh(name):
    def run(m):
        ctx = make_field(m)
        D = _value_set(name, m)
        fast = cd.walsh_spectrum(D, ctx, "fast")
        direct = cd.walsh_spectrum(D, ctx, "direct")
        agree = bool(np.array_equal(fast.values, direct.values))
        obs = {"fast_equals_direct": agree, "parseval": fast.parseval_ok(),
               "values": _h(fast.distinct())}
        return agree and fast.parseval_ok(), obs, {"fast_equals_direct": True, "parseval": True}

    return run


def _code_direct(name):
    def run(m):
        ctx = make_field(m)
        D = _value_set(name, m)
        a = cd.weight_distribution(D, ctx, strict=False)
        b = cd.weight_distribution_direct(D, ctx)
        return a == b, {"walsh": a.as_dict(), "direct": b.as_dict()}, {"equal": True}

    return run


def _code_dual(name):
    def run(m):
        ctx = make_field(m)
        D = _value_set(name, m)
        pless = list(cd.dual_low_weights(cd.weight_distribution(D, ctx, strict=False)))
        direct = list(cd.dual_triples_direct(D, ctx))
        exp = [0, 0, cd.dual_a3_expected(m)]
        return pless == direct == exp, {"pless": pless, "direct": direct}, {"pless": exp, "direct": exp}

    return run


def _code_segre(m):
    ctx = make_field(m)
    D = _value_set("sextic1", m)
    dist = cd.weight_distribution(D, ctx)
    exp = cd.tri_weight_swapped(m)
    ok = dist.counts == exp and dist.n == (1 << (m - 1)) - 1 and dist.k == m
    return ok, {"n": dist.n, "k": dist.k, "distribution": dist.as_dict()}, {
        "n": (1 << (m - 1)) - 1, "k": m, "distribution": _h(exp)}


def _code_complement(m):
    ctx = make_field(m)
    D6 = _value_set("sextic1", m)
    A = ElementSet(D6.mask.copy() | (np.arange(ctx.size) == 0), m)
    B = ElementSet(~A.mask, m)
    wa = cd.walsh_spectrum(A, ctx).values
    wb = cd.walsh_spectrum(B, ctx).values
    anti = bool(np.array_equal(wa, -wb))
    dist = cd.weight_distribution(B, ctx)
    ok = anti and dist.counts == cd.tri_weight_expected(m)
    return ok, {"walsh_antisymmetric": anti, "distribution_B": dist.as_dict()}, {
        "walsh_antisymmetric": True, "distribution_B": _h(cd.tri_weight_expected(m))}


def _code_trace(n_fn):
    def run(m):
        ctx = make_field(m)
        T = ds.trace_power_set(n_fn(ctx), ctx)
        dist = cd.weight_distribution(T, ctx)
        exp = cd.tri_weight_expected(m)
        obs = {"n": dist.n, "k": dist.k, "distribution": dist.as_dict()}
        # the length is |T_n| = 2^(m-1), not 2^(m-1) - 1
        ok = dist.counts == exp and dist.k == m and dist.n == 1 << (m - 1)
        return ok, obs, {"n": 1 << (m - 1), "k": m, "distribution": _h(exp)}

    return run


# -- observations --------------------------------------------------------------


def _observation(name):
    def run(m):
        ctx = make_field(m)
        q = pf.quotient_plus_one(pf.catalog(name, m))
        prof = pf.preimage_profile(q, ctx)
        two_to_one = set(prof.histogram) == {2}
        v = ds.check_difference_set(prof.value_set, ctx)
        same = prof.value_set == pf.punctured_value_set(pf.observed_quotient(name), ctx)
        obs = {"histogram": _h(prof.histogram), "zero_hits": prof.zero_hits,
               "singer_family": v.singer_family, "equals_listed_binomial": same}
        exp = {"histogram": _h({2: (1 << (m - 1)) - 1}), "singer_family": "singer_complement",
               "equals_listed_binomial": True}
        return two_to_one and v.singer_family is not None and same, obs, exp

    return run


# -- registry ------------------------------------------------------------------


def checks_for(m: int) -> list[Check]:
    out = []

    def add(cid, suite, fn, **kw):
        out.append(Check(f"{cid}.m{m}", suite, m, fn, **kw))

    for f in pf.TRINOMIALS:
        add(f"diffset.{f}", "diffsets", _diffset_trinomial(f))

    for f in pf.TRINOMIALS + tuple(pf.CLASSES):
        add(f"profile.{f}", "profiles", _profile_014(f))

    for rep, members in pf.CLASSES.items():
        add(f"equiv.{rep}", "equivalence", _equivalence(rep, members))

    full = lambda m_: 1 << m_
    add("curves.c41_C2", "curves", _curve_count("c41_C2", lambda m_: full(m_) - 2), deep_only=True)
    add("curves.c41_C3", "curves", _curve_count("c41_C3", lambda m_: full(m_) - 1), deep_only=True)
    add("curves.c41_union", "curves", _decomposition("c41_C", ["c41_C1", "c41_C2", "c41_C3"]), deep_only=True)
    add("curves.c42_C2", "curves", _curve_count("c42_C2", full), deep_only=True)
    add("curves.c42_C3", "curves", _curve_count("c42_C3", full), deep_only=True)
    add("curves.c42_C4", "curves", _curve_count("c42_C4", lambda m_: 0), deep_only=True)
    add("curves.c42_off_origin", "curves", _curve_off_origin, deep_only=True)
    add("curves.c42_union", "curves",
        _decomposition("c42_C_cleared", ["c42_C1", "c42_C2", "c42_C3", "c42_C4"]), deep_only=True)
    add("curves.ec1_points", "curves", _curve_count("ec1_curve", lambda m_: 0, x_nonzero=True), deep_only=True)
    add("curves.ec1_singular", "curves", _singular("ec1_curve"), deep_only=True)
    add("curves.ec1_identity", "curves", _ec1_identity, deep_only=True)
    add("curves.big241_points", "curves", _curve_count("big241_curve", lambda m_: 0), deep_only=True)
    add("curves.big241_singular", "curves", _singular("big241_curve"), deep_only=True)
    add("curves.helper_E", "curves", _curve_count("helper_E", full), deep_only=True)
    add("curves.helper_sixfive", "curves", _curve_count("helper_sixfive", full), deep_only=True)
    add("curves.helper_E17", "curves", _curve_count("helper_E17", full), deep_only=True)
    add("curves.helper_E3", "curves", _curve_count("helper_E3", lambda m_: full(m_) - 1), deep_only=True)
    for k in sorted({1, 2, (m + 1) // 2}):
        if k < m:
            add(f"curves.roots_k{k}", "curves", _bluher(k))
    add("curves.six_five", "curves", _six_five)
    add("curves.cubic_criterion", "curves", _cubic)

    add("ident.g_trace", "identities", _g_trace)
    add("ident.g_square", "identities", _g_square)
    add("ident.g_preimages", "identities", _g_preimages)
    add("ident.eq_i", "identities", _eq_i)
    add("ident.eq_ii", "identities", _eq_ii)
    add("ident.eq_iii", "identities", _eq_iii)
    add("ident.eq_iv", "identities", _eq_iv)
    add("ident.second_i", "identities", _second_i)
    add("ident.second_ii", "identities", _second_ii)
    add("ident.p_profile", "identities", _p_profile)
    add("ident.h_profile", "identities", _h_profile)
    add("ident.change_of_functions", "identities", _change_of_functions)
    vs = lambda name: (lambda ctx: _value_set(name, ctx.m))
    T = lambda n_fn: (lambda ctx: ds.trace_power_set(n_fn(ctx), ctx))
    add("ident.canon_c_power", "identities",
        _set_eq(lambda c: ds.power_image(_value_set("canon_c", c.m), c.sigma + 1, c), T(lambda c: 1)))
    add("ident.canon_c_trace", "identities", _set_eq(vs("canon_c"), T(lambda c: c.sigma + 1)))
    add("ident.canon_d_power", "identities",
        _set_eq(lambda c: ds.power_image(_value_set("canon_d", c.m), 3, c), T(lambda c: 1)))
    add("ident.canon_d_trace", "identities", _set_eq(vs("canon_d"), T(lambda c: 3)))
    add("ident.partition_canon_a", "identities", _partition(vs("canon_a"), vs("sextic1")))
    add("ident.partition_canon_b", "identities",
        _partition(lambda c: ds.power_image(_value_set("canon_b", c.m), 17, c),
                   lambda c: ds.dd_value_set(241, c)))
    add("ident.sextic1_two_to_one", "identities", _two_to_one("sextic1"))
    add("ident.sextic2_two_to_one", "identities", _two_to_one("sextic2"))
    add("ident.sextic_trace", "identities", _sextic_trace)
    add("ident.sextic1_diffset", "identities", _diffset_of(vs("sextic1"), complement=True))
    add("ident.dickson_permutes", "identities", _dickson)
    add("ident.trace_T3", "identities", _diffset_of(T(lambda c: 3)))
    add("ident.trace_Tsigma1", "identities", _diffset_of(T(lambda c: c.sigma + 1)))
    for k in range(1, m // 2 + 1):
        if gcd(k, m) == 1:
            add(f"ident.dd_k{k}", "identities", _dd_set(k))
    add("ident.complement_law", "identities", _complement_law)
    add("ident.power_law", "identities", _power_law)

    for f in pf.TRINOMIALS:
        conj = f in ("f1", "f2")
        add(f"codes.{f}", "codes", _code_tri(f), conjecture=conj)
        add(f"codes.walsh.{f}", "codes", _code_walsh(f))
        if m <= DIRECT_CODES_UP_TO:
            add(f"codes.direct.{f}", "codes", _code_direct(f))
        add(f"codes.dual.{f}", "codes", _code_dual(f), conjecture=conj)
    add("codes.segre", "codes", _code_segre)
    add("codes.complement", "codes", _code_complement)
    add("codes.trace_T3", "codes", _code_trace(lambda c: 3))
    add("codes.trace_Tsigma1", "codes", _code_trace(lambda c: c.sigma + 1))

    for f in pf.TRINOMIALS:
        add(f"obs.{f}", "observations", _observation(f), conjecture=True)

    return out


def select(m_values, suites=SUITES) -> list[Check]:
    wanted = set(suites)
    return [c for m in m_values for c in checks_for(m) if c.suite in wanted]


def run_check(check: Check, deep: bool = False, timings: bool = False) -> CheckResult:
    if check.deep_only and check.m >= DEEP_CURVES_FROM and not deep:
        return CheckResult(check.id, "skipped", {"reason": f"grid scan at m={check.m} needs --deep"}, {})
    t0 = time.perf_counter()
    try:
        ok, observed, expected = check.fn(check.m)
    except CatalogError as exc:
        # e.g. an exponent such as 2^(m-4) that does not exist at m = 3
        return CheckResult(check.id, "skipped", {"reason": str(exc)}, {})
    elapsed = round((time.perf_counter() - t0) * 1000, 3) if timings else None
    if check.conjecture:
        status = "conjecture-pass" if ok else "conjecture-fail"
    else:
        status = "pass" if ok else "fail"
    return CheckResult(check.id, status, observed, expected, elapsed)
