from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trinodiff import codes as cd
from trinodiff import diffset as ds
from trinodiff import gf2m
from trinodiff import polyfun as pf
from trinodiff.errors import HypothesisError, InconsistentDataError
from trinodiff.gf2m import make_field
from trinodiff.sets import ElementSet


def vs(name, ctx):
    return pf.punctured_value_set(pf.catalog(name, ctx.m), ctx)


def brute_distribution(D, ctx):
    """Enumerate codewords as bit tuples; count distinct words by weight."""
    words = set()
    for x in range(ctx.size):
        words.add(tuple(gf2m.trace(gf2m.mul(x, int(d), ctx), ctx) for d in D.elements()))
    out = {}
    for w in words:
        out[sum(w)] = out.get(sum(w), 0) + 1
    return out


def brute_dual(D, ctx, max_weight=3):
    """Dual words of weight <= 3: subsets of columns summing to zero."""
    cols = [int(d) for d in D.elements()]
    return tuple(
        sum(1 for s in combinations(cols, w) if np.bitwise_xor.reduce(s) == 0)
        for w in range(1, max_weight + 1)
    )


# -- Walsh spectrum ------------------------------------------------------------------


def test_walsh_trivial_supports(ctx5):
    empty = cd.walsh_spectrum(ElementSet.empty(ctx5), ctx5)
    assert empty.values[0] == 32 and not empty.values[1:].any()
    full = ElementSet(np.ones(32, dtype=bool), 5)
    spec = cd.walsh_spectrum(full, ctx5)
    assert spec.values[0] == -32 and not spec.values[1:].any()


@pytest.mark.parametrize("m", [3, 5, 7, 9])
def test_walsh_fast_matches_direct(m):
    ctx = make_field(m)
    for name in ("f11", "sextic1"):
        D = vs(name, ctx)
        fast = cd.walsh_spectrum(D, ctx, "fast")
        direct = cd.walsh_spectrum(D, ctx, "direct")
        assert np.array_equal(fast.values, direct.values)
        assert fast.parseval_ok()
        assert fast.values[0] == (1 << m) - 2 * len(D)


def test_walsh_f11_m5(ctx5):
    spec = cd.walsh_spectrum(vs("f11", ctx5), ctx5, "direct")
    assert spec.values[0] == 0
    assert set(spec.distinct()) <= {-8, 0, 8}


@settings(max_examples=30, deadline=None)
@given(st.sets(st.integers(0, 127)))
def test_walsh_random_sets(elements):
    ctx = make_field(7)
    D = ElementSet.from_elements(sorted(elements), ctx)
    fast = cd.walsh_spectrum(D, ctx, "fast")
    assert np.array_equal(fast.values, cd.walsh_spectrum(D, ctx, "direct").values)
    assert fast.parseval_ok()


def test_walsh_unknown_method(ctx5):
    with pytest.raises(ValueError):
        cd.walsh_spectrum(ElementSet.empty(ctx5), ctx5, "slow")


def test_trace_gram_nondegenerate(small_ctx):
    G = cd.trace_gram(small_ctx)
    rows = [int("".join(str(b) for b in r), 2) for r in G]
    assert cd.gf2_rank(rows) == small_ctx.m


# -- weight distributions ----------------------------------------------------------


def test_f11_m5_distribution(ctx5):
    dist = cd.weight_distribution(vs("f11", ctx5), ctx5)
    assert (dist.n, dist.k) == (16, 5)
    assert dist.counts == {0: 1, 6: 6, 8: 15, 10: 10}
    assert dist.min_distance == 6
    assert cd.enumerator_string(dist) == "1 + 6z^6 + 15z^8 + 10z^10"


def test_segre_m5_distribution(ctx5):
    dist = cd.weight_distribution(vs("sextic1", ctx5), ctx5)
    assert (dist.n, dist.k) == (15, 5)
    assert dist.counts == {0: 1, 6: 10, 8: 15, 10: 6}
    assert cd.enumerator_string(dist) == "1 + 10z^6 + 15z^8 + 6z^10"


def test_singleton_code(ctx5):
    D = ElementSet.from_elements([1], ctx5)
    with pytest.raises(HypothesisError) as info:
        cd.weight_distribution(D, ctx5)
    assert info.value.w is not None
    dist = cd.weight_distribution(D, ctx5, strict=False)
    assert (dist.n, dist.k, dist.counts) == (1, 1, {0: 1, 1: 1})
    assert cd.enumerator_string(dist) == "1 + z"


def test_enumerator_trivial():
    assert cd.enumerator_string(cd.WeightDistribution({0: 1}, 4, 0)) == "1"


def test_distribution_must_sum():
    with pytest.raises(InconsistentDataError):
        cd.WeightDistribution({0: 1, 3: 2}, 3, 1)


@pytest.mark.parametrize("name", ["f11", "sextic1", "f3", "canon_b"])
def test_codemaker_matches_direct_and_brute(name, ctx5):
    D = vs(name, ctx5)
    fast = cd.weight_distribution(D, ctx5)
    assert fast == cd.weight_distribution_direct(D, ctx5)
    assert fast.counts == brute_distribution(D, ctx5)


@settings(max_examples=30, deadline=None)
@given(st.sets(st.integers(1, 31), min_size=1))
def test_codemaker_nonstrict_matches_brute(elements):
    ctx = make_field(5)
    D = ElementSet.from_elements(sorted(elements), ctx)
    dist = cd.weight_distribution(D, ctx, strict=False)
    assert dist == cd.weight_distribution_direct(D, ctx)
    assert dist.counts == brute_distribution(D, ctx)
    assert dist.k == cd.dimension(D)


@pytest.mark.parametrize("m", [5, 7, 9])
def test_tri_weight(m):
    ctx = make_field(m)
    for name in pf.TRINOMIALS:
        assert cd.weight_distribution(vs(name, ctx), ctx).counts == cd.tri_weight_expected(m)


def test_tri_weight_expected_m5():
    assert cd.tri_weight_expected(5) == {0: 1, 6: 6, 8: 15, 10: 10}
    assert cd.tri_weight_swapped(5) == {0: 1, 6: 10, 8: 15, 10: 6}


def test_complement_code_swaps_extremes(ctx7):
    D6 = vs("sextic1", ctx7)
    A = D6 | ElementSet.from_elements([0], ctx7)
    B = ElementSet(~A.mask, 7)
    wa = cd.walsh_spectrum(A, ctx7).values
    wb = cd.walsh_spectrum(B, ctx7).values
    assert np.array_equal(wa, -wb)
    assert cd.weight_distribution(D6, ctx7).counts == cd.tri_weight_swapped(7)
    assert cd.weight_distribution(B, ctx7).counts == cd.tri_weight_expected(7)


@pytest.mark.parametrize("n", [3, 5])
def test_trace_set_code(n, ctx7):
    T = ds.trace_power_set(n, ctx7)
    dist = cd.weight_distribution(T, ctx7)
    assert dist.n == 64  # |T_n| = 2^(m-1)
    assert dist.counts == cd.tri_weight_expected(7)


# -- dual code ---------------------------------------------------------------------------


def test_pless_repetition_code():
    assert cd.dual_low_weights(cd.WeightDistribution({0: 1, 3: 1}, 3, 1)) == (0, 3, 0)


def test_pless_zero_code():
    # dual is all of GF(2)^n
    assert cd.dual_low_weights(cd.WeightDistribution({0: 1}, 4, 0)) == (4, 6, 4)


def test_pless_small_cases():
    # span of e1 in GF(2)^3: dual is span(e2, e3)
    assert cd.dual_low_weights(cd.WeightDistribution({0: 1, 1: 1}, 3, 1)) == (2, 1, 0)


def test_pless_rejects_inconsistent():
    # a weight-2 word cannot live in length 1
    with pytest.raises(InconsistentDataError):
        cd.dual_low_weights(cd.WeightDistribution({0: 1, 2: 1}, 1, 1))


def test_direct_triples_single(ctx5):
    a, b = 3, 12
    D = ElementSet.from_elements([a, b, a ^ b], ctx5)
    assert cd.dual_triples_direct(D, ctx5) == (0, 0, 1)


def test_dual_f11_m5(ctx5):
    D = vs("f11", ctx5)
    dist = cd.weight_distribution(D, ctx5)
    assert cd.dual_low_weights(dist) == (0, 0, 20)
    assert cd.dual_triples_direct(D, ctx5) == (0, 0, 20)
    assert brute_dual(D, ctx5) == (0, 0, 20)
    assert cd.dual_a3_expected(5) == 20


def test_dual_trace_one(ctx5):
    T1 = ds.trace_power_set(1, ctx5)
    # T_1 spans only a hyperplane complement; use the non-strict route
    dist = cd.weight_distribution(T1, ctx5, strict=False)
    assert cd.dual_low_weights(dist) == cd.dual_triples_direct(T1, ctx5) == brute_dual(T1, ctx5)


@settings(max_examples=30, deadline=None)
@given(st.sets(st.integers(0, 31), min_size=1))
def test_dual_routes_agree(elements):
    ctx = make_field(5)
    D = ElementSet.from_elements(sorted(elements), ctx)
    dist = cd.weight_distribution(D, ctx, strict=False)
    assert cd.dual_low_weights(dist) == cd.dual_triples_direct(D, ctx) == brute_dual(D, ctx)


@pytest.mark.parametrize("m", [7, 9])
def test_dual_a3(m):
    ctx = make_field(m)
    D = vs("f5", ctx)
    dist = cd.weight_distribution(D, ctx)
    assert cd.dual_low_weights(dist) == cd.dual_triples_direct(D, ctx) == (0, 0, cd.dual_a3_expected(m))


# -- export ---------------------------------------------------------------------------


def test_exports(ctx5):
    dist = cd.weight_distribution(vs("f11", ctx5), ctx5)
    assert cd.to_csv(dist) == "weight,count\n0,1\n6,6\n8,15\n10,10\n"
    doc = cd.to_json_dict(dist)
    assert doc["dual"] == {"A1": 0, "A2": 0, "A3": 20}
    assert doc["distribution"] == {"0": 1, "6": 6, "8": 15, "10": 10}
