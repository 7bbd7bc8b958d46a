"""Acceptance gate: one PASS/FAIL line per criterion.

Each criterion is evaluated on the exhaustive check registry at zero
tolerance.  Lines are printed as the tests run (visible with -s) and again
in the terminal summary.
"""

import functools
import time

import pytest

from trinodiff import suites

from conftest import ACCEPTANCE_LINES

M_ALL = (5, 7, 9, 11)
M_SMALL = (5, 7, 9)
TRINOMIALS = [f"f{i}" for i in range(1, 12)]


@functools.lru_cache(maxsize=None)
def run(m, suite, deep=False):
    """(results by id without the .m suffix, wall seconds)"""
    t0 = time.perf_counter()
    out = {}
    for c in suites.select([m], [suite]):
        r = suites.run_check(c, deep=deep)
        out[r.id.rsplit(".m", 1)[0]] = r
    return out, time.perf_counter() - t0


def verdict(number, title, problems):
    ok = not problems
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}"
    if problems:
        line += "  [" + "; ".join(problems[:6]) + (" ..." if len(problems) > 6 else "") + "]"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def expect(results, m, names, status="pass"):
    allowed = {status} if isinstance(status, str) else set(status)
    bad = []
    for n in names:
        r = results.get(n)
        if r is None:
            bad.append(f"{n}.m{m} missing")
        elif r.status not in allowed:
            bad.append(f"{n}.m{m} {r.status} observed={r.observed} expected={r.expected}")
    return bad


def test_criterion_01_difference_sets():
    problems = []
    for m in M_ALL:
        res, secs = run(m, "diffsets")
        problems += expect(res, m, [f"diffset.{f}" for f in TRINOMIALS])
        for f in TRINOMIALS:
            obs = res[f"diffset.{f}"].observed
            if obs["k"] != 1 << (m - 1) or obs["lambda_histogram"] != {str(1 << (m - 2)): (1 << m) - 2}:
                problems.append(f"{f}.m{m} params {obs['k']}, {obs['lambda_histogram']}")
        if secs > 60:
            problems.append(f"m={m} took {secs:.1f}s > 60s")
    verdict(1, "Singer difference sets D(f1..f11)* for m=5,7,9,11", problems)


def test_criterion_02_preimage_profiles():
    problems = []
    for m in M_ALL:
        res, _ = run(m, "profiles")
        problems += expect(res, m, [f"profile.{f}" for f in TRINOMIALS])
    verdict(2, "(0,1,4) preimage profiles with (2^(m-1)-1)/3 four-preimage values", problems)


def test_criterion_03_equivalence_classes():
    problems = []
    for m in M_ALL:
        res, _ = run(m, "equivalence")
        problems += expect(res, m, [f"equiv.canon_{c}" for c in "abcd"])
    verdict(3, "four value-set equivalence classes", problems)


def test_criterion_04_curve_counts():
    names = ["curves.c41_C2", "curves.c41_C3",            # 2^m - 2, 2^m - 1
             "curves.c42_C2", "curves.c42_C3", "curves.c42_C4",  # 2^m, 2^m, 0
             "curves.ec1_points", "curves.big241_points"]  # no qualifying points
    problems = []
    for m in M_ALL:
        res, _ = run(m, "curves", deep=True)
        problems += expect(res, m, names)
    verdict(4, "curve point counts, m=5,7,9 and m=11 with deep scans", problems)


def test_criterion_05_functional_identities():
    names = ["g_trace", "g_square", "g_preimages", "eq_i", "eq_ii", "eq_iii", "eq_iv",
             "second_i", "second_ii", "p_profile", "h_profile", "change_of_functions"]
    problems = []
    for m in M_ALL:
        res, _ = run(m, "identities")
        problems += expect(res, m, [f"ident.{n}" for n in names])
    verdict(5, "functional identities and cardinalities over F*", problems)


def test_criterion_06_set_identities():
    names = ["canon_c_power", "canon_c_trace", "canon_d_power", "canon_d_trace",
             "partition_canon_a", "partition_canon_b"]
    problems = []
    for m in M_ALL:
        res, _ = run(m, "identities")
        problems += expect(res, m, [f"ident.{n}" for n in names])
    verdict(6, "power/trace set identities and the two partitions of F*", problems)


def test_criterion_07_codes():
    problems = []
    for m in M_ALL:
        res, _ = run(m, "codes")
        problems += expect(res, m, [f"codes.{f}" for f in TRINOMIALS[2:]])
        problems += expect(res, m, ["codes.f1", "codes.f2"], ("conjecture-pass", "conjecture-fail"))
        problems += expect(res, m, [f"codes.walsh.{f}" for f in TRINOMIALS])
        if m <= 9:
            problems += expect(res, m, [f"codes.direct.{f}" for f in TRINOMIALS])
        for f in TRINOMIALS[2:]:
            obs = res[f"codes.{f}"].observed
            if (obs.get("n"), obs.get("k")) != (1 << (m - 1), m):
                problems.append(f"codes.{f}.m{m} parameters [{obs.get('n')}, {obs.get('k')}]")
    verdict(7, "tri-weight codes, Walsh fast = direct, CodeMaker = enumeration", problems)


def test_criterion_08_dual_codes():
    problems = []
    for m in M_ALL:
        res, _ = run(m, "codes")
        problems += expect(res, m, [f"codes.dual.{f}" for f in TRINOMIALS[2:]])
        problems += expect(res, m, ["codes.dual.f1", "codes.dual.f2"], "conjecture-pass")
    verdict(8, "dual codes A1=A2=0, A3=(2^(2m-4)-2^(m-3))/3, moments = triple count", problems)


def test_criterion_09_root_profiles():
    problems = []
    for m in M_SMALL:
        res, _ = run(m, "curves")
        ks = sorted({1, 2, (m + 1) // 2})
        problems += expect(res, m, [f"curves.roots_k{k}" for k in ks] + ["curves.six_five"])
    verdict(9, "root-count histograms for k in {1,2,(m+1)/2}; six/five check", problems)


def test_criterion_10_observations():
    problems = []
    for m in M_ALL:
        res, _ = run(m, "observations")
        for f in TRINOMIALS:
            r = res[f"obs.{f}"]
            if not r.status.startswith("conjecture"):
                problems.append(f"obs.{f}.m{m} not in the conjecture channel")
            elif r.status != "conjecture-pass":
                problems.append(f"obs.{f}.m{m} {r.status} observed={r.observed}")
    verdict(10, "f/x+1 two-to-one, Singer value-sets, equivalent to the listed binomials", problems)
