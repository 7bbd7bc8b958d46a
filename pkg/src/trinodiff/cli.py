"""Command-line entry point: ``trinodiff verify|profile|curve|code``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import codes as cd
from . import curves as cv
from . import diffset as ds
from . import polyfun as pf
from . import report, suites
from .errors import ConfigError, TrinodiffError
from .gf2m import make_field

log = logging.getLogger("trinodiff")


def _parse_m(text: str) -> list[int]:
    try:
        ms = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ConfigError(f"--m expects comma-separated integers, got {text!r}") from None
    if not ms:
        raise ConfigError("--m is empty")
    for m in ms:
        make_field(m)  # validates
    return ms


def _parse_suites(text: str | None) -> list[str]:
    if not text:
        return list(suites.SUITES)
    names = [t.strip() for t in text.split(",") if t.strip()]
    unknown = [n for n in names if n not in suites.SUITES]
    if unknown:
        raise ConfigError(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(suites.SUITES)}")
    return names


def _default_threads() -> int:
    raw = os.environ.get("TRINODIFF_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ConfigError(f"TRINODIFF_THREADS must be an integer, got {raw!r}") from None


def _write(data: bytes, out: str | None):
    if out is None or out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    try:
        with open(out, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise ConfigError(f"cannot write {out}: {exc.strerror}") from None


def run_suites(m_values, suite_names, threads=1, deep=False, timings=False):
    checks = suites.select(m_values, suite_names)
    log.info("running %d checks on %d thread(s)", len(checks), threads)

    def run(c):
        r = suites.run_check(c, deep=deep, timings=timings)
        log.debug("%s %s", r.id, r.status)
        return r

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, checks))
    else:
        results = [run(c) for c in checks]
    return sorted(results, key=lambda r: r.id)


def exit_status(results, strict=False) -> int:
    bad = {"fail", "conjecture-fail"} if strict else {"fail"}
    return 1 if any(r.status in bad for r in results) else 0


def cmd_verify(args) -> int:
    ms = _parse_m(args.m)
    names = _parse_suites(args.suites)
    threads = args.threads if args.threads is not None else _default_threads()
    results = run_suites(ms, names, threads=threads, deep=args.deep, timings=args.timings)
    _write(report.render_report(results, args.format, ms), args.out)
    s = report.summarize(results)
    log.info("summary: %s", s)
    return exit_status(results, args.strict)


def cmd_profile(args) -> int:
    ms = _parse_m(args.m)
    out = []
    for m in ms:
        ctx = make_field(m)
        f = pf.catalog(args.map, m)
        prof = pf.preimage_profile(f, ctx)
        v = ds.check_difference_set(prof.value_set, ctx)
        out.append({
            "map": args.map,
            "m": m,
            "exponents": list(f.exponents(m)),
            "value_set_size": len(prof.value_set),
            "histogram": {str(k): c for k, c in sorted(prof.histogram.items())},
            "zero_hits": prof.zero_hits,
            "difference_set": v.as_dict(),
        })
    _emit(out, args.format)
    return 0


def cmd_curve(args) -> int:
    ms = _parse_m(args.m)
    C = cv.curve(args.id)
    out = []
    for m in ms:
        ctx = make_field(m)
        out.append({
            "curve": args.id,
            "m": m,
            "polynomial": str(C) if len(C) <= 40 else f"<{len(C)} monomials, degree {C.degree}>",
            "points": cv.count_affine_points(C, ctx),
            "points_x_nonzero": cv.count_affine_points(C, ctx, x_nonzero=True),
            "singular_points": len(cv.find_singular_points(C, ctx)),
        })
    _emit(out, args.format)
    return 0


def _code_set(spec: str, m: int):
    ctx = make_field(m)
    if spec.startswith("T") and spec[1:].isdigit():
        return ds.trace_power_set(int(spec[1:]), ctx)
    return pf.punctured_value_set(pf.catalog(spec, m), ctx)


def cmd_code(args) -> int:
    ms = _parse_m(args.m)
    out = []
    for m in ms:
        ctx = make_field(m)
        D = _code_set(args.set, m)
        dist = cd.weight_distribution(D, ctx, strict=False)
        doc = cd.to_json_dict(dist, cd.dual_triples_direct(D, ctx))
        doc.update({"set": args.set, "m": m})
        out.append(doc)
        if args.csv:
            path = args.csv if len(ms) == 1 else args.csv.replace(".csv", f".m{m}.csv")
            _write(cd.to_csv(dist).encode(), path)
    _emit(out, args.format)
    return 0


def _emit(rows, fmt):
    if fmt == "json":
        data = rows[0] if len(rows) == 1 else rows
        _write((json.dumps(data, indent=2) + "\n").encode(), None)
    else:
        for row in rows:
            for k, v in row.items():
                print(f"{k:>16}: {v}")
            print()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trinodiff", description="Exhaustive checks over GF(2^m).")
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--m", required=True, help="comma-separated odd degrees, e.g. 5,7,9")
    v.add_argument("--suites", help=f"comma-separated subset of {','.join(suites.SUITES)}")
    v.add_argument("--format", choices=report.FORMATS, default="text")
    v.add_argument("--out", help="output path (default stdout)")
    v.add_argument("--strict", action="store_true", help="conjecture-fail also sets a nonzero exit")
    v.add_argument("--deep", action="store_true", help=f"run curve grid scans for m >= {suites.DEEP_CURVES_FROM}")
    v.add_argument("--threads", type=int, help="worker threads (default $TRINODIFF_THREADS or 1)")
    v.add_argument("--timings", action="store_true", help="record per-check elapsed ms")
    v.set_defaults(func=cmd_verify)

    pr = sub.add_parser("profile", help="value-set and preimage profile of a catalog map")
    pr.add_argument("--map", required=True, help=", ".join(pf.catalog_ids()))
    pr.add_argument("--m", required=True)
    pr.add_argument("--format", choices=("json", "text"), default="json")
    pr.set_defaults(func=cmd_profile)

    c = sub.add_parser("curve", help="affine point count of a catalog curve")
    c.add_argument("--id", required=True, help=", ".join(cv.curve_ids()))
    c.add_argument("--m", required=True)
    c.add_argument("--format", choices=("json", "text"), default="json")
    c.set_defaults(func=cmd_curve)

    k = sub.add_parser("code", help="weight distribution of C_D")
    k.add_argument("--set", required=True, help="catalog map id (value-set) or Tn for {x : Tr(x^n) = 1}")
    k.add_argument("--m", required=True)
    k.add_argument("--csv", help="write weight,count CSV here")
    k.add_argument("--format", choices=("json", "text"), default="json")
    k.set_defaults(func=cmd_code)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except TrinodiffError as exc:
        print(f"trinodiff: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
