"""Render check results as JSON, CSV or an aligned text table."""

from __future__ import annotations

import csv
import io
import json

from .gf2m import make_field

FORMATS = ("json", "csv", "text")


def summarize(results) -> dict:
    counts = {"pass": 0, "fail": 0, "conjecture": 0, "conjecture_pass": 0,
              "conjecture_fail": 0, "skipped": 0}
    for r in results:
        if r.status.startswith("conjecture"):
            counts["conjecture"] += 1
            counts[r.status.replace("-", "_")] += 1
        else:
            counts[r.status] += 1
    return counts


def _field_info(m_values):
    infos = [{"m": m, "modulus_hex": make_field(m).modulus_hex} for m in m_values]
    if not infos:
        return None
    return infos[0] if len(infos) == 1 else infos


def render_report(results, fmt: str = "json", m_values=()) -> bytes:
    results = sorted(results, key=lambda r: r.id)
    if fmt == "json":
        doc = {
            "version": 1,
            "field": _field_info(list(m_values)),
            "checks": [r.as_dict() for r in results],
            "summary": summarize(results),
        }
        return (json.dumps(doc, indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "status", "elapsed"])
        for r in results:
            w.writerow([r.id, r.status, "" if r.elapsed is None else r.elapsed])
        return buf.getvalue().encode()
    if fmt == "text":
        width = max([len(r.id) for r in results] + [2])
        lines = [f"{'id':<{width}}  {'status':<16}  elapsed_ms"]
        for r in results:
            el = "-" if r.elapsed is None else f"{r.elapsed:.3f}"
            lines.append(f"{r.id:<{width}}  {r.status:<16}  {el}")
        s = summarize(results)
        lines.append("")
        lines.append(", ".join(f"{k}={v}" for k, v in s.items()))
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
