import csv
import io
import json

import pytest

from trinodiff import cli, report, suites
from trinodiff.suites import CheckResult

SUITE_SIZES = {3: 138, 5: 140, 7: 141, 9: 141, 11: 132, 13: 133}


def test_render_empty():
    doc = json.loads(report.render_report([], "json"))
    assert doc["checks"] == []
    assert doc["field"] is None
    assert doc["summary"]["pass"] == 0 and doc["summary"]["fail"] == 0


def test_render_single():
    r = CheckResult("x.m5", "pass", {"a": 1}, {"a": 1})
    doc = json.loads(report.render_report([r], "json", [5]))
    assert doc["version"] == 1
    assert doc["field"] == {"m": 5, "modulus_hex": "0x25"}
    assert doc["checks"] == [{"id": "x.m5", "status": "pass", "observed": {"a": 1},
                              "expected": {"a": 1}, "elapsed": None}]


def test_render_csv_and_text():
    rs = [CheckResult("b.m5", "fail", {}, {}), CheckResult("a.m5", "conjecture-pass", {}, {}, 1.5)]
    rows = list(csv.reader(io.StringIO(report.render_report(rs, "csv").decode())))
    assert rows == [["id", "status", "elapsed"], ["a.m5", "conjecture-pass", "1.5"], ["b.m5", "fail", ""]]
    text = report.render_report(rs, "text").decode()
    assert text.splitlines()[1].startswith("a.m5")
    assert "conjecture_pass=1" in text
    with pytest.raises(ValueError):
        report.render_report(rs, "xml")


@pytest.mark.parametrize("m", sorted(SUITE_SIZES))
def test_suite_sizes_match_docs(m):
    assert len(suites.checks_for(m)) == SUITE_SIZES[m]


def test_check_ids_unique():
    ids = [c.id for m in (5, 7) for c in suites.checks_for(m)]
    assert len(ids) == len(set(ids))


def test_diffsets_suite_m5():
    res = cli.run_suites([5], ["diffsets"])
    assert len(res) == 11
    assert all(r.status == "pass" for r in res)
    assert all((r.observed["k"], r.observed["lambda"]) == (16, 8) for r in res)


def test_codes_suite_m5():
    res = {r.id: r.status for r in cli.run_suites([5], ["codes"])}
    for i in range(3, 12):
        assert res[f"codes.f{i}.m5"] == "pass"
    assert res["codes.f1.m5"] == res["codes.f2.m5"] == "conjecture-pass"


def test_m3_undefined_maps_are_skipped():
    res = {r.id: r for r in cli.run_suites([3], ["diffsets"])}
    assert res["diffset.f2.m3"].status == "skipped"
    assert "reason" in res["diffset.f2.m3"].observed


def test_deep_skip():
    check = next(c for c in suites.checks_for(13) if c.id == "curves.c41_C2.m13")
    assert suites.DEEP_CURVES_FROM == 13
    assert suites.run_check(check).status == "skipped"


def test_report_byte_identical_across_threads():
    a = report.render_report(cli.run_suites([5], ["profiles", "identities"], threads=1), "json", [5])
    b = report.render_report(cli.run_suites([5], ["profiles", "identities"], threads=3), "json", [5])
    assert a == b


def test_cli_verify_writes_report(tmp_path):
    out = tmp_path / "r.json"
    rc = cli.main(["verify", "--m", "5", "--suites", "diffsets,equivalence", "--format", "json", "--out", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["summary"]["pass"] == 15


def test_cli_verify_exit_codes(tmp_path):
    out = str(tmp_path / "r.txt")
    # observations contain a conjecture-fail: only --strict turns it into exit 1
    assert cli.main(["verify", "--m", "5", "--suites", "observations", "--out", out]) == 0
    assert cli.main(["verify", "--m", "5", "--suites", "observations", "--out", out, "--strict"]) == 1


def test_cli_config_errors(capsys, tmp_path):
    assert cli.main(["verify", "--m", "4"]) == 2
    assert "m must be odd" in capsys.readouterr().err
    assert cli.main(["verify", "--m", "5", "--suites", "bogus"]) == 2
    assert cli.main(["verify", "--m", "5", "--suites", "diffsets", "--out", str(tmp_path / "no" / "x")]) == 2
    assert cli.main(["verify", "--m", "five"]) == 2


def test_cli_threads_env(monkeypatch, tmp_path):
    monkeypatch.setenv("TRINODIFF_THREADS", "x")
    assert cli.main(["verify", "--m", "5", "--suites", "diffsets", "--out", str(tmp_path / "o")]) == 2
    monkeypatch.setenv("TRINODIFF_THREADS", "2")
    assert cli.main(["verify", "--m", "5", "--suites", "diffsets", "--out", str(tmp_path / "o")]) == 0


def test_cli_profile(capsys):
    assert cli.main(["profile", "--map", "f11", "--m", "7"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["histogram"] == {"1": 43, "4": 21}
    assert doc["difference_set"]["lambda"] == 32


def test_cli_curve(capsys):
    assert cli.main(["curve", "--id", "c41_C2", "--m", "9"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["points"] == 510
    assert doc["singular_points"] == 0
    assert cli.main(["curve", "--id", "nope", "--m", "5"]) == 2


def test_cli_code(capsys, tmp_path):
    path = tmp_path / "w.csv"
    assert cli.main(["code", "--set", "f11", "--m", "7", "--csv", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["enumerator"] == "1 + 28z^28 + 63z^32 + 36z^36"
    assert doc["dual"]["A3"] == 336
    assert path.read_text().splitlines()[0] == "weight,count"
    assert cli.main(["code", "--set", "T3", "--m", "5", "--format", "text"]) == 0
