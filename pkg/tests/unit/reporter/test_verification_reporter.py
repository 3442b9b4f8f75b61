"""
Unit tests for VerificationReporter
"""

import json
import os

from cobweb_lab.models.app import VerificationCheck, VerificationReport
from cobweb_lab.models.config import VerifyConfig
from cobweb_lab.reporter import VerificationReporter


def _report(*checks: VerificationCheck) -> VerificationReport:
    return VerificationReport(seed=3, checks=list(checks))


class TestVerificationReporter:
    def test_summary_counts(self):
        report = _report(
            VerificationCheck(name="a", cases=4, detail="T_n = 1, 3"),
            VerificationCheck(name="b", cases=2, passed=False, detail="first failure: n=2"),
        )
        summary = VerificationReporter(report, VerifyConfig(seed=3)).generate_summary()
        assert summary["seed"] == 3
        assert summary["status"] == "failed"
        assert summary["summary"] == {"checks": 2, "failed": 1, "cases": 6}
        assert summary["checks"][1] == {
            "name": "b",
            "cases": 2,
            "passed": False,
            "detail": "first failure: n=2",
        }
        assert summary["config"]["seed"] == 3

    def test_all_passing(self):
        report = _report(VerificationCheck(name="a", cases=1))
        summary = VerificationReporter(report, VerifyConfig()).generate_summary()
        assert summary["status"] == "passed"

    def test_render_table(self):
        report = _report(
            VerificationCheck(name="fubini", cases=7, detail="ok"),
            VerificationCheck(name="surjections", cases=0, passed=False, detail="bad"),
        )
        table = VerificationReporter(report, VerifyConfig()).render_table()
        lines = table.splitlines()
        assert lines[0].split() == ["check", "result", "cases", "detail"]
        assert lines[2].split() == ["fubini", "PASS", "7", "ok"]
        assert lines[3].split() == ["surjections", "FAIL", "0", "bad"]
        assert lines[-1] == "1/2 checks passed (seed 3)"

    def test_save_creates_directory(self, temp_output_dir):
        report = _report(VerificationCheck(name="a", cases=1))
        path = os.path.join(temp_output_dir, "reports", "verify.json")
        VerificationReporter(report, VerifyConfig()).save(path)
        with open(path, encoding="utf-8") as f:
            assert json.load(f)["summary"]["cases"] == 1

    def test_same_report_same_bytes(self, temp_output_dir):
        report = _report(VerificationCheck(name="a", cases=1, detail="x"))
        first = os.path.join(temp_output_dir, "first.yaml")
        second = os.path.join(temp_output_dir, "second.yaml")
        VerificationReporter(report, VerifyConfig()).save(first)
        VerificationReporter(report, VerifyConfig()).save(second)
        with open(first, "rb") as a, open(second, "rb") as b:
            assert a.read() == b.read()
