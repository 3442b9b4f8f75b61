"""
Verification reporter: renders a VerificationReport as a pass/fail table and
persists it as JSON or YAML.
"""

import os
from typing import Any, Dict, List

from cobweb_lab.models.app import VerificationReport
from cobweb_lab.models.config import VerifyConfig
from cobweb_lab.utils.fs import save_data_to_file
from cobweb_lab.utils.logger import get_logger

logger = get_logger(__name__)


class VerificationReporter:
    """
    Consolidates a verification run into one document. The document holds
    no timestamps or durations, so two runs with the same configuration
    serialize to identical bytes.
    """

    def __init__(self, report: VerificationReport, config: VerifyConfig):
        self.report = report
        self.config = config

    def generate_summary(self) -> Dict[str, Any]:
        checks: List[Dict[str, Any]] = [
            {
                "name": check.name,
                "cases": check.cases,
                "passed": check.passed,
                "detail": check.detail,
            }
            for check in self.report.checks
        ]
        return {
            "seed": self.report.seed,
            "status": "passed" if self.report.passed else "failed",
            "config": self.config.model_dump(mode="json"),
            "summary": {
                "checks": len(checks),
                "failed": len(self.report.failed_checks),
                "cases": sum(check.cases for check in self.report.checks),
            },
            "checks": checks,
        }

    def render_table(self) -> str:
        checks = self.report.checks
        width = max([len("check")] + [len(check.name) for check in checks])
        lines = [f"{'check':<{width}}  {'result':<6}  {'cases':>8}  detail"]
        lines.append("-" * len(lines[0]))
        for check in checks:
            result = "PASS" if check.passed else "FAIL"
            lines.append(f"{check.name:<{width}}  {result:<6}  {check.cases:>8}  {check.detail}")
        failed = len(self.report.failed_checks)
        lines.append("")
        lines.append(
            f"{len(checks) - failed}/{len(checks)} checks passed (seed {self.report.seed})"
        )
        return "\n".join(lines) + "\n"

    def save(self, file_path: str):
        """
        Save the summary; the format follows the file extension (.json, .yaml).
        """
        directory = os.path.dirname(file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        save_data_to_file(self.generate_summary(), file_path)
        logger.info("Verification report saved to %s", file_path)
