from enum import Enum
from typing import Any, List, Optional

from pydantic import BaseModel, model_validator

from cobweb_lab.constants import EXIT_OK


class CommandStatus(str, Enum):
    ok = "ok"
    error = "error"


class CommandResult(BaseModel):
    status: CommandStatus = CommandStatus.ok
    payload: Any = None  # matrix, report, count or verification table
    message: Optional[str] = None  # human readable text
    exit_code: int = EXIT_OK

    @model_validator(mode="after")
    def check_error_has_message(self):
        if self.status == CommandStatus.error:
            if self.exit_code == EXIT_OK:
                raise ValueError("an error result needs a non-zero exit code")
            if not self.message:
                raise ValueError("an error result needs a message")
        return self


class VerificationCheck(BaseModel):
    name: str
    cases: int = 0  # number of compared instances
    passed: bool = True
    detail: str = ""  # first failing case, or a short summary


class VerificationReport(BaseModel):
    seed: int
    checks: List[VerificationCheck] = []

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed_checks(self) -> List[VerificationCheck]:
        return [check for check in self.checks if not check.passed]
