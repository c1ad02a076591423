from pydantic import BaseModel, Field


class CheckRecord(BaseModel):
    """单项校验结果，失败时 expected / got 原样保留"""
    identifier: str
    passed: bool
    expected: str = ""
    got: str = ""
    exact: bool = True
    tolerance: float | None = None


class VerificationReport(BaseModel):
    """校验套件报告"""
    suite: str
    q: int
    passed: bool = True
    checks: list[CheckRecord] = Field(default_factory=list)
    elapsed_seconds: float = 0.0

    def record(self, check: CheckRecord) -> None:
        self.checks.append(check)
        if not check.passed:
            self.passed = False

    @property
    def failures(self) -> list[CheckRecord]:
        return [c for c in self.checks if not c.passed]
