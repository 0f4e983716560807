"""Structured pass/fail records for exhaustive relation sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact import ExactMatrix

DETAIL_LIMIT = 10


@dataclass(frozen=True)
class Violation:
    indices: tuple
    nnz: int
    difference: ExactMatrix | None = None

    def to_json(self) -> dict:
        out = {"indices": [list(x) if isinstance(x, tuple) else x for x in self.indices], "nnz": self.nnz}
        if self.difference is not None:
            out["difference"] = self.difference.to_json()
        return out


@dataclass
class VerificationReport:
    """Outcome of one sweep.

    ``violations`` is sorted by indices.  Only the first ``detail_limit``
    violations keep their full left-minus-right difference matrix.
    """

    check: str
    sig: str
    rep: str
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    detail_limit: int = DETAIL_LIMIT

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, indices: tuple, difference: ExactMatrix) -> None:
        self.violations.append(Violation(indices, difference.nnz, difference))

    def finalize(self) -> "VerificationReport":
        self.violations.sort(key=lambda v: v.indices)
        self.violations = [
            v if k < self.detail_limit else Violation(v.indices, v.nnz)
            for k, v in enumerate(self.violations)
        ]
        return self

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "sig": self.sig,
            "rep": self.rep,
            "checked": self.checked,
            "violation_count": len(self.violations),
            "violations": [v.to_json() for v in self.violations],
            "pass": self.passed,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.violations)} violations)"
        return f"{self.check} sig={self.sig} rep={self.rep} checked={self.checked}: {status}"
