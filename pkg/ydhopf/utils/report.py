"""
Check results and verification reports.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple


@dataclass
class CheckResult:
    """Outcome of a single law or identity check."""

    name: str
    ok: bool
    witness: Optional[Tuple[Any, ...]] = None
    checked: int = 0
    total: int = 0
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    @property
    def coverage(self) -> float:
        """Fraction of the tuple space actually examined."""
        if self.total == 0:
            return 1.0
        return self.checked / self.total

    @property
    def exhaustive(self) -> bool:
        return self.checked >= self.total

    @classmethod
    def passed(cls, name: str, checked: int = 0, total: Optional[int] = None, detail: str = "") -> "CheckResult":
        return cls(name=name, ok=True, checked=checked, total=checked if total is None else total, detail=detail)

    @classmethod
    def failed(cls, name: str, witness: Tuple[Any, ...], checked: int = 0, total: int = 0, detail: str = "") -> "CheckResult":
        return cls(name=name, ok=False, witness=witness, checked=checked, total=total, detail=detail)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "ok": self.ok,
            "witness": None if self.witness is None else [str(w) for w in self.witness],
            "checked": self.checked,
            "total": self.total,
            "coverage": round(self.coverage, 6),
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    """A named collection of check results plus free-form facts."""

    subject: str
    checks: List[CheckResult] = field(default_factory=list)
    facts: Dict[str, Any] = field(default_factory=dict)

    def add(self, result: CheckResult) -> CheckResult:
        self.checks.append(result)
        return result

    def extend(self, results: Iterable[CheckResult]) -> None:
        for result in results:
            self.add(result)

    def merge(self, other: "VerificationReport", prefix: str = "") -> None:
        for result in other.checks:
            if prefix:
                result = CheckResult(
                    name=f"{prefix}{result.name}",
                    ok=result.ok,
                    witness=result.witness,
                    checked=result.checked,
                    total=result.total,
                    detail=result.detail,
                )
            self.add(result)
        for key, value in other.facts.items():
            self.facts[f"{prefix}{key}"] = value

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.ok]

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [check.to_dict() for check in self.checks],
            "facts": {key: _plain(value) for key, value in self.facts.items()},
        }


def _plain(value: Any) -> Any:
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value, key=str) if isinstance(value, (set, frozenset)) else value
        return [_plain(v) for v in items]
    return str(value)
