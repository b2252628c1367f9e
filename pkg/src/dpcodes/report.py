"""Pass/fail certificates produced by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    ref: str
    expected: object
    measured: object
    passed: bool

    def render(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"CHECK {self.name} {self.ref} expected={_fmt(self.expected)} "
            f"measured={_fmt(self.measured)} {verdict}"
        )


def _fmt(value) -> str:
    # keep one CHECK per line and one token per field
    return str(value).replace(" ", "")


@dataclass
class VerificationReport:
    """Append-only list of checks; ``overall`` is the conjunction."""

    subject: str = ""
    checks: list[Check] = field(default_factory=list)

    def add(self, name, ref, expected, measured, passed=None) -> Check:
        if passed is None:
            passed = expected == measured
        check = Check(name, ref, expected, measured, bool(passed))
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ref, c.expected, c.measured, c.passed))

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.overall

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def render(self) -> str:
        lines = [c.render() for c in self.checks]
        lines.append(f"OVERALL {'PASS' if self.overall else 'FAIL'}")
        return "\n".join(lines) + "\n"
