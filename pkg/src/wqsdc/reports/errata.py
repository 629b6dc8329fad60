"""Errata ledger and reconciliation-check results."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class ErrataEntry:
    """One place where the printed form and the adopted form part ways."""

    location: str
    printed: str
    adopted: str
    evidence: dict[str, float]
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "location": self.location,
            "printed": self.printed,
            "adopted": self.adopted,
            "evidence": dict(self.evidence),
            "note": self.note,
        }


@dataclass(frozen=True)
class CheckResult:
    """A reconciliation between two independent computations."""

    name: str
    passed: bool
    error: float
    tolerance: float
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "error": self.error,
            "tolerance": self.tolerance,
            "detail": self.detail,
        }


@dataclass
class ErrataReport:
    entries: list[ErrataEntry] = field(default_factory=list)
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def entry(self, location: str) -> ErrataEntry:
        """Look up an errata entry by its location.

        Raises:
            KeyError: If no entry has that location.
        """
        for item in self.entries:
            if item.location == location:
                return item
        raise KeyError(location)

    def check(self, name: str) -> CheckResult:
        """Look up a check result by name.

        Raises:
            KeyError: If no check has that name.
        """
        for item in self.checks:
            if item.name == name:
                return item
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "entries": [e.to_dict() for e in self.entries],
            "checks": [c.to_dict() for c in self.checks],
        }

    def render_text(self) -> str:
        lines = [
            f"Self-check: {'PASS' if self.passed else 'FAIL'} "
            f"({len(self.checks) - len(self.failures)}/{len(self.checks)} checks)",
            "",
            "Checks:",
        ]
        for check in self.checks:
            mark = "ok  " if check.passed else "FAIL"
            lines.append(
                f"  [{mark}] {check.name}: error {check.error:.3e} (tol {check.tolerance:.1e})"
            )
            if check.detail:
                lines.append(f"         {check.detail}")
        lines.append("")
        lines.append(f"Errata ({len(self.entries)} entries):")
        for entry in self.entries:
            lines.append(f"  - {entry.location}")
            lines.append(f"      printed: {entry.printed}")
            lines.append(f"      adopted: {entry.adopted}")
            for key, value in entry.evidence.items():
                lines.append(f"      {key} = {value:.12g}")
            if entry.note:
                lines.append(f"      note: {entry.note}")
        return "\n".join(lines) + "\n"
