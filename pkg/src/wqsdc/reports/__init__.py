"""Self-check reconciliations and the errata report."""

from wqsdc.reports.errata import CheckResult, ErrataEntry, ErrataReport
from wqsdc.reports.selfcheck import build_errata, run_selfcheck

__all__ = [
    "CheckResult",
    "ErrataEntry",
    "ErrataReport",
    "build_errata",
    "run_selfcheck",
]
