"""Check results: named residuals with exact verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator

import numpy as np

from .frame import Tensor, is_zero

PASS, FAIL, SKIPPED, INFO = "pass", "fail", "skipped", "info"


def fmt(x: Fraction) -> str:
    return str(Fraction(x))


def residual_summary(residual) -> str | None:
    """Largest absolute entry as an exact rational string; None without a residual."""
    if residual is None:
        return None
    arr = residual.components if isinstance(residual, Tensor) else np.asarray(residual, dtype=object)
    entries = [abs(Fraction(x)) for x in arr.flat]
    return fmt(max(entries, default=Fraction(0)))


@dataclass
class CheckEntry:
    check_id: str
    label: str
    status: str
    residual: Any = None
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "paper_ref_label": self.label,
            "status": self.status,
            "residual_summary": residual_summary(self.residual),
            "details": self.details,
        }


@dataclass
class CheckReport:
    """Ordered collection of check entries.

    The report passes when every entry that is neither skipped nor
    informational passes.
    """

    entries: list[CheckEntry] = field(default_factory=list)

    def residual(self, check_id: str, label: str, residual, **details) -> CheckEntry:
        arr = residual.components if isinstance(residual, Tensor) else residual
        status = PASS if is_zero(arr) else FAIL
        return self.add(CheckEntry(check_id, label, status, residual, details))

    def verdict(self, check_id: str, label: str, ok: bool, **details) -> CheckEntry:
        return self.add(CheckEntry(check_id, label, PASS if ok else FAIL, None, details))

    def info(self, check_id: str, label: str, **details) -> CheckEntry:
        return self.add(CheckEntry(check_id, label, INFO, None, details))

    def skipped(self, check_id: str, label: str, reason: str) -> CheckEntry:
        return self.add(CheckEntry(check_id, label, SKIPPED, None, {"reason": reason}))

    def add(self, entry: CheckEntry) -> CheckEntry:
        self.entries.append(entry)
        return entry

    def extend(self, other: "CheckReport") -> "CheckReport":
        self.entries.extend(other.entries)
        return self

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries if e.status not in (SKIPPED, INFO))

    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if e.status == FAIL]

    def __getitem__(self, check_id: str) -> CheckEntry:
        for e in self.entries:
            if e.check_id == check_id:
                return e
        raise KeyError(check_id)

    def __contains__(self, check_id: str) -> bool:
        return any(e.check_id == check_id for e in self.entries)

    def __iter__(self) -> Iterator[CheckEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)
