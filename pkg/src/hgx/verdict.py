"""Check outcomes shared by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Verdict:
    """Outcome of one check.

    ``ok`` is None when the check cannot decide (for instance a
    nondegeneracy test on a truncated infinite-dimensional pairing).
    """

    name: str
    ok: bool | None
    witness: str | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return bool(self.ok)

    @property
    def label(self) -> str:
        if self.ok is None:
            return "indeterminate"
        return "pass" if self.ok else "fail"

    def as_dict(self) -> dict:
        return {"name": self.name, "verdict": self.label, "witness": self.witness, "details": self.details}
