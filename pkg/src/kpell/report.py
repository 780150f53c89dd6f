"""Verification reports and their JSON Lines encoding."""

from __future__ import annotations

import enum
import json
from dataclasses import asdict, dataclass, field


class Mode(str, enum.Enum):
    EXACT = "exact"
    NUMERIC = "numeric"


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED_OVERFLOW = "skipped-overflow"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one identity or integral representation.

    ``lhs`` and ``rhs`` are decimal strings: integers may be far larger than
    any JSON number consumer accepts.  ``parts`` maps sub-identity labels
    (e.g. ``"i"``, ``"ii"``) to their own status when a check has several.
    """

    id: str
    params: dict
    mode: Mode
    lhs: str
    rhs: str
    status: Status
    detail: str = ""
    parts: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "status", Status(self.status))
        if self.mode is Mode.EXACT and self.status is Status.SKIPPED_OVERFLOW:
            raise ValueError("exact-mode reports cannot be skipped")

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def to_dict(self) -> dict:
        out = asdict(self)
        out["mode"] = self.mode.value
        out["status"] = self.status.value
        if not self.parts:
            del out["parts"]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: dict) -> VerificationReport:
        return cls(
            id=data["id"],
            params=dict(data["params"]),
            mode=Mode(data["mode"]),
            lhs=data["lhs"],
            rhs=data["rhs"],
            status=Status(data["status"]),
            detail=data.get("detail", ""),
            parts=dict(data.get("parts", {})),
        )

    @classmethod
    def from_json(cls, line: str) -> VerificationReport:
        return cls.from_dict(json.loads(line))


def summarize(reports) -> dict[str, int]:
    counts = {s.value: 0 for s in Status}
    for r in reports:
        counts[r.status.value] += 1
    return counts
