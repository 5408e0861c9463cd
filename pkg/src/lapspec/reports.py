"""Verification report record shared by the library suites and the CLI.

Reports are plain data: every field survives a JSON round trip unchanged,
and two runs of the same suite produce identical reports except for
``wall_time_s``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

SCHEMA_VERSION = 1

_FIELDS = (
    "schema_version",
    "suite",
    "scope",
    "parameters",
    "passed",
    "counts",
    "counterexamples",
    "details",
    "wall_time_s",
)


@dataclass
class VerificationReport:
    suite: str
    scope: str
    parameters: dict
    passed: bool
    counts: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    wall_time_s: float = 0.0
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in _FIELDS}

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        missing = [name for name in _FIELDS if name not in data]
        if missing:
            raise ValueError(f"report dict missing fields: {missing}")
        if data["schema_version"] != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {data['schema_version']}")
        return cls(**{name: data[name] for name in _FIELDS if name != "schema_version"},
                   schema_version=data["schema_version"])

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))

    def without_timing(self) -> "VerificationReport":
        """Copy with the timing zeroed, for determinism comparisons."""
        return replace(self, wall_time_s=0.0)

    def summary_line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        counts = " ".join(f"{k}={v}" for k, v in sorted(self.counts.items()))
        tail = f" [{counts}]" if counts else ""
        return f"{verdict} {self.suite}: {self.scope}{tail}"
