"""Machine-readable run reports."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Any

DEFAULT_SEED = 20240611
SCHEMA_VERSION = 1


@dataclass
class CheckResult:
    name: str
    passed: bool
    summary: str = ""
    details: dict[str, Any] = field(default_factory=dict)
    # optional {"x", "y", "bound", "xlabel", "ylabel"} for figures
    series: dict[str, Any] | None = None

    def to_json(self):
        out = {"name": self.name, "passed": self.passed, "summary": self.summary, "details": self.details}
        if self.series is not None:
            out["series"] = self.series
        return out

    @classmethod
    def from_json(cls, data) -> "CheckResult":
        return cls(data["name"], data["passed"], data.get("summary", ""), data.get("details", {}), data.get("series"))


@dataclass
class Report:
    command: list[str]
    parameters: dict[str, Any]
    seed: int | None
    results: list[CheckResult] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self):
        return {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "parameters": self.parameters,
            "seed": self.seed,
            "passed": self.passed,
            "results": [r.to_json() for r in self.results],
            "duration_seconds": round(self.duration, 3),
        }

    def dump(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=2, sort_keys=True)
            fh.write("\n")

    def lines(self) -> list[str]:
        """Tab-separated ``name, PASS/FAIL, summary`` lines."""
        return [f"{r.name}\t{'PASS' if r.passed else 'FAIL'}\t{r.summary}" for r in self.results]


def results_fingerprint(report_json: dict) -> str:
    """Canonical JSON of everything except timing, for replay comparison."""
    stripped = {k: v for k, v in report_json.items() if k != "duration_seconds"}
    return json.dumps(stripped, sort_keys=True)


def max_workers() -> int:
    raw = os.environ.get("CHAINCOND_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1
