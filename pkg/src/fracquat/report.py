"""Report rows and serialization (JSON and flat CSV).

Two row shapes exist:

* suite rows (`verify`): suite, anchor, residual, tolerance, pass
* equation rows (`residual`): system, equation, residual, tolerance, pass

Reports are deterministic: rows are emitted sorted, floats use repr, and
the timestamp can be suppressed for byte-stable output.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from datetime import datetime, timezone


@dataclass(frozen=True)
class SuiteRow:
    """One verified identity: anchor names the claim being checked."""

    suite: str
    anchor: str
    residual: float
    tolerance: float
    passed: bool


@dataclass(frozen=True)
class EquationRow:
    equation: str
    residual: float
    tolerance: float
    passed: bool


@dataclass(frozen=True)
class ResidualReport:
    """Per-equation relative residuals of one system evaluation."""

    system: str
    rows: tuple
    tolerance: float
    passed: bool
    metadata: dict

    def to_dict(self, timestamp: bool = True) -> dict:
        out = {
            "system": self.system,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "metadata": self.metadata,
            "rows": [
                {
                    "equation": r.equation,
                    "residual": r.residual,
                    "tolerance": r.tolerance,
                    "pass": r.passed,
                }
                for r in self.rows
            ],
        }
        if timestamp:
            out["generated_at"] = _now()
        return out

    def to_json(self, timestamp: bool = True) -> str:
        return json.dumps(self.to_dict(timestamp), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["system", "equation", "residual", "tolerance", "pass"])
        for r in self.rows:
            writer.writerow([self.system, r.equation, repr(r.residual), repr(r.tolerance), r.passed])
        return buf.getvalue()


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def suite_report_dict(rows: list[SuiteRow], config_meta: dict, timestamp: bool = True) -> dict:
    ordered = sorted(rows, key=lambda r: (r.suite, r.anchor))
    out = {
        "config": config_meta,
        "pass": all(r.passed for r in ordered),
        "rows": [
            {
                "suite": r.suite,
                "anchor": r.anchor,
                "residual": r.residual,
                "tolerance": r.tolerance,
                "pass": r.passed,
            }
            for r in ordered
        ],
    }
    if timestamp:
        out["generated_at"] = _now()
    return out


def suite_report_json(rows: list[SuiteRow], config_meta: dict, timestamp: bool = True) -> str:
    return json.dumps(suite_report_dict(rows, config_meta, timestamp), indent=2, sort_keys=True) + "\n"


def suite_report_csv(rows: list[SuiteRow]) -> str:
    ordered = sorted(rows, key=lambda r: (r.suite, r.anchor))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["suite", "anchor", "residual", "tolerance", "pass"])
    for r in ordered:
        writer.writerow([r.suite, r.anchor, repr(r.residual), repr(r.tolerance), r.passed])
    return buf.getvalue()
