"""RunReport: the serializable record every CLI command produces."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

from .landen_numeric import ConvergenceReport
from .verify import Check

SCHEMA_VERSION = 1


def _render(v: Any) -> Any:
    # floats go out via repr so identical runs are byte-identical
    if isinstance(v, float):
        return repr(v)
    return v


@dataclass
class RunReport:
    command: str
    inputs: dict[str, Any] = field(default_factory=dict)
    value: float | str | None = None
    trace: ConvergenceReport | None = None
    checks: list[Check] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)
    table: list[dict[str, Any]] | None = None
    timestamp: str | None = None

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "schemaVersion": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "value": self.value,
        }
        if self.details:
            out["details"] = self.details
        if self.trace is not None:
            out["trace"] = self.trace.to_dict()
        if self.table is not None:
            out["table"] = self.table
        if self.checks:
            out["checks"] = [c.to_dict() for c in self.checks]
            out["passed"] = self.all_passed
        if self.timestamp is not None:
            out["timestamp"] = self.timestamp
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        if self.table is not None:
            keys = list(self.table[0]) if self.table else ["m", "l", "d"]
            w.writerow(keys)
            for row in self.table:
                w.writerow([_render(row[k]) for k in keys])
            return buf.getvalue()
        w.writerow(["kind", "name", "value", "residual"])
        w.writerow(["meta", "schemaVersion", SCHEMA_VERSION, ""])
        w.writerow(["meta", "command", self.command, ""])
        if self.timestamp is not None:
            w.writerow(["meta", "timestamp", self.timestamp, ""])
        for k, v in self.inputs.items():
            w.writerow(["input", k, _render(v), ""])
        w.writerow(["result", "value", _render(self.value), ""])
        for k, v in self.details.items():
            if isinstance(v, list):
                for i, item in enumerate(v):
                    w.writerow(["detail", f"{k}[{i}]", _render(item), ""])
            else:
                w.writerow(["detail", k, _render(v), ""])
        if self.trace is not None:
            t = self.trace
            w.writerow(["trace", "iterations", t.iterations, ""])
            w.writerow(["trace", "converged", t.converged, ""])
            w.writerow(["trace", "estimatedOrder", _render(t.estimated_order), ""])
            for i, e in enumerate(t.error_trace):
                w.writerow(["trace", f"error[{i}]", _render(e), ""])
        for c in self.checks:
            w.writerow(["check", c.name, "pass" if c.passed else "fail", _render(c.residual)])
        return buf.getvalue()
