"""Verification reports shared by every checker."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


def jsonable(value: Any) -> Any:
    """Convert domain values (arrows, functions, tuples) to plain JSON data."""
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((jsonable(v) for v in value), key=repr)
    return value


@dataclass
class Report:
    """Outcome of a bounded-exhaustive check.

    An empty ``violations`` list means the check passed. ``params`` records the
    truncation, bounds and budgets the verdict is relative to.
    """

    name: str
    params: dict = field(default_factory=dict)
    checks: int = 0
    violations: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    max_violations: int = 50

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def fail(self, kind: str, **witness: Any) -> None:
        if len(self.violations) < self.max_violations:
            self.violations.append({"kind": kind, **witness})
        else:
            self.details["truncated_violations"] = self.details.get("truncated_violations", 0) + 1

    def tick(self, n: int = 1) -> None:
        self.checks += n

    def merge(self, other: "Report", prefix: str | None = None) -> None:
        self.checks += other.checks
        tag = prefix or other.name
        for v in other.violations:
            self.fail(v["kind"], **{k: w for k, w in v.items() if k != "kind"}, source=tag)
        self.details.setdefault("subreports", {})[tag] = {
            "ok": other.ok,
            "checks": other.checks,
            **({"details": other.details} if other.details else {}),
        }

    def to_dict(self) -> dict:
        return jsonable({
            "name": self.name,
            "ok": self.ok,
            "params": self.params,
            "checks": self.checks,
            "violations": self.violations,
            "details": self.details,
        })

    def to_json(self) -> dict:
        return self.to_dict()

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        lines = [f"{self.name}: {status} ({self.checks} checks)"]
        if self.params:
            lines.append("  params: " + ", ".join(f"{k}={jsonable(v)}" for k, v in sorted(self.params.items())))
        for key, val in sorted(self.details.items()):
            if key == "subreports":
                for tag, sub in sorted(val.items()):
                    lines.append(f"  [{'ok' if sub['ok'] else 'FAIL'}] {tag} ({sub['checks']} checks)")
            else:
                lines.append(f"  {key}: {json.dumps(jsonable(val), sort_keys=True)}")
        for v in self.violations:
            lines.append("  violation: " + json.dumps(jsonable(v), sort_keys=True))
        return "\n".join(lines)
