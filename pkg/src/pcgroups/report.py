"""Structured check results shared by the consistency, property, and
verification modules, plus their JSON serialization."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
EXPECTED_FAIL = "expected_fail"
SKIPPED = "skipped"


@dataclass
class CheckReport:
    """Outcome of one named check.

    witnesses are flat integer lists (exponent vectors, possibly with a
    small header identifying the failing instance); notes are
    human-readable elaborations and are not serialized.
    """

    name: str
    params: dict = field(default_factory=dict)
    status: str = PASS
    witnesses: list = field(default_factory=list)
    tested: int = 0
    ms: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status in (PASS, EXPECTED_FAIL, SKIPPED)

    def add_witness(self, *parts):
        flat = []
        for part in parts:
            try:
                flat.extend(int(v) for v in part)
            except TypeError:
                flat.append(int(part))
        self.witnesses.append(flat)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": {k: self.params[k] for k in sorted(self.params)},
            "status": self.status,
            "witnesses": [[int(v) for v in w] for w in self.witnesses],
            "tested": int(self.tested),
            "ms": int(round(self.ms)),
        }


def bundle(group_name: str, p: int, order_log_p: int, checks: list) -> dict:
    """The stable top-level JSON document for a verification run."""
    return {
        "group": group_name,
        "p": int(p),
        "order_log_p": int(order_log_p),
        "checks": [c.to_dict() for c in checks],
    }
