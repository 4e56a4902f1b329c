from __future__ import annotations

import json
from dataclasses import dataclass, field

MAX_COUNTEREXAMPLES = 20


@dataclass
class Report:
    """Outcome of an exhaustive verification run."""

    identity: str
    bounds: dict
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    failures: int = 0

    @property
    def ok(self) -> bool:
        return self.failures == 0

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def tick(self, n: int = 1) -> None:
        self.checked += n

    def fail(self, **details) -> None:
        self.failures += 1
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append({k: _jsonable(v) for k, v in details.items()})

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "bounds": self.bounds,
            "status": self.status,
            "checked": self.checked,
            "failures": self.failures,
            "counterexamples": self.counterexamples,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _jsonable(value):
    if isinstance(value, (int, float, str, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return str(value)
