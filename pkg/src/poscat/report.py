"""Verdict reports shared by the checkers and the CLI."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field


@dataclass
class Entry:
    name: str
    passed: bool
    witness: object = None
    law: str = ""

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "witness": self.witness, "law": self.law}


@dataclass
class Report:
    """Outcome of one checker run.

    ``verdict`` is the conjunction of all entries unless set explicitly.
    Failing entries carry a witness made of ids and names only, so a report
    can be replayed against the category it came from.
    """

    command: str
    entries: list = field(default_factory=list)
    timing: float = 0.0
    verdict: bool | None = None
    _started: float = field(default_factory=time.perf_counter, repr=False)

    def add(self, name, passed, witness=None, law=""):
        self.entries.append(Entry(name, bool(passed), witness, law))
        return bool(passed)

    def extend(self, other, prefix=""):
        for e in other.entries:
            self.entries.append(Entry(prefix + e.name, e.passed, e.witness, e.law))

    def finish(self, verdict=None):
        self.timing = time.perf_counter() - self._started
        self.verdict = all(e.passed for e in self.entries) if verdict is None else bool(verdict)
        return self

    @property
    def failures(self):
        return [e for e in self.entries if not e.passed]

    def __bool__(self):
        if self.verdict is None:
            return all(e.passed for e in self.entries)
        return self.verdict

    def to_dict(self):
        return {
            "command": self.command,
            "verdict": bool(self),
            "entries": [e.to_dict() for e in self.entries],
            "timing": round(self.timing, 6),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2, default=_jsonable)

    def to_text(self, failures_only=False):
        lines = [f"{self.command}: {'PASS' if self else 'FAIL'} ({self.timing:.3f}s)"]
        for e in self.entries:
            if failures_only and e.passed:
                continue
            mark = "ok  " if e.passed else "FAIL"
            line = f"  [{mark}] {e.name}"
            if not e.passed and e.witness is not None:
                line += f"  witness={json.dumps(e.witness, ensure_ascii=False, default=_jsonable)}"
            lines.append(line)
        return "\n".join(lines)


def _jsonable(obj):
    if isinstance(obj, (set, frozenset, tuple)):
        return list(obj)
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    return repr(obj)
