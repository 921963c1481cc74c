"""Check verdicts and report assembly.

A ``CheckResult`` records one verification outcome: ``pass``, ``fail``
(with a rendered witness), ``inadmissible`` (prerequisites failed, so the
statement was not judged) or ``not-guaranteed`` (computed, but hypotheses
are known to be violated).  A ``Report`` bundles results with the scenario
echo.  The machine-readable JSON payload is canonical (sorted keys, no
wall-clock data) so that identical scenario + seed give byte-identical
output; elapsed time is only shown in the text rendering.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
INADMISSIBLE = "inadmissible"
NOT_GUARANTEED = "not-guaranteed"


@dataclass
class CheckResult:
    name: str
    verdict: str
    witness: str | None = None
    cases: int = 0
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL

    def to_dict(self) -> dict:
        out = {"name": self.name, "verdict": self.verdict, "cases": self.cases}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out

    def __str__(self) -> str:
        line = f"[{self.verdict.upper():>14}] {self.name} ({self.cases} cases)"
        if self.witness:
            line += f"\n    witness: {self.witness}"
        return line


def passed(name: str, cases: int, **detail) -> CheckResult:
    return CheckResult(name, PASS, cases=cases, detail=detail)


def failed(name: str, witness: str, cases: int, **detail) -> CheckResult:
    return CheckResult(name, FAIL, witness=witness, cases=cases, detail=detail)


def inadmissible(name: str, why: str, **detail) -> CheckResult:
    return CheckResult(name, INADMISSIBLE, witness=why, detail=detail)


@dataclass
class Report:
    config: dict
    results: list[CheckResult] = field(default_factory=list)
    payloads: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def add(self, result: CheckResult) -> CheckResult:
        self.results.append(result)
        return result

    def find(self, name: str) -> CheckResult | None:
        for r in self.results:
            if r.name == name:
                return r
        return None

    @property
    def exit_code(self) -> int:
        return 1 if any(r.failed for r in self.results) else 0

    def summary(self) -> dict:
        counts: dict[str, int] = {}
        for r in self.results:
            counts[r.verdict] = counts.get(r.verdict, 0) + 1
        return {"verdicts": counts, "exit_code": self.exit_code}

    def to_dict(self) -> dict:
        return {
            "schema": "twistconn-report/1",
            "config": self.config,
            "checks": [r.to_dict() for r in self.results],
            "payloads": self.payloads,
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        # canonical: sorted keys, no timing, trailing newline
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = ["twistconn report", "================"]
        for key in sorted(self.config):
            lines.append(f"  {key}: {self.config[key]}")
        lines.append("")
        for r in self.results:
            lines.append(str(r))
        for key in sorted(self.payloads):
            lines.append("")
            lines.append(f"-- {key} --")
            payload = self.payloads[key]
            if isinstance(payload, list):
                lines.extend(str(item) for item in payload)
            else:
                lines.append(json.dumps(payload, sort_keys=True, indent=2))
        lines.append("")
        lines.append(f"summary: {self.summary()['verdicts']} "
                     f"(elapsed {self.elapsed:.2f}s)")
        return "\n".join(lines) + "\n"
