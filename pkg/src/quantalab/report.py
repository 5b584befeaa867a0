"""Verification reports: per-check pass/fail records with counterexamples.

A report is the uniform output of every verification suite.  Reports are
deterministic: identical (suite, params, seed) inputs produce byte-identical
JSON, so counterexamples are replayable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
VACUOUS = "vacuous"
HYPOTHESIS_UNMET = "hypothesis-unmet"
OBSERVATION = "observation"


@dataclass
class Check:
    name: str
    status: str
    cases: int = 0
    counterexample: dict | None = None
    note: str = ""

    def to_dict(self) -> dict:
        d: dict = {"name": self.name, "status": self.status, "cases": self.cases}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        if self.note:
            d["note"] = self.note
        return d


def passed(name: str, cases: int) -> Check:
    return Check(name, PASS, cases)


def failed(name: str, cases: int, witness: dict) -> Check:
    # a failing check always carries its witness
    return Check(name, FAIL, cases, counterexample=witness)


def vacuous(name: str, note: str = "") -> Check:
    return Check(name, VACUOUS, 0, note=note)


def unmet(name: str, note: str = "") -> Check:
    return Check(name, HYPOTHESIS_UNMET, 0, note=note)


def observed(name: str, cases: int, note: str) -> Check:
    return Check(name, OBSERVATION, cases, note=note)


@dataclass
class VerificationReport:
    suite: str
    quantale: str
    params: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> str:
        return FAIL if any(c.status == FAIL for c in self.checks) else PASS

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, checks) -> None:
        self.checks.extend(checks)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "quantale": self.quantale,
            "params": self.params,
            "checks": [c.to_dict() for c in self.checks],
            "overall": self.overall,
        }

    def to_json(self) -> str:
        # canonical form: sorted keys, fixed separators, trailing newline
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":")) + "\n"

    def summary_lines(self):
        for c in self.checks:
            line = f"[{c.status}] {c.name} ({c.cases} cases)"
            if c.note:
                line += f" -- {c.note}"
            if c.counterexample is not None:
                line += f" witness={c.counterexample}"
            yield line
        yield f"overall: {self.overall}"
