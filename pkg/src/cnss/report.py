"""Assertions, reports and their text/JSON serializations."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"
STATUSES = (PASS, FAIL, NOT_APPLICABLE)

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "inputs", "result", "assertions", "certificate"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "inputs": {"type": "object"},
        "result": {},
        "assertions": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["claim", "status"],
                "additionalProperties": False,
                "properties": {
                    "claim": {"type": "string"},
                    "status": {"enum": list(STATUSES)},
                },
            },
        },
        "certificate": {"type": ["object", "null"]},
    },
}


@dataclass(frozen=True)
class Assertion:
    claim: str
    status: str

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad assertion status {self.status!r}")

    @classmethod
    def check(cls, claim: str, ok: bool) -> Assertion:
        return cls(claim, PASS if ok else FAIL)

    @classmethod
    def skipped(cls, claim: str) -> Assertion:
        return cls(claim, NOT_APPLICABLE)


@dataclass
class Report:
    command: str
    inputs: dict[str, Any] = field(default_factory=dict)
    result: Any = None
    assertions: list[Assertion] = field(default_factory=list)
    certificate: dict[str, Any] | None = None

    @property
    def failed(self) -> bool:
        return any(a.status == FAIL for a in self.assertions)

    @property
    def exit_status(self) -> int:
        return 1 if self.failed else 0

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Report:
        return cls(
            command=data["command"],
            inputs=data["inputs"],
            result=data["result"],
            assertions=[Assertion(a["claim"], a["status"]) for a in data["assertions"]],
            certificate=data["certificate"],
        )

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        for key in sorted(self.inputs):
            lines.append(f"  {key} = {_show(self.inputs[key])}")
        if isinstance(self.result, dict):
            lines.append("result:")
            for key in sorted(self.result):
                lines.append(f"  {key} = {_show(self.result[key])}")
        else:
            lines.append(f"result: {_show(self.result)}")
        if self.certificate:
            lines.append("certificate:")
            for key in sorted(self.certificate):
                lines.append(f"  {key} = {_show(self.certificate[key])}")
        for a in self.assertions:
            lines.append(f"[{a.status.upper()}] {a.claim}")
        return "\n".join(lines) + "\n"


def _show(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def emit_report(report: Report, fmt: str = "text") -> bytes:
    if fmt == "json":
        return report.to_json().encode()
    if fmt == "text":
        return report.to_text().encode()
    raise ValueError(f"unknown report format {fmt!r}")
