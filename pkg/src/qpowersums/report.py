"""Verification records and the deterministic report format."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from . import __version__
from .errors import VersionMismatch

FORMAT_VERSION = 1
VERDICTS = ("pass", "fail", "singular", "skipped", "error")


def _param_key(value: str):
    try:
        return (0, Fraction(value), "")
    except (ValueError, ZeroDivisionError):
        return (1, Fraction(0), value)


@dataclass(frozen=True)
class CheckRecord:
    suite: str
    params: Tuple[Tuple[str, str], ...]
    lhs: str
    rhs: str
    verdict: str
    residual: str

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @classmethod
    def make(cls, suite: str, params: Dict[str, object], lhs: str, rhs: str,
             verdict: str, residual: str) -> "CheckRecord":
        return cls(suite, tuple((k, str(v)) for k, v in params.items()), lhs, rhs, verdict, residual)

    @property
    def sort_key(self):
        return (self.suite, tuple((k, _param_key(v)) for k, v in self.params))

    def param(self, name: str) -> Optional[str]:
        return dict(self.params).get(name)

    def to_dict(self) -> dict:
        return {
            "params": {k: v for k, v in self.params},
            "lhs": self.lhs,
            "rhs": self.rhs,
            "verdict": self.verdict,
            "residual": self.residual,
        }


@dataclass
class Suite:
    name: str
    records: List[CheckRecord]
    tolerance: Optional[str] = None

    def to_dict(self) -> dict:
        out: dict = {"name": self.name}
        if self.tolerance is not None:
            out["tolerance"] = self.tolerance
        out["records"] = [r.to_dict() for r in sorted(self.records, key=lambda r: r.sort_key)]
        return out


@dataclass
class Report:
    suites: List[Suite] = field(default_factory=list)
    format_version: int = FORMAT_VERSION
    tool_version: str = __version__

    def to_dict(self) -> dict:
        return {
            "format_version": self.format_version,
            "tool_version": self.tool_version,
            "suites": [s.to_dict() for s in self.suites],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_markdown(self) -> str:
        lines = [f"# Verification report (format {self.format_version}, tool {self.tool_version})", ""]
        for s in self.suites:
            title = f"## {s.name}"
            if s.tolerance is not None:
                title += f" (tolerance {s.tolerance})"
            lines += [title, ""]
            if not s.records:
                lines += ["_no records_", ""]
                continue
            lines.append("| params | verdict | residual |")
            lines.append("|---|---|---|")
            for r in sorted(s.records, key=lambda r: r.sort_key):
                p = ", ".join(f"{k}={v}" for k, v in r.params)
                resid = r.residual.replace("|", "\\|")
                lines.append(f"| {p} | {r.verdict} | `{resid}` |")
            lines.append("")
        return "\n".join(lines)

    def records(self) -> List[CheckRecord]:
        return [r for s in self.suites for r in s.records]

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        suites = []
        for s in data["suites"]:
            recs = [
                CheckRecord(
                    s["name"],
                    tuple((k, v) for k, v in r["params"].items()),
                    r["lhs"], r["rhs"], r["verdict"], r["residual"],
                )
                for r in s["records"]
            ]
            suites.append(Suite(s["name"], recs, s.get("tolerance")))
        return cls(suites, data["format_version"], data["tool_version"])

    @classmethod
    def from_records(cls, records: Iterable[CheckRecord]) -> "Report":
        """Group records into suites, ordered by first appearance."""
        groups: Dict[str, List[CheckRecord]] = {}
        for r in records:
            groups.setdefault(r.suite, []).append(r)
        return cls([Suite(name, recs) for name, recs in groups.items()])

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def __eq__(self, other) -> bool:
        return isinstance(other, Report) and self.to_dict() == other.to_dict()


def compare_golden(current: Report, golden: Report) -> Tuple[List[str], int]:
    """Field-by-field diff; status 0 iff verdicts and residuals all agree."""
    if current.format_version != golden.format_version:
        raise VersionMismatch(
            f"format_version {current.format_version} vs golden {golden.format_version}"
        )
    diff: List[str] = []
    cur = {s.name: s for s in current.suites}
    gold = {s.name: s for s in golden.suites}
    for name in cur:
        if name not in gold:
            diff.append(f"added suite {name}")
    for name in gold:
        if name not in cur:
            diff.append(f"removed suite {name}")
    for name in cur:
        if name not in gold:
            continue
        a = {r.params: r for r in cur[name].records}
        b = {r.params: r for r in gold[name].records}
        for key in sorted(set(a) | set(b), key=lambda p: tuple((k, _param_key(v)) for k, v in p)):
            label = f"{name}[" + ", ".join(f"{k}={v}" for k, v in key) + "]"
            if key not in b:
                diff.append(f"added record {label}")
            elif key not in a:
                diff.append(f"removed record {label}")
            else:
                ra, rb = a[key], b[key]
                if ra.verdict != rb.verdict:
                    diff.append(f"verdict {label}: {rb.verdict} -> {ra.verdict}")
                if ra.residual != rb.residual:
                    diff.append(f"residual {label}: {rb.residual} -> {ra.residual}")
    return diff, (0 if not diff else 1)
