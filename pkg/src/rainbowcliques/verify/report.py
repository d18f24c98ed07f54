"""Verification reports and their text / JSON serialisations."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from ..core import EdgeColoredGraph, SimpleDigraph, StandardMultigraph

SCHEMA = "rf-report/1"
VERDICTS = ("confirmed", "refuted", "exhausted-budget")


def serialize_instance(obj, **extra) -> dict:
    """Plain-dict form of a host object, with sorted edge lists."""
    if isinstance(obj, EdgeColoredGraph):
        out = {"type": "ecg", "n": obj.n, "edges": [[u, v, c] for (u, v), c in sorted(obj.color.items())]}
    elif isinstance(obj, StandardMultigraph):
        out = {"type": "mg", "n": obj.n, "edges": [[u, v, k] for (u, v), k in sorted(obj.mult.items())]}
    elif isinstance(obj, SimpleDigraph):
        out = {"type": "dg", "n": obj.n, "arcs": [list(a) for a in sorted(obj.arcs)]}
    else:
        raise TypeError(f"cannot serialise {type(obj).__name__}")
    out.update(extra)
    return out


def deserialize_instance(d: dict):
    if d["type"] == "ecg":
        return EdgeColoredGraph(d["n"], {(u, v): c for u, v, c in d["edges"]})
    if d["type"] == "mg":
        return StandardMultigraph(d["n"], {(u, v): k for u, v, k in d["edges"]})
    if d["type"] == "dg":
        return SimpleDigraph(d["n"], [tuple(a) for a in d["arcs"]])
    raise ValueError(f"unknown instance type {d['type']!r}")


@dataclass
class VerificationReport:
    campaign: str
    params: dict = field(default_factory=dict)
    instances_examined: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    extremal_witnesses: list[dict] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    elapsed: float = 0.0
    verdict: str = "confirmed"

    def finalize(self, budget_hit: bool = False) -> VerificationReport:
        if self.counterexamples:
            self.verdict = "refuted"
        elif budget_hit:
            self.verdict = "exhausted-budget"
        else:
            self.verdict = "confirmed"
        return self

    def content(self) -> dict:
        """Everything except timing; equal for equal parameters."""
        d = asdict(self)
        d.pop("elapsed")
        return d

    def to_json(self) -> str:
        return json.dumps({"schema": SCHEMA, **asdict(self)}, sort_keys=True, indent=1)

    @classmethod
    def from_json(cls, text: str) -> VerificationReport:
        d = json.loads(text)
        if d.pop("schema", None) != SCHEMA:
            raise ValueError(f"not an {SCHEMA} document")
        return cls(**d)

    def summary(self) -> str:
        """One line of ``key=value`` pairs."""
        parts = [
            f"campaign={self.campaign}",
            *(f"{k}={v}" for k, v in sorted(self.params.items())),
            f"verdict={self.verdict}",
            f"instances={self.instances_examined}",
            f"counterexamples={len(self.counterexamples)}",
            f"witnesses={len(self.extremal_witnesses)}",
        ]
        for k, v in sorted(self.stats.items()):
            if isinstance(v, dict):
                parts.extend(f"{k}.{kk}={vv}" for kk, vv in sorted(v.items()))
            else:
                parts.append(f"{k}={v}")
        parts.append(f"elapsed={self.elapsed:.3f}")
        return " ".join(parts)

    def to_text(self) -> str:
        lines = [self.summary()]
        for cx in self.counterexamples:
            lines.append("counterexample " + json.dumps(cx, sort_keys=True))
        for w in self.extremal_witnesses:
            lines.append("witness " + json.dumps(w, sort_keys=True))
        return "\n".join(lines) + "\n"
