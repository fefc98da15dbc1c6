"""Report documents: one JSON-compatible tree per run, rendered as text on demand."""

from __future__ import annotations

import json
from importlib import resources
from typing import Any

from .groebner import PrimeIdeal
from .monomial import MonomialIdeal
from .poly import format_monomial, format_polynomial
from .sumdecomp import SumComponent


def ideal_generators(I) -> list[str]:
    """Canonical generator strings: minimal monomials, or the reduced Groebner basis."""
    if isinstance(I, MonomialIdeal):
        if I.is_unit():
            return ["1"]
        return [format_monomial(I.ring, g) for g in sorted(I.gens, key=I.ring.key, reverse=True)]
    return [format_polynomial(g) for g in I.groebner_basis()]


def prime_text(P: PrimeIdeal) -> str:
    if P.is_variable_generated:
        return str(P.ideal)
    return "(" + ", ".join(format_polynomial(g) for g in P.ideal.groebner_basis()) + ")"


def component_entry(c: SumComponent) -> dict:
    return {
        "n": c.n, "k": c.k, "l": c.l, "label": c.label,
        "generators": ideal_generators(c.ideal),
        "target_prime": prime_text(c.target_prime),
        "unit": c.unit, "redundant": c.redundant, "primary_verified": c.primary_verified,
    }


def check(name: str, passed: bool, detail: str = "") -> dict:
    out = {"name": name, "passed": bool(passed)}
    if detail:
        out["detail"] = detail
    return out


def new_report(command: str, task: dict, regime: str | None = None) -> dict:
    return {"command": command, "task": task, "regime": regime, "results": {},
            "checks": [], "verdict": "PASS"}


def finish(doc: dict) -> dict:
    doc["verdict"] = "PASS" if all(c["passed"] for c in doc["checks"]) else "FAIL"
    if doc.get("golden") == "mismatch":
        doc["verdict"] = "FAIL"
    return doc


def schema() -> dict:
    return json.loads(resources.files("idealkit").joinpath("report_schema.json").read_text())


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _render_value(value: Any, indent: str) -> list[str]:
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{indent}{k}:")
                lines.extend(_render_value(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {_scalar(v)}")
        return lines
    if isinstance(value, list):
        lines = []
        for item in value:
            if isinstance(item, dict):
                sub = _render_value(item, indent + "  ")
                lines.append(indent + "- " + sub[0].lstrip())
                lines.extend(sub[1:])
            else:
                lines.append(f"{indent}- {_scalar(item)}")
        return lines
    return [indent + _scalar(value)]


def _scalar(v: Any) -> str:
    if v is None:
        return "unknown"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, dict)):
        return "none"
    return str(v)


def render_text(doc: dict) -> str:
    lines = [f"command: {doc['command']}", f"regime: {_scalar(doc['regime'])}"]
    lines.append("task:")
    lines.extend(_render_value(doc["task"], "  "))
    if doc["results"]:
        lines.append("results:")
        lines.extend(_render_value(doc["results"], "  "))
    for c in doc["checks"]:
        mark = "PASS" if c["passed"] else "FAIL"
        lines.append(f"[{mark}] {c['name']}" + (f": {c['detail']}" if c.get("detail") else ""))
    if "golden" in doc:
        lines.append(f"golden: {doc['golden']}")
    if "timings" in doc:
        lines.extend(f"time {k}: {v:.3f}s" for k, v in doc["timings"].items())
    lines.append(f"verdict: {doc['verdict']}")
    return "\n".join(lines) + "\n"
