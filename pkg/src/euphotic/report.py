"""Report envelopes: versioned JSON with rationals as strings, or plain text."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import __version__

SCHEMA = 1


def _clean(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((_clean(v) for v in obj), key=repr)
    return obj


def envelope(command: str, result: dict, checks: dict | None = None) -> dict:
    checks = checks or {}
    return {
        "schema": SCHEMA,
        "version": __version__,
        "command": command,
        "ok": all(checks.values()),
        "checks": checks,
        "result": _clean(result),
    }


def to_json(report: dict) -> str:
    return json.dumps(_clean(report), indent=2, sort_keys=True) + "\n"


def _lines(obj: Any, indent: int) -> list[str]:
    pad = "  " * indent
    if isinstance(obj, dict):
        out = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                out.append(f"{pad}{k}:")
                out.extend(_lines(v, indent + 1))
            else:
                out.append(f"{pad}{k}: {_scalar(v)}")
        return out
    if isinstance(obj, list):
        out = []
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                out.append(f"{pad}-")
                out.extend(_lines(v, indent + 1))
            else:
                out.append(f"{pad}- {_scalar(v)}")
        return out
    return [f"{pad}{_scalar(obj)}"]


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) or _flat(x) for x in v) and len(str(v)) < 100


def _scalar(v) -> str:
    if isinstance(v, list):
        return "(" + ", ".join(_scalar(x) for x in v) + ")"
    if isinstance(v, dict):
        return "{}"
    if v is None:
        return "-"
    return str(v)


def to_text(report: dict) -> str:
    head = f"{report['command']}: {'ok' if report['ok'] else 'CHECK FAILED'}"
    body = _lines(_clean(report["result"]), 1)
    checks = [f"  check {k}: {'pass' if v else 'FAIL'}" for k, v in report["checks"].items()]
    return "\n".join([head] + checks + body) + "\n"


def render(report: dict, fmt: str) -> str:
    return to_json(report) if fmt == "json" else to_text(report)
