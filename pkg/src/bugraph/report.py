"""JSON report documents with lossless rational values."""

from __future__ import annotations

import json
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any

from . import __version__

TIMING_KEY = "timing"


def rational(x: Fraction) -> dict[str, str]:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _default(obj: Any):
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _hook(d: dict):
    if d.keys() == {"num", "den"}:
        return Fraction(int(d["num"]), int(d["den"]))
    return d


def make_document(command: str, inputs: Any, body: dict, timing: dict | None = None) -> dict:
    doc = {"tool": "bugraph", "version": __version__, "command": command, "inputs": inputs}
    doc.update(body)
    doc[TIMING_KEY] = {"generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"), **(timing or {})}
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, default=_default, sort_keys=True, indent=2)


def loads(text: str) -> dict:
    return json.loads(text, object_hook=_hook)


def without_timing(doc: dict) -> dict:
    return {k: v for k, v in doc.items() if k != TIMING_KEY}
