"""Report documents: nested string-keyed dicts rendered as JSON or aligned text.

The text form lists one dotted key per line, so both renderings carry the
same values and either can be parsed back for comparison.
"""

from __future__ import annotations

import json
from typing import Any


def render_machine(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def parse_machine(text: str) -> dict[str, Any]:
    return json.loads(text)


def _scalar(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_scalar(v) for v in value) if value else "-"
    return str(value)


def flatten(doc: dict[str, Any], prefix: str = "") -> list[tuple[str, str]]:
    rows: list[tuple[str, str]] = []
    for key, value in doc.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            rows.extend(flatten(value, name + "."))
        else:
            rows.append((name, _scalar(value)))
    return rows


def render_text(doc: dict[str, Any]) -> str:
    rows = flatten(doc)
    width = max((len(k) for k, _ in rows), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def parse_text(text: str) -> list[tuple[str, str]]:
    rows = []
    for line in text.splitlines():
        key, _, value = line.partition("  ")
        rows.append((key.strip(), value.strip()))
    return rows


def render(doc: dict[str, Any], output: str) -> str:
    if output == "machine":
        return render_machine(doc)
    if output == "text":
        return render_text(doc)
    raise ValueError(f"unknown output format {output!r}")
