"""Structured-text rendering of nested reports.

Mappings become ``key: value`` lines, nested mappings and lists are indented by
two spaces, and list items start with ``- ``. Key order is insertion order, so
callers fix the layout by building the mapping in a stable order.
"""

from collections.abc import Mapping, Sequence
from typing import Any

INDENT = "  "


def _scalar(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.4f}".rstrip("0").rstrip(".")
    return str(value)


def _is_nested(value: Any) -> bool:
    if isinstance(value, Mapping):
        return bool(value)
    return (
        isinstance(value, Sequence)
        and not isinstance(value, str | bytes | tuple)
        and bool(value)
    )


def _render(value: Any, depth: int, lines: list[str]) -> None:
    pad = INDENT * depth
    if isinstance(value, Mapping):
        for key, item in value.items():
            if _is_nested(item):
                lines.append(f"{pad}{key}:")
                _render(item, depth + 1, lines)
            else:
                lines.append(f"{pad}{key}: {_inline(item)}")
        return
    for item in value:
        if isinstance(item, Mapping) and item:
            first, *rest = list(item.items())
            nested: list[str] = []
            _render(dict([first]), 0, nested)
            lines.append(f"{pad}- {nested[0]}")
            lines.extend(f"{pad}  {line}" for line in nested[1:])
            if rest:
                _render(dict(rest), depth + 1, lines)
        else:
            lines.append(f"{pad}- {_inline(item)}")


def _inline(value: Any) -> str:
    if isinstance(value, Mapping):
        return "{}"
    if isinstance(value, tuple):
        return "[" + ",".join(_scalar(v) for v in value) + "]"
    if isinstance(value, list):
        return "[]"
    return _scalar(value)


def render_report(report: Mapping[str, Any]) -> str:
    """Render a nested mapping as UTF-8 structured text ending in a newline."""
    lines: list[str] = []
    _render(report, 0, lines)
    return "\n".join(lines) + "\n"
