"""Conversion between 0-based indices and the display labels ``u_i`` / ``v_i'``.

In a functigraph over a base graph of order ``n``, index ``i < n`` is the
domain vertex ``u{i+1}`` and index ``n + i`` is the codomain vertex
``v{i+1}'``. Vertices of a plain graph are labeled ``1..order``.
"""
from __future__ import annotations

import re
from typing import Iterable, List, Optional

from .errors import InvalidParameterError, ParseError

_LABEL_RE = re.compile(r"^(?P<side>[uv])(?P<num>[0-9]+)(?P<prime>'?)$")


def vertex_label(index: int, base_order: Optional[int] = None) -> str:
    """Display label of ``index``; ``base_order`` is ``None`` for a plain graph."""
    if base_order is None:
        if index < 0:
            raise InvalidParameterError(f"negative vertex index {index}")
        return str(index + 1)
    if not 0 <= index < 2 * base_order:
        raise InvalidParameterError(f"index {index} outside functigraph over order {base_order}")
    if index < base_order:
        return f"u{index + 1}"
    return f"v{index - base_order + 1}'"


def parse_vertex_label(label: str, base_order: Optional[int] = None) -> int:
    label = label.strip()
    if base_order is None:
        try:
            value = int(label)
        except ValueError:
            raise ParseError(f"{label!r} is not a plain vertex label")
        if value < 1:
            raise ParseError(f"vertex labels start at 1, got {label!r}")
        return value - 1
    match = _LABEL_RE.match(label)
    if not match:
        raise ParseError(f"{label!r} is not a u_i / v_i' label")
    num = int(match["num"])
    if not 1 <= num <= base_order:
        raise ParseError(f"label {label!r} outside 1..{base_order}")
    if match["side"] == "u":
        if match["prime"]:
            raise ParseError(f"domain label {label!r} must not carry a prime")
        return num - 1
    if not match["prime"]:
        raise ParseError(f"codomain label {label!r} needs a prime, e.g. v{num}'")
    return base_order + num - 1


def vertex_labels(indices: Iterable[int], base_order: Optional[int] = None) -> List[str]:
    """Labels sorted by side then index (indices already sort that way)."""
    return [vertex_label(i, base_order) for i in sorted(indices)]


def format_labels(indices: Iterable[int], base_order: Optional[int] = None) -> str:
    return "{" + ", ".join(vertex_labels(indices, base_order)) + "}"
