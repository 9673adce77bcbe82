"""Lossless rendering of results and the run report written by the CLI."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .graph import Graph, serialize_graph
from .solver import UNREACHABLE


def render_number(x, unreachable: str = "inf") -> str:
    """Rationals as ``p/q`` (bare ``p`` when integral), floats with 17
    significant digits, the unreachable marker as ``unreachable``
    (``inf`` by default)."""
    if x is UNREACHABLE:
        return unreachable
    if isinstance(x, bool):
        raise TypeError("refusing to render a bool as a number")
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        return f"{x:.17g}"
    raise TypeError(f"cannot render {x!r}")


def graph_fingerprint(g: Graph) -> dict[str, Any]:
    digest = hashlib.sha256(serialize_graph(g).encode("ascii")).hexdigest()
    return {"n": g.n, "m": g.m, "sha256": digest}


@dataclass
class RunReport:
    method: str
    inputs: dict[str, Any]
    value: Any = None
    agreement: dict[str, Any] | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        out = {
            "method": self.method,
            "inputs": self.inputs,
            "value": self.value,
            "agreement": self.agreement,
        }
        out.update(self.extra)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def matrix_to_csv(matrix: list[list[Any]], n: int) -> str:
    """Header ``hitwalk all-pairs n=<n>`` then one row per source.

    Non-integral rationals are double-quoted so spreadsheet tools do not
    read them as dates or divisions.
    """
    lines = [f"hitwalk all-pairs n={n}"]
    for row in matrix:
        cells = []
        for x in row:
            text = render_number(x)
            if isinstance(x, Fraction) and x.denominator != 1:
                text = f'"{text}"'
            cells.append(text)
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
