"""Deterministic JSON / CSV / text output and edge-list ingestion.

Big integers are always written as decimal strings and ratios as
``{"num": "...", "den": "..."}`` so no consumer can silently round them.
Output uses LF line endings and a fixed key order.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Union

from .indices import IndexReport
from .model import DendrimerParams
from .oracle import TreeGraph
from .paths import PathLengthTable

__all__ = [
    "SCHEMA_VERSION",
    "EdgeListParseError",
    "to_document",
    "to_json",
    "from_json",
    "to_csv",
    "to_text",
    "from_edge_list",
]

SCHEMA_VERSION = 1

Payload = Union[IndexReport, PathLengthTable, dict]


class EdgeListParseError(ValueError):
    def __init__(self, lineno: int, line: str, reason: str) -> None:
        super().__init__(f"line {lineno}: {reason}: {line!r}")
        self.lineno = lineno


def _ratio(value: Fraction) -> dict[str, str]:
    return {"num": str(value.numerator), "den": str(value.denominator)}


def _counts(table: PathLengthTable) -> list[dict[str, Any]]:
    return [{"length": ell, "count": str(c)} for ell, c in sorted(table.items())]


def to_document(payload: Payload) -> dict[str, Any]:
    """Plain-dict form of a report, table, or verification summary."""
    if isinstance(payload, IndexReport):
        return {
            "schema_version": SCHEMA_VERSION,
            "n": payload.params.n,
            "k": payload.params.k,
            "vertices": str(payload.vertices),
            "edges": str(payload.edges),
            "leaves": str(payload.leaves),
            "counts": _counts(payload.table),
            "wiener": str(payload.wiener),
            "average_distance": _ratio(payload.average_distance),
            "medium_domination": [
                {"sigma": s, "value": _ratio(v)} for s, v in sorted(payload.medium_domination)
            ],
        }
    if isinstance(payload, PathLengthTable):
        return {
            "schema_version": SCHEMA_VERSION,
            "n": payload.params.n,
            "k": payload.params.k,
            "counts": _counts(payload),
        }
    if isinstance(payload, dict):
        return {"schema_version": SCHEMA_VERSION, **payload}
    raise TypeError(f"cannot serialise {type(payload).__name__}")


def to_json(payload: Payload) -> str:
    return json.dumps(to_document(payload), indent=2, ensure_ascii=True) + "\n"


def _parse_ratio(obj: dict[str, str]) -> Fraction:
    value = Fraction(int(obj["num"]), int(obj["den"]))
    if (value.numerator, value.denominator) != (int(obj["num"]), int(obj["den"])):
        raise ValueError(f"ratio {obj} is not in lowest terms")
    return value


def from_json(text: str) -> Union[IndexReport, PathLengthTable]:
    """Inverse of :func:`to_json` for reports and tables."""
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
    params = DendrimerParams(doc["n"], doc["k"])
    table = PathLengthTable(params, {row["length"]: int(row["count"]) for row in doc["counts"]})
    if "wiener" not in doc:
        return table
    return IndexReport(
        params=params,
        vertices=int(doc["vertices"]),
        edges=int(doc["edges"]),
        leaves=int(doc["leaves"]),
        table=table,
        wiener=int(doc["wiener"]),
        average_distance=_parse_ratio(doc["average_distance"]),
        medium_domination=[
            (row["sigma"], _parse_ratio(row["value"])) for row in doc["medium_domination"]
        ],
    )


def to_csv(table: PathLengthTable) -> str:
    rows = ["length,count"] + [f"{ell},{c}" for ell, c in sorted(table.items())]
    return "\n".join(rows) + "\n"


def _fmt_ratio(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def to_text(payload: Payload) -> str:
    if isinstance(payload, PathLengthTable):
        p = payload.params
        lines = [f"T({p.n},{p.k}) path counts", "length count"]
        lines += [f"{ell} {c}" for ell, c in sorted(payload.items())]
        return "\n".join(lines) + "\n"
    if isinstance(payload, IndexReport):
        p = payload.params
        lines = [
            f"T({p.n},{p.k})",
            f"vertices {payload.vertices}",
            f"edges {payload.edges}",
            f"leaves {payload.leaves}",
            f"wiener {payload.wiener}",
        ]
        if payload.wiener_closed is not None:
            lines.append(f"wiener_closed {payload.wiener_closed}")
        lines.append(f"average_distance {_fmt_ratio(payload.average_distance)}")
        lines.append("length count")
        lines += [f"{ell} {c}" for ell, c in sorted(payload.table.items())]
        if payload.medium_domination:
            lines.append("sigma medium_domination")
            lines += [f"{s} {_fmt_ratio(v)}" for s, v in payload.medium_domination]
        return "\n".join(lines) + "\n"
    raise TypeError(f"cannot render {type(payload).__name__} as text")


_HEADER = re.compile(r"#\s*dendrimer\s+n=(\d+)\s+k=(\d+)\s+V=(\d+)\s*$")
_INT = re.compile(r"\d+")


def from_edge_list(text: str) -> TreeGraph:
    """Parse ``u v`` lines (``#`` comments allowed) into a validated tree rooted at 0.

    A ``# dendrimer n=.. k=.. V=..`` header, as written by the exporter,
    restores the dendrimer parameters and vertex count.
    """
    edges: list[tuple[int, int]] = []
    params = None
    num_vertices = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _HEADER.match(line)
            if m and params is None:
                params = DendrimerParams(int(m.group(1)), int(m.group(2)))
                num_vertices = int(m.group(3))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(lineno, raw, "expected two vertex ids")
        if not all(_INT.fullmatch(x) for x in parts):
            raise EdgeListParseError(lineno, raw, "vertex ids must be nonnegative decimal integers")
        edges.append((int(parts[0]), int(parts[1])))
    return TreeGraph.from_edges(edges, num_vertices=num_vertices, params=params)
