"""Puzzle documents: the JSON interchange format and the human text grid.

JSON is the contract with the web player and with ``verify``/``solve``
inputs; serialization is canonical (sorted keys, fixed separators), so a
load/dump round trip is byte-stable. The text grid mirrors the printed-table
convention: one grid row per line, cells separated by single spaces, clue
digits on open cells, and ``.`` (unsolved) / ``*`` (mine) / ``-`` (empty) on
closed cells.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

from .model import (
    Cell,
    Geometry,
    GridKind,
    MineMask,
    OpenPattern,
    Opening,
    PatternKind,
    compute_clues,
    expand_pattern,
)

FORMAT_VERSION = 1


class DocumentError(ValueError):
    """Malformed or inconsistent puzzle document."""


@dataclass(frozen=True)
class PuzzleDocument:
    geometry: Geometry
    pattern: OpenPattern
    opening: Opening
    solution: MineMask | None = None
    provenance: Mapping[str, Any] | None = None

    def __post_init__(self) -> None:
        expanded = expand_pattern(self.geometry, self.pattern)
        if expanded != self.opening.open_cells:
            raise DocumentError("pattern does not expand to the opening's open cells")
        if self.solution is not None:
            recomputed = compute_clues(
                self.geometry, self.opening.open_cells, self.solution
            )
            if dict(recomputed.clues) != dict(self.opening.clues):
                raise DocumentError("solution does not satisfy the clues")

    def without_solution(self) -> "PuzzleDocument":
        return PuzzleDocument(self.geometry, self.pattern, self.opening, None, self.provenance)


def _pattern_dict(pattern: OpenPattern) -> dict[str, Any]:
    d: dict[str, Any] = {"kind": pattern.kind.value}
    if pattern.kind is PatternKind.EXPLICIT:
        d["cells"] = [list(c) for c in sorted(pattern.cells)]
    return d


def to_json_dict(doc: PuzzleDocument) -> dict[str, Any]:
    out: dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "geometry": {
            "kind": doc.geometry.kind.value,
            "rows": doc.geometry.rows,
            "cols": doc.geometry.cols,
        },
        "pattern": _pattern_dict(doc.pattern),
        "clues": [[i, j, doc.opening.clues[(i, j)]] for i, j in doc.opening.open_cells],
    }
    if doc.solution is not None:
        out["solution"] = [
            [i, j, doc.solution.assignment[(i, j)]]
            for i, j in sorted(doc.solution.assignment)
        ]
    if doc.provenance:
        prov = {
            k: (str(v) if isinstance(v, Fraction) else v)
            for k, v in doc.provenance.items()
        }
        out["provenance"] = prov
    return out


def dumps(doc: PuzzleDocument) -> str:
    return json.dumps(to_json_dict(doc), sort_keys=True, separators=(",", ":")) + "\n"


def loads(text: str) -> PuzzleDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    return from_json_dict(raw)


def from_json_dict(raw: Any) -> PuzzleDocument:
    if not isinstance(raw, dict):
        raise DocumentError("document must be a JSON object")
    version = raw.get("format_version")
    if version != FORMAT_VERSION:
        raise DocumentError(
            f"unsupported format_version {version!r}; this toolkit reads version {FORMAT_VERSION}"
        )
    try:
        g = raw["geometry"]
        geometry = Geometry(GridKind(g["kind"]), int(g["rows"]), int(g["cols"]))
        p = raw["pattern"]
        kind = PatternKind(p["kind"])
        if kind is PatternKind.EXPLICIT:
            pattern = OpenPattern.explicit(tuple((int(i), int(j)) for i, j in p["cells"]))
        else:
            pattern = OpenPattern(kind)
        clue_rows = [(int(i), int(j), int(v)) for i, j, v in raw["clues"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"malformed document: {exc}") from exc

    open_cells = expand_pattern(geometry, pattern)
    clue_map = {(i, j): v for i, j, v in clue_rows}
    if set(clue_map) != set(open_cells) or len(clue_map) != len(clue_rows):
        raise DocumentError("clue cells must coincide exactly with the open pattern")
    try:
        opening = Opening(geometry, open_cells, clue_map)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc

    solution = None
    if raw.get("solution") is not None:
        try:
            assignment = {(int(i), int(j)): int(v) for i, j, v in raw["solution"]}
            solution = MineMask(geometry, open_cells, assignment)
        except (TypeError, ValueError) as exc:
            raise DocumentError(f"malformed solution: {exc}") from exc
    provenance = raw.get("provenance")
    return PuzzleDocument(geometry, pattern, opening, solution, provenance)


def render_grid(opening: Opening, mask: MineMask | None = None) -> str:
    """Text grid: clue digits on open cells, ./*/- on closed cells."""
    lines = []
    clue_cells = set(opening.open_cells)
    for i in range(1, opening.geometry.rows + 1):
        row = []
        for j in range(1, opening.geometry.cols + 1):
            if (i, j) in clue_cells:
                row.append(str(opening.clues[(i, j)]))
            elif mask is None:
                row.append(".")
            else:
                row.append("*" if mask.assignment[(i, j)] else "-")
        lines.append(" ".join(row))
    return "\n".join(lines) + "\n"


def parse_grid(
    text: str, kind: GridKind = GridKind.SQUARE_MOORE
) -> tuple[Opening, MineMask | None]:
    """Inverse of render_grid. Digit tokens are open clues; ``.`` marks an
    unsolved closed cell, ``*``/``-`` solved ones. A grid mixing ``.`` with
    solved marks is rejected."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise DocumentError("empty grid")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise DocumentError("ragged grid")
    geometry = Geometry(kind, len(rows), n)
    clues: dict[Cell, int] = {}
    marks: dict[Cell, int] = {}
    unsolved = 0
    for i, row in enumerate(rows, start=1):
        for j, tok in enumerate(row, start=1):
            if tok.isdigit():
                clues[(i, j)] = int(tok)
            elif tok == ".":
                unsolved += 1
            elif tok == "*":
                marks[(i, j)] = 1
            elif tok == "-":
                marks[(i, j)] = 0
            else:
                raise DocumentError(f"unexpected token {tok!r} at row {i}")
    open_cells = tuple(sorted(clues))
    opening = Opening(geometry, open_cells, clues)
    if unsolved and marks:
        raise DocumentError("grid mixes unsolved '.' cells with solved marks")
    mask = MineMask(geometry, open_cells, marks) if marks else None
    return opening, mask
