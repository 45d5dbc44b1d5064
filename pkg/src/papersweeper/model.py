"""Grid geometries, neighborhood rules, openings, mine masks, clue computation.

Cells are 1-based ``(row, col)`` tuples. Two grid flavours are supported:

* ``SQUARE_MOORE`` -- the classic rectangular grid where each cell has up to
  8 neighbors (the Moore neighborhood).
* ``TRIANGLE_12`` -- a triangle tiling encoded on the same rectangular index
  set, where two triangles are neighbors when they share at least one vertex.
  Each cell then has up to 12 neighbors, four of which depend on the parity
  of ``i + j`` of the queried cell.

Everything in this module is an immutable value; all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping

Cell = tuple[int, int]


class GridKind(Enum):
    SQUARE_MOORE = "square"
    TRIANGLE_12 = "triangle"


@dataclass(frozen=True)
class Geometry:
    kind: GridKind
    rows: int
    cols: int

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"grid must be at least 1x1, got {self.rows}x{self.cols}")

    def contains(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= self.rows and 1 <= j <= self.cols

    def cells(self) -> Iterator[Cell]:
        """All cells in row-major order."""
        for i in range(1, self.rows + 1):
            for j in range(1, self.cols + 1):
                yield (i, j)


# Moore neighborhood of the square grid.
_MOORE_OFFSETS = (
    (-1, -1), (-1, 0), (-1, 1),
    (0, -1), (0, 1),
    (1, -1), (1, 0), (1, 1),
)

# Parity-independent part of the triangle-12 neighborhood: the 4 orthogonal
# and 4 diagonal offsets plus the two horizontal jumps.
_TRIANGLE_FIXED_OFFSETS = _MOORE_OFFSETS + ((0, -2), (0, 2))


def _offsets(kind: GridKind, cell: Cell) -> tuple[tuple[int, int], ...]:
    if kind is GridKind.SQUARE_MOORE:
        return _MOORE_OFFSETS
    # The remaining two triangle offsets flip with the parity of i + j.
    i, j = cell
    s = -1 if (i + j) % 2 else 1
    return _TRIANGLE_FIXED_OFFSETS + ((s, -2), (s, 2))


def neighbors(geometry: Geometry, cell: Cell) -> frozenset[Cell]:
    """Neighbor set of ``cell``, clipped to the grid."""
    if not geometry.contains(cell):
        raise ValueError(f"cell {cell} outside {geometry.rows}x{geometry.cols} grid")
    i, j = cell
    return frozenset(
        (i + di, j + dj)
        for di, dj in _offsets(geometry.kind, cell)
        if geometry.contains((i + di, j + dj))
    )


class PatternKind(Enum):
    CHESS = "chess"
    TOP_ROW = "top-row"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class OpenPattern:
    """Which cells of the grid are shown open (carry clue numbers)."""

    kind: PatternKind
    cells: frozenset[Cell] = field(default_factory=frozenset)

    @classmethod
    def chess(cls) -> "OpenPattern":
        return cls(PatternKind.CHESS)

    @classmethod
    def top_row(cls) -> "OpenPattern":
        return cls(PatternKind.TOP_ROW)

    @classmethod
    def explicit(cls, cells: Iterable[Cell]) -> "OpenPattern":
        return cls(PatternKind.EXPLICIT, frozenset(cells))


def expand_pattern(geometry: Geometry, pattern: OpenPattern) -> tuple[Cell, ...]:
    """Open cells of ``pattern`` in canonical row-major order."""
    if pattern.kind is PatternKind.CHESS:
        return tuple(c for c in geometry.cells() if (c[0] + c[1]) % 2 == 0)
    if pattern.kind is PatternKind.TOP_ROW:
        if geometry.kind is not GridKind.SQUARE_MOORE:
            raise ValueError("top-row pattern is defined only on the square grid")
        return tuple((1, j) for j in range(1, geometry.cols + 1))
    bad = [c for c in pattern.cells if not geometry.contains(c)]
    if bad:
        raise ValueError(f"explicit open cells outside the grid: {sorted(bad)}")
    return tuple(c for c in geometry.cells() if c in pattern.cells)


def closed_cells(geometry: Geometry, open_cells: Iterable[Cell]) -> tuple[Cell, ...]:
    """Complement of the open set, in row-major order."""
    opened = set(open_cells)
    return tuple(c for c in geometry.cells() if c not in opened)


def closed_degree(geometry: Geometry, cell: Cell, open_set: frozenset[Cell] | set[Cell]) -> int:
    """Number of closed neighbors of ``cell`` (the only ones that can hold mines)."""
    return sum(1 for c in neighbors(geometry, cell) if c not in open_set)


@dataclass(frozen=True)
class Opening:
    """An open set together with its clue values: the puzzle shown to a player.

    Clue values are validated to be non-negative and defined exactly on the
    open cells. Satisfiability (every clue realizable by some mine set) is a
    solver question, not a construction invariant: unsatisfiable openings
    must remain representable so the solver can report that no solution
    exists.
    """

    geometry: Geometry
    open_cells: tuple[Cell, ...]
    clues: Mapping[Cell, int]

    def __post_init__(self) -> None:
        if len(set(self.open_cells)) != len(self.open_cells):
            raise ValueError("duplicate open cells")
        for c in self.open_cells:
            if not self.geometry.contains(c):
                raise ValueError(f"open cell {c} outside the grid")
        if set(self.clues) != set(self.open_cells):
            raise ValueError("clues must be defined exactly on the open cells")
        for c, v in self.clues.items():
            if v < 0:
                raise ValueError(f"negative clue {v} at {c}")

    @property
    def closed(self) -> tuple[Cell, ...]:
        return closed_cells(self.geometry, self.open_cells)


@dataclass(frozen=True)
class MineMask:
    """A 0/1 assignment on the closed cells: a candidate solution."""

    geometry: Geometry
    open_cells: tuple[Cell, ...]
    assignment: Mapping[Cell, int]

    def __post_init__(self) -> None:
        expected = set(closed_cells(self.geometry, self.open_cells))
        if set(self.assignment) != expected:
            raise ValueError("mask must be defined exactly on the closed cells")
        for c, v in self.assignment.items():
            if v not in (0, 1):
                raise ValueError(f"mask value at {c} must be 0 or 1, got {v}")

    @classmethod
    def from_mines(
        cls, geometry: Geometry, open_cells: Iterable[Cell], mines: Iterable[Cell]
    ) -> "MineMask":
        opened = tuple(open_cells)
        mine_set = set(mines)
        assignment = {
            c: (1 if c in mine_set else 0) for c in closed_cells(geometry, opened)
        }
        extra = mine_set - set(assignment)
        if extra:
            raise ValueError(f"mines on open or out-of-grid cells: {sorted(extra)}")
        return cls(geometry, opened, assignment)

    @property
    def mines(self) -> frozenset[Cell]:
        return frozenset(c for c, v in self.assignment.items() if v == 1)


def compute_clues(
    geometry: Geometry, open_cells: Iterable[Cell], mask: MineMask
) -> Opening:
    """Opening whose clue at each open cell counts its mined neighbors."""
    opened = tuple(open_cells)
    mines = mask.mines
    clues = {c: len(neighbors(geometry, c) & mines) for c in opened}
    return Opening(geometry, opened, clues)


def trivial_cells(
    geometry: Geometry, open_cells: Iterable[Cell], mask: MineMask
) -> frozenset[Cell]:
    """Open cells whose whole closed neighborhood is forced at a glance.

    A cell is trivial when its clue is 0 (no neighbor is mined) or equals its
    closed-neighbor count (every neighbor that could hold a mine does). The
    comparison deliberately uses the closed degree rather than the total
    degree: open neighbors can never hold mines.
    """
    opened = tuple(open_cells)
    open_set = frozenset(opened)
    opening = compute_clues(geometry, opened, mask)
    out = set()
    for c in opened:
        f = opening.clues[c]
        if f == 0 or f == closed_degree(geometry, c, open_set):
            out.add(c)
    return frozenset(out)
