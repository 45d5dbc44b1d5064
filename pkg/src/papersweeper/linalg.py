"""Exact linear algebra for uniqueness verdicts.

The clue values of an opening are linear in the mine indicator vector, so
uniqueness of a solution reduces to the rank of a 0/1 incidence matrix over
the rationals. Rank, determinant, solve, and kernel are all computed with
fraction-free (Bareiss) integer elimination: verdicts are exact, never
subject to floating-point tolerances.

Closed-form predicates decide uniqueness for the standard patterns without
building a matrix at all:

* chess pattern on the square grid: unique for every mine set iff
  gcd(m+1, n+1) = 1, equivalently iff the multiplier 2(cos pik/(m+1) +
  cos pil/(n+1)) never vanishes on the grid of frequencies;
* the top-row opening of a 2 x n strip: unique iff 3 does not divide n+1;
* chess pattern on the triangle tiling: unique when neither m+1 nor n+1 is
  divisible by 4.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .model import Cell, Geometry, GridKind, closed_cells, neighbors


@dataclass(frozen=True)
class ClueMatrix:
    """0/1 incidence matrix of the clue system.

    Row ``a`` corresponds to an open cell, column ``c`` to a closed cell;
    the entry is 1 iff ``c`` is a neighbor of ``a``. Both orderings are
    row-major, which fixes the matrix uniquely.
    """

    row_cells: tuple[Cell, ...]
    col_cells: tuple[Cell, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_cells), len(self.col_cells)


def build_clue_matrix(geometry: Geometry, open_cells: Sequence[Cell]) -> ClueMatrix:
    cols = closed_cells(geometry, open_cells)
    col_index = {c: k for k, c in enumerate(cols)}
    entries = []
    for a in open_cells:
        row = [0] * len(cols)
        for c in neighbors(geometry, a):
            k = col_index.get(c)
            if k is not None:
                row[k] = 1
        entries.append(tuple(row))
    return ClueMatrix(tuple(open_cells), cols, tuple(entries))


def _fraction_free_echelon(
    rows: Sequence[Sequence[int]],
) -> tuple[list[list[int]], list[int], int]:
    """Bareiss elimination to row echelon form.

    Returns (echelon matrix, pivot column indices, row-swap sign). All
    intermediate divisions are exact, so entries stay integers.
    """
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    piv_cols: list[int] = []
    prev = 1
    sign = 1
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        pr = next((k for k in range(r, nr) if m[k][c] != 0), None)
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
            sign = -sign
        piv = m[r][c]
        for k in range(r + 1, nr):
            mk = m[k]
            mr = m[r]
            factor = mk[c]
            for cc in range(c + 1, nc):
                mk[cc] = (piv * mk[cc] - factor * mr[cc]) // prev
            mk[c] = 0
        prev = piv
        piv_cols.append(c)
        r += 1
    return m, piv_cols, sign


def exact_rank(matrix: ClueMatrix | Sequence[Sequence[int]]) -> int:
    rows = matrix.entries if isinstance(matrix, ClueMatrix) else matrix
    if not rows:
        return 0
    _, piv_cols, _ = _fraction_free_echelon(rows)
    return len(piv_cols)


def exact_determinant(rows: Sequence[Sequence[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if any(len(r) != n for r in rows):
        raise ValueError("determinant requires a square matrix")
    ech, piv_cols, sign = _fraction_free_echelon(rows)
    if len(piv_cols) < n:
        return 0
    # For a full-rank Bareiss elimination the last pivot is the determinant
    # up to the row-swap sign.
    return sign * ech[n - 1][n - 1]


class Inconsistent:
    """No rational solution exists."""

    def __repr__(self) -> str:
        return "Inconsistent()"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Inconsistent)


@dataclass(frozen=True)
class Underdetermined:
    """Consistent but rank-deficient system: a whole affine space of solutions."""

    kernel_dim: int


SolveResult = "tuple[Fraction, ...] | Inconsistent | Underdetermined"


def exact_solve(matrix: ClueMatrix, rhs: Sequence[int]):
    """Solve E x = rhs exactly over the rationals.

    Returns the unique solution as a tuple of Fractions when the matrix has
    full column rank and the system is consistent; ``Underdetermined`` with
    the kernel dimension when consistent but rank-deficient; ``Inconsistent``
    otherwise.
    """
    nr, nc = matrix.shape
    if len(rhs) != nr:
        raise ValueError(f"rhs length {len(rhs)} != row count {nr}")
    aug = [list(row) + [int(b)] for row, b in zip(matrix.entries, rhs)]
    if not aug:
        return ()
    ech, piv_cols, _ = _fraction_free_echelon(aug)
    if piv_cols and piv_cols[-1] == nc:
        return Inconsistent()
    rank = len(piv_cols)
    if rank < nc:
        return Underdetermined(kernel_dim=nc - rank)
    x: list[Fraction] = [Fraction(0)] * nc
    for r in range(rank - 1, -1, -1):
        c = piv_cols[r]
        s = Fraction(ech[r][nc])
        for cc in range(c + 1, nc):
            if ech[r][cc]:
                s -= ech[r][cc] * x[cc]
        x[c] = s / ech[r][c]
    return tuple(x)


def kernel_basis(matrix: ClueMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the rational null space; empty iff full column rank."""
    nr, nc = matrix.shape
    if nr == 0:
        return [
            tuple(Fraction(1 if k == f else 0) for k in range(nc)) for f in range(nc)
        ]
    ech, piv_cols, _ = _fraction_free_echelon(matrix.entries)
    pivot_set = set(piv_cols)
    free_cols = [c for c in range(nc) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        x = [Fraction(0)] * nc
        x[fc] = Fraction(1)
        for r in range(len(piv_cols) - 1, -1, -1):
            c = piv_cols[r]
            s = Fraction(0)
            for cc in range(c + 1, nc):
                if ech[r][cc]:
                    s += ech[r][cc] * x[cc]
            x[c] = -s / ech[r][c]
        basis.append(tuple(x))
    return basis


def chess_uniqueness_predicate(m: int, n: int) -> bool:
    """Chess opening on an m x n square grid: unique for every mine set?"""
    _check_dims(m, n)
    return math.gcd(m + 1, n + 1) == 1


def two_by_n_uniqueness_predicate(n: int) -> bool:
    """Top-row opening on a 2 x n strip: unique for every mine set?"""
    if n < 1:
        raise ValueError("n must be >= 1")
    return (n + 1) % 3 != 0


def triangle_uniqueness_predicate(m: int, n: int) -> bool:
    """Chess opening on an m x n triangle grid: unique for every mine set?"""
    _check_dims(m, n)
    return (m + 1) % 4 != 0 and (n + 1) % 4 != 0


def _check_dims(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be >= 1")


@dataclass(frozen=True)
class SpectrumReport:
    """Zero-eigenvalue analysis of the clue system's multiplier operator."""

    geometry: Geometry
    eigenvalue_descriptors: tuple[tuple[int, int], ...]
    has_zero: bool
    zero_witnesses: tuple[tuple[int, int], ...]
    min_abs_multiplier: float | None = None

    def __post_init__(self) -> None:
        if self.has_zero != bool(self.zero_witnesses):
            raise ValueError("has_zero must match presence of witnesses")


def chess_spectrum(m: int, n: int) -> SpectrumReport:
    """Spectrum {2(cos pik/(m+1) + cos pil/(n+1))} of the square-grid operator.

    The eigenvalue at (k, l) vanishes iff k/(m+1) + l/(n+1) = 1, which is
    decided by the integer identity k(n+1) + l(m+1) = (m+1)(n+1) -- no
    floating point is involved.
    """
    _check_dims(m, n)
    descriptors = tuple((k, l) for k in range(1, m + 1) for l in range(1, n + 1))
    target = (m + 1) * (n + 1)
    witnesses = tuple(
        (k, l) for k, l in descriptors if k * (n + 1) + l * (m + 1) == target
    )
    return SpectrumReport(
        geometry=Geometry(GridKind.SQUARE_MOORE, m, n),
        eigenvalue_descriptors=descriptors,
        has_zero=bool(witnesses),
        zero_witnesses=witnesses,
    )


def triangle_multiplier(m: int, n: int, k: int, l: int) -> float:
    """Value 4|cos x + cos y + e^{ix} cos 2y|^2 at x = pik/(m+1), y = pil/(n+1)."""
    x = math.pi * k / (m + 1)
    y = math.pi * l / (n + 1)
    z = math.cos(x) + math.cos(y) + cmath.exp(1j * x) * math.cos(2 * y)
    return 4.0 * abs(z) ** 2


def triangle_multiplier_min(m: int, n: int) -> float:
    """Minimum of the triangle-grid multiplier over the frequency grid.

    Diagnostic grade (floating point). Zero minima occur exactly when both
    m+1 and n+1 are divisible by 4: the multiplier vanishes only where
    cos 2y = 0 and x + y = pi.
    """
    _check_dims(m, n)
    return min(
        triangle_multiplier(m, n, k, l)
        for k in range(1, m + 1)
        for l in range(1, n + 1)
    )


def triangle_spectrum(m: int, n: int, zero_tol: float = 1e-12) -> SpectrumReport:
    """Multiplier analysis for the triangle grid, with near-zero witnesses."""
    _check_dims(m, n)
    descriptors = tuple((k, l) for k in range(1, m + 1) for l in range(1, n + 1))
    values = {d: triangle_multiplier(m, n, *d) for d in descriptors}
    witnesses = tuple(d for d in descriptors if values[d] <= zero_tol)
    return SpectrumReport(
        geometry=Geometry(GridKind.TRIANGLE_12, m, n),
        eigenvalue_descriptors=descriptors,
        has_zero=bool(witnesses),
        zero_witnesses=witnesses,
        min_abs_multiplier=min(values.values()),
    )
