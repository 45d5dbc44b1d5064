"""Solving openings: brute-force oracle, exact linear path, uniqueness verdicts.

Two independent routes produce verdicts:

* ``brute_force_solutions`` enumerates mine assignments over the closed cells
  with constraint propagation. It is exact and authoritative on any opening
  small enough to enumerate (guarded at 30 closed cells by default).
* ``linear_solve_opening`` solves the clue system exactly over the rationals.
  When the clue matrix has full column rank, a unique rational solution that
  happens to be 0/1-valued is THE solution; a non-binary solution proves no
  mine set realizes the opening.

``verify_table`` combines the two, preferring the linear path and falling
back to enumeration on rank-deficient systems.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

from .linalg import (
    Inconsistent,
    Underdetermined,
    build_clue_matrix,
    exact_solve,
)
from .model import (
    Cell,
    Geometry,
    MineMask,
    OpenPattern,
    Opening,
    closed_cells,
    compute_clues,
    expand_pattern,
    neighbors,
)

logger = logging.getLogger(__name__)

#: Hard ceiling on closed cells for enumeration (worst case 2^n assignments).
BRUTE_FORCE_GUARD = 30


class BruteForceGuardError(ValueError):
    """Opening has too many closed cells to enumerate."""


class IndeterminateError(RuntimeError):
    """Neither the linear path nor enumeration can decide the opening."""


class Status(Enum):
    UNIQUE = "unique"
    MULTIPLE = "multiple"
    NONE = "none"
    UNDERDETERMINED = "underdetermined"


class Method(Enum):
    BRUTE_FORCE = "brute-force"
    LINEAR_EXACT = "linear-exact"


@dataclass(frozen=True)
class SolveReport:
    status: Status
    method: Method
    mask: MineMask | None = None
    count: int = 0
    count_is_exact: bool = True
    witnesses: tuple[MineMask, ...] = ()
    nodes: int = 0
    kernel_dim: int = 0


def brute_force_solutions(
    opening: Opening, cap: int = 2, guard: int = BRUTE_FORCE_GUARD
) -> SolveReport:
    """Enumerate all mine sets satisfying the opening.

    Closed cells are branched on in row-major order; after every decision,
    clues whose remaining unknown neighbors are fully forced (all mines or
    all empty) are propagated. The exact solution count is reported while it
    stays <= ``cap``; beyond that the search stops with ``count_is_exact``
    False, which already certifies non-uniqueness.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    closed = opening.closed
    if len(closed) > guard:
        raise BruteForceGuardError(
            f"{len(closed)} closed cells exceed the enumeration guard of {guard}"
        )
    geometry = opening.geometry
    open_cells = opening.open_cells
    closed_index = {c: k for k, c in enumerate(closed)}

    # clue_nbrs[a] = closed-neighbor indices of open cell a;
    # cell_clues[k] = clue indices watching closed cell k.
    clue_nbrs: list[list[int]] = []
    clue_values: list[int] = []
    cell_clues: list[list[int]] = [[] for _ in closed]
    for ai, a in enumerate(open_cells):
        nbrs = sorted(closed_index[c] for c in neighbors(geometry, a) if c in closed_index)
        clue_nbrs.append(nbrs)
        clue_values.append(opening.clues[a])
        for k in nbrs:
            cell_clues[k].append(ai)

    assign = [-1] * len(closed)
    mines_seen = [0] * len(open_cells)
    unknown_left = [len(nbrs) for nbrs in clue_nbrs]

    solutions: list[tuple[int, ...]] = []
    count = 0
    exact = True
    nodes = 0

    def set_cell(k: int, v: int, trail: list[int]) -> bool:
        """Assign cell k; returns False on clue contradiction.

        Bookkeeping is always completed for every watching clue so that a
        single undo() restores the exact previous state.
        """
        assign[k] = v
        trail.append(k)
        ok = True
        for ai in cell_clues[k]:
            unknown_left[ai] -= 1
            mines_seen[ai] += v
            rem = clue_values[ai] - mines_seen[ai]
            if rem < 0 or rem > unknown_left[ai]:
                ok = False
        return ok

    def undo(trail: list[int]) -> None:
        while trail:
            k = trail.pop()
            v = assign[k]
            assign[k] = -1
            for ai in cell_clues[k]:
                unknown_left[ai] += 1
                mines_seen[ai] -= v

    def propagate(trail: list[int]) -> bool:
        changed = True
        while changed:
            changed = False
            for ai in range(len(open_cells)):
                if unknown_left[ai] == 0:
                    continue
                rem = clue_values[ai] - mines_seen[ai]
                if rem == 0 or rem == unknown_left[ai]:
                    forced = 0 if rem == 0 else 1
                    for k in clue_nbrs[ai]:
                        if assign[k] == -1:
                            if not set_cell(k, forced, trail):
                                return False
                    changed = True
        return True

    def dfs() -> bool:
        """Returns False to abort the whole search (cap exceeded)."""
        nonlocal count, exact, nodes
        trail: list[int] = []
        if not propagate(trail):
            undo(trail)
            return True
        k = next((i for i, v in enumerate(assign) if v == -1), None)
        if k is None:
            count += 1
            if len(solutions) < cap:
                solutions.append(tuple(assign))
            undo(trail)
            if count > cap:
                exact = False
                return False
            return True
        for v in (0, 1):
            nodes += 1
            sub: list[int] = []
            ok = set_cell(k, v, sub)
            if ok and not dfs():
                undo(sub)
                undo(trail)
                return False
            undo(sub)
        undo(trail)
        return True

    # Infeasible clue values can contradict before any decision is made.
    feasible = all(
        0 <= clue_values[ai] <= len(clue_nbrs[ai]) for ai in range(len(open_cells))
    )
    if feasible:
        dfs()

    witnesses = tuple(
        MineMask(geometry, open_cells, dict(zip(closed, sol))) for sol in solutions
    )
    if count == 0:
        status = Status.NONE
    elif count == 1:
        status = Status.UNIQUE
    else:
        status = Status.MULTIPLE
    return SolveReport(
        status=status,
        method=Method.BRUTE_FORCE,
        mask=witnesses[0] if count == 1 else None,
        count=count,
        count_is_exact=exact,
        witnesses=witnesses,
        nodes=nodes,
    )


def linear_solve_opening(opening: Opening) -> SolveReport:
    """Solve the opening via the exact rational clue system."""
    matrix = build_clue_matrix(opening.geometry, opening.open_cells)
    rhs = [opening.clues[a] for a in opening.open_cells]
    result = exact_solve(matrix, rhs)
    nr, nc = matrix.shape
    if isinstance(result, Inconsistent):
        return SolveReport(Status.NONE, Method.LINEAR_EXACT, nodes=nr * nc)
    if isinstance(result, Underdetermined):
        return SolveReport(
            Status.UNDERDETERMINED,
            Method.LINEAR_EXACT,
            kernel_dim=result.kernel_dim,
            count_is_exact=False,
            nodes=nr * nc,
        )
    if all(v in (0, 1) for v in result):
        assignment = {c: int(v) for c, v in zip(matrix.col_cells, result)}
        mask = MineMask(opening.geometry, opening.open_cells, assignment)
        return SolveReport(
            Status.UNIQUE,
            Method.LINEAR_EXACT,
            mask=mask,
            count=1,
            witnesses=(mask,),
            nodes=nr * nc,
        )
    # The unique rational solution is not a 0/1 vector, so no mine set
    # realizes these clues.
    return SolveReport(Status.NONE, Method.LINEAR_EXACT, nodes=nr * nc)


def verify_table(
    opening: Opening, guard: int = BRUTE_FORCE_GUARD
) -> tuple[bool, SolveReport]:
    """Is the opening a valid puzzle, i.e. does it admit exactly one solution?"""
    report = linear_solve_opening(opening)
    if report.status is not Status.UNDERDETERMINED:
        ok = report.status is Status.UNIQUE
        if ok:
            _check_mask(opening, report.mask)
        return ok, report
    if len(opening.closed) > guard:
        raise IndeterminateError(
            "clue system is rank-deficient and the opening is too large to enumerate"
        )
    report = brute_force_solutions(opening, cap=2, guard=guard)
    for w in report.witnesses:
        _check_mask(opening, w)
    return report.status is Status.UNIQUE, report


def _check_mask(opening: Opening, mask: MineMask | None) -> None:
    """Re-verify a returned mask against the opening, independently of the path."""
    assert mask is not None
    recomputed = compute_clues(opening.geometry, opening.open_cells, mask)
    if dict(recomputed.clues) != dict(opening.clues):
        raise AssertionError("solver returned a mask that does not satisfy the clues")


def find_counterexample(
    geometry: Geometry,
    pattern: OpenPattern,
    budget: int = 1 << 16,
    guard: int = BRUTE_FORCE_GUARD,
) -> tuple[MineMask, MineMask] | None:
    """Two distinct mine sets with identical clues, or None within budget.

    Enumerates masks in Gray-code order with incremental clue updates and
    reports the first clue collision.
    """
    open_cells = expand_pattern(geometry, pattern)
    closed = closed_cells(geometry, open_cells)
    n = len(closed)
    if n > guard:
        raise BruteForceGuardError(
            f"{n} closed cells exceed the enumeration guard of {guard}"
        )
    open_index = {a: k for k, a in enumerate(open_cells)}
    contrib = [
        [open_index[a] for a in neighbors(geometry, c) if a in open_index]
        for c in closed
    ]
    clue_vec = [0] * len(open_cells)
    seen: dict[tuple[int, ...], int] = {tuple(clue_vec): 0}
    prev_gray = 0
    total = min(1 << n, budget)
    for t in range(1, total):
        gray = t ^ (t >> 1)
        bit = (gray ^ prev_gray).bit_length() - 1
        delta = 1 if gray & (1 << bit) else -1
        for ai in contrib[bit]:
            clue_vec[ai] += delta
        prev_gray = gray
        key = tuple(clue_vec)
        other = seen.get(key)
        if other is not None:
            return (
                _mask_from_bits(geometry, open_cells, closed, other),
                _mask_from_bits(geometry, open_cells, closed, gray),
            )
        seen[key] = gray
    return None


def _mask_from_bits(
    geometry: Geometry,
    open_cells: tuple[Cell, ...],
    closed: tuple[Cell, ...],
    bits: int,
) -> MineMask:
    assignment = {c: (bits >> k) & 1 for k, c in enumerate(closed)}
    return MineMask(geometry, open_cells, assignment)
