"""Seeded puzzle generation.

Three modes:

* ``BERNOULLI`` -- every closed cell is independently mined with probability
  ``p`` (default 1/2).
* ``NO_TRIVIAL_ROWS`` -- row 1 is filled by Bernoulli trials; rows 2..m are
  filled left to right, forcing a closed cell whenever it is the last
  undecided neighbor of the open cell directly above and that cell's clue
  would otherwise end up 0 or maximal. Trivial clues can then survive only
  in the last row.
* ``NO_TRIVIAL_FULL`` -- as above, plus the same forcing against the
  left-hand open cell while filling the last row, and a retry loop that
  redraws the board until no trivial clue remains anywhere. (The row rules
  alone cannot protect the corner cell (m, n) when it is open: none of its
  closed neighbors is decided with reference to it.)

Randomness comes from Python's Mersenne Twister (``random.Random``), whose
algorithm is frozen across CPython versions and platforms, so fixtures keyed
by seed never drift. Retries use substreams derived from (seed, attempt).

Generation refuses geometry/pattern pairs that fail their uniqueness
predicate unless the config explicitly overrides, so every emitted opening
is a puzzle with exactly one solution.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .linalg import (
    build_clue_matrix,
    chess_uniqueness_predicate,
    exact_rank,
    triangle_uniqueness_predicate,
    two_by_n_uniqueness_predicate,
)
from .model import (
    Cell,
    Geometry,
    GridKind,
    MineMask,
    OpenPattern,
    Opening,
    PatternKind,
    closed_cells,
    compute_clues,
    expand_pattern,
    neighbors,
    trivial_cells,
)

logger = logging.getLogger(__name__)

_MAX_ATTEMPTS = 256


class GenMode(Enum):
    BERNOULLI = "bernoulli"
    NO_TRIVIAL_ROWS = "no-trivial"
    NO_TRIVIAL_FULL = "no-trivial-full"


class PredicateError(ValueError):
    """Requested geometry/pattern pair does not guarantee unique solutions."""


@dataclass(frozen=True)
class GenConfig:
    geometry: Geometry
    pattern: OpenPattern
    p: Fraction | float = Fraction(1, 2)
    seed: int = 0
    mode: GenMode = GenMode.BERNOULLI
    allow_nonunique: bool = False

    def __post_init__(self) -> None:
        if not 0 <= self.p <= 1:
            raise ValueError(f"mine probability must be in [0, 1], got {self.p}")


def predicate_failure(geometry: Geometry, pattern: OpenPattern) -> str | None:
    """Why this geometry/pattern pair is not known to give unique solutions.

    Returns None when the matching uniqueness predicate holds.
    """
    m, n = geometry.rows, geometry.cols
    if pattern.kind is PatternKind.CHESS:
        if geometry.kind is GridKind.SQUARE_MOORE:
            if not chess_uniqueness_predicate(m, n):
                g = math.gcd(m + 1, n + 1)
                return (
                    f"gcd(m+1, n+1) must be 1 for the chess opening on a square "
                    f"grid; gcd({m + 1}, {n + 1}) = {g}"
                )
            return None
        if not triangle_uniqueness_predicate(m, n):
            bad = m + 1 if (m + 1) % 4 == 0 else n + 1
            return (
                f"m+1 and n+1 must not be divisible by 4 for the chess opening "
                f"on a triangle grid; 4 divides {bad}"
            )
        # The divisibility condition alone is unsound at small sizes (e.g.
        # 2x2 or 5x5 admit ambiguous mine sets), so back it with the exact
        # rank of the clue system, which is authoritative.
        opened = expand_pattern(geometry, pattern)
        matrix = build_clue_matrix(geometry, opened)
        if exact_rank(matrix) < len(matrix.col_cells):
            return (
                "the clue system for this triangle grid is rank-deficient; "
                "some mine sets would be ambiguous"
            )
        return None
    if pattern.kind is PatternKind.TOP_ROW:
        if m != 2:
            return "the top-row opening guarantees uniqueness only on 2-row grids"
        if not two_by_n_uniqueness_predicate(n):
            return (
                f"n+1 must not be divisible by 3 for the top-row opening; "
                f"3 divides {n + 1}"
            )
        return None
    return "no uniqueness predicate is known for explicit open patterns"


def _check(cfg: GenConfig) -> None:
    if cfg.allow_nonunique:
        return
    reason = predicate_failure(cfg.geometry, cfg.pattern)
    if reason is not None:
        raise PredicateError(reason)


def _bernoulli(rng: random.Random, p) -> int:
    return 1 if rng.random() < p else 0


def _finish(cfg: GenConfig, assignment: dict[Cell, int]) -> tuple[Opening, MineMask]:
    open_list = expand_pattern(cfg.geometry, cfg.pattern)
    mask = MineMask(cfg.geometry, open_list, assignment)
    opening = compute_clues(cfg.geometry, open_list, mask)
    return opening, mask


def generate(cfg: GenConfig) -> tuple[Opening, MineMask]:
    """Bernoulli filling: every closed cell independently mined with prob p."""
    _check(cfg)
    rng = random.Random(cfg.seed)
    open_list = expand_pattern(cfg.geometry, cfg.pattern)
    assignment = {
        c: _bernoulli(rng, cfg.p) for c in closed_cells(cfg.geometry, open_list)
    }
    return _finish(cfg, assignment)


def _partial_force(
    geometry: Geometry,
    open_set: frozenset[Cell],
    placed: dict[Cell, int],
    ref: Cell,
    target: Cell,
) -> int | None:
    """Forced value for ``target`` so the clue at open cell ``ref`` stays
    strictly between 0 and its closed degree.

    Only meaningful when ``target`` is the last undecided closed neighbor of
    ``ref``, which the row-by-row fill order guarantees at every call site.
    """
    closed_nbrs = [c for c in neighbors(geometry, ref) if c not in open_set]
    partial = sum(placed.get(c, 0) for c in closed_nbrs)
    if partial == 0:
        return 1
    if partial == len(closed_nbrs) - 1:
        return 0
    return None


def _fill_no_trivial(
    cfg: GenConfig, rng: random.Random, fix_last_row: bool
) -> dict[Cell, int]:
    geometry = cfg.geometry
    m, n = geometry.rows, geometry.cols
    open_set = frozenset(expand_pattern(geometry, cfg.pattern))
    placed: dict[Cell, int] = {}

    for j in range(1, n + 1):
        cell = (1, j)
        if cell in open_set:
            continue
        value = None
        if fix_last_row and m == 1 and j >= 2:
            value = _partial_force(geometry, open_set, placed, (1, j - 1), cell)
        placed[cell] = value if value is not None else _bernoulli(rng, cfg.p)

    for i in range(2, m + 1):
        last_row = fix_last_row and i == m
        for j in range(1, n + 1):
            cell = (i, j)
            if cell in open_set:
                continue
            above = _partial_force(geometry, open_set, placed, (i - 1, j), cell)
            left = None
            if last_row and j >= 2:
                left = _partial_force(geometry, open_set, placed, (i, j - 1), cell)
            if above is not None and left is not None and above != left:
                logger.debug(
                    "forcing conflict at %s: above-rule %d vs left-rule %d",
                    cell,
                    above,
                    left,
                )
            value = above if above is not None else left
            placed[cell] = value if value is not None else _bernoulli(rng, cfg.p)
    return placed


def generate_no_trivial(cfg: GenConfig) -> tuple[Opening, MineMask]:
    """Row-wise generation leaving trivial clues only in the last row."""
    _require_square_chess(cfg)
    _check(cfg)
    rng = random.Random(cfg.seed)
    return _finish(cfg, _fill_no_trivial(cfg, rng, fix_last_row=False))


def generate_no_trivial_full(cfg: GenConfig) -> tuple[Opening, MineMask]:
    """Generation with no trivial clues anywhere.

    Applies the last-row forcing rules and redraws the board (deterministic
    substream per attempt) while any trivial clue survives; the only cell
    the rules cannot protect is the open corner (m, n), so a redraw is
    rarely needed more than a few times.
    """
    _require_square_chess(cfg)
    _check(cfg)
    for attempt in range(_MAX_ATTEMPTS):
        rng = random.Random(f"{cfg.seed}:{attempt}") if attempt else random.Random(cfg.seed)
        placed = _fill_no_trivial(cfg, rng, fix_last_row=True)
        opening, mask = _finish(cfg, placed)
        if not trivial_cells(cfg.geometry, opening.open_cells, mask):
            return opening, mask
    raise RuntimeError(
        f"could not eliminate trivial clues in {_MAX_ATTEMPTS} attempts "
        f"(seed {cfg.seed}, {cfg.geometry.rows}x{cfg.geometry.cols})"
    )


def generate_with_mode(cfg: GenConfig) -> tuple[Opening, MineMask]:
    if cfg.mode is GenMode.BERNOULLI:
        return generate(cfg)
    if cfg.mode is GenMode.NO_TRIVIAL_ROWS:
        return generate_no_trivial(cfg)
    return generate_no_trivial_full(cfg)


def _require_square_chess(cfg: GenConfig) -> None:
    if (
        cfg.geometry.kind is not GridKind.SQUARE_MOORE
        or cfg.pattern.kind is not PatternKind.CHESS
    ):
        raise ValueError(
            "row-wise no-trivial generation is defined for the chess opening "
            "on the square grid"
        )
