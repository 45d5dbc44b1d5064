"""Golden fixture tables: three published example puzzles and their solutions.

Table 1 is a 4x3 grid with the even-parity chess opening; tables 2 and 3 are
5x6 grids whose open set is the odd-parity chess complement, represented as
an explicit pattern.
"""

from papersweeper.model import Geometry, GridKind, MineMask, OpenPattern, Opening

SQUARE = GridKind.SQUARE_MOORE


def _odd_cells(rows, cols):
    return tuple(
        (i, j)
        for i in range(1, rows + 1)
        for j in range(1, cols + 1)
        if (i + j) % 2 == 1
    )


GEOMETRY_1 = Geometry(SQUARE, 4, 3)
PATTERN_1 = OpenPattern.chess()
CLUES_1 = {(1, 1): 1, (1, 3): 2, (2, 2): 2, (3, 1): 1, (3, 3): 1, (4, 2): 1}
MINES_1 = frozenset({(1, 2), (2, 3), (4, 1)})
GRID_1 = "1 * 2\n- 2 *\n1 - 1\n* 1 -\n"

GEOMETRY_23 = Geometry(SQUARE, 5, 6)
PATTERN_23 = OpenPattern.explicit(_odd_cells(5, 6))

CLUES_2 = {
    (1, 2): 1, (1, 4): 1, (1, 6): 1,
    (2, 1): 2, (2, 3): 2, (2, 5): 1,
    (3, 2): 3, (3, 4): 2, (3, 6): 1,
    (4, 1): 1, (4, 3): 3, (4, 5): 2,
    (5, 2): 1, (5, 4): 2, (5, 6): 1,
}
MINES_2 = frozenset({(1, 5), (2, 2), (3, 1), (3, 3), (4, 4), (4, 6), (5, 3)})
GRID_2 = (
    "- 1 - 1 * 1\n"
    "2 * 2 - 1 -\n"
    "* 3 * 2 - 1\n"
    "1 - 3 * 2 *\n"
    "- 1 * 2 - 1\n"
)

CLUES_3 = {
    (1, 2): 1, (1, 4): 1, (1, 6): 1,
    (2, 1): 1, (2, 3): 1, (2, 5): 1,
    (3, 2): 1, (3, 4): 1, (3, 6): 1,
    (4, 1): 1, (4, 3): 1, (4, 5): 2,
    (5, 2): 1, (5, 4): 1, (5, 6): 1,
}
MINES_3 = frozenset({(1, 5), (2, 2), (4, 4), (4, 6), (5, 1)})
GRID_3 = (
    "- 1 - 1 * 1\n"
    "1 * 1 - 1 -\n"
    "- 1 - 1 - 1\n"
    "1 - 1 * 2 *\n"
    "* 1 - 1 - 1\n"
)


def opening(geometry, pattern, clues):
    from papersweeper.model import expand_pattern

    return Opening(geometry, expand_pattern(geometry, pattern), clues)


def mask(geometry, pattern, mines):
    from papersweeper.model import expand_pattern

    return MineMask.from_mines(geometry, expand_pattern(geometry, pattern), mines)


def all_tables():
    """(opening, expected mask, rendered solution grid) for the three fixtures."""
    return [
        (
            opening(GEOMETRY_1, PATTERN_1, CLUES_1),
            mask(GEOMETRY_1, PATTERN_1, MINES_1),
            GRID_1,
        ),
        (
            opening(GEOMETRY_23, PATTERN_23, CLUES_2),
            mask(GEOMETRY_23, PATTERN_23, MINES_2),
            GRID_2,
        ),
        (
            opening(GEOMETRY_23, PATTERN_23, CLUES_3),
            mask(GEOMETRY_23, PATTERN_23, MINES_3),
            GRID_3,
        ),
    ]
