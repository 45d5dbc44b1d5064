import math
import random
from fractions import Fraction

import pytest

from papersweeper.linalg import (
    Inconsistent,
    Underdetermined,
    build_clue_matrix,
    chess_spectrum,
    chess_uniqueness_predicate,
    exact_determinant,
    exact_rank,
    exact_solve,
    kernel_basis,
    triangle_multiplier,
    triangle_multiplier_min,
    triangle_spectrum,
    triangle_uniqueness_predicate,
    two_by_n_uniqueness_predicate,
)
from papersweeper.model import (
    Geometry,
    GridKind,
    MineMask,
    OpenPattern,
    compute_clues,
    expand_pattern,
)

SQ = GridKind.SQUARE_MOORE
TR = GridKind.TRIANGLE_12


def chess_matrix(m, n, kind=SQ):
    g = Geometry(kind, m, n)
    return build_clue_matrix(g, expand_pattern(g, OpenPattern.chess()))


def top_row_matrix(n):
    g = Geometry(SQ, 2, n)
    return build_clue_matrix(g, expand_pattern(g, OpenPattern.top_row()))


def tridiagonal_ones(n):
    return [
        [1 if abs(r - c) <= 1 else 0 for c in range(n)] for r in range(n)
    ]


def test_clue_matrix_2x2_chess():
    e = chess_matrix(2, 2)
    assert e.entries == ((1, 1), (1, 1))
    assert e.row_cells == ((1, 1), (2, 2))
    assert e.col_cells == ((1, 2), (2, 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_clue_matrix_top_row_is_tridiagonal_ones(n):
    e = top_row_matrix(n)
    assert [list(r) for r in e.entries] == tridiagonal_ones(n)


def test_clue_matrix_4x3_interior_row():
    e = chess_matrix(4, 3)
    r = e.row_cells.index((2, 2))
    ones = {e.col_cells[c] for c, v in enumerate(e.entries[r]) if v}
    assert ones == {(1, 2), (2, 1), (2, 3), (3, 2)}
    assert sum(e.entries[r]) == 4
    # every chess row has between 2 and 4 ones
    assert all(2 <= sum(row) <= 4 for row in e.entries)


def test_exact_rank_examples():
    assert exact_rank(chess_matrix(2, 2)) == 1
    assert exact_rank(chess_matrix(4, 3)) == 6
    assert exact_rank(top_row_matrix(5)) == 4


@pytest.mark.parametrize("n", range(1, 13))
def test_tridiagonal_determinant_recurrence(n):
    # Independent oracle: D_n = D_{n-1} - D_{n-2}, D_0 = 1, D_1 = 1.
    d = [1, 1]
    for _ in range(2, n + 1):
        d.append(d[-1] - d[-2])
    det = exact_determinant(tridiagonal_ones(n))
    assert det == d[n]
    assert (det == 0) == (n % 3 == 2)
    assert (det != 0) == two_by_n_uniqueness_predicate(n)


def test_exact_solve_first_table():
    from golden import CLUES_1, MINES_1

    e = chess_matrix(4, 3)
    f = [CLUES_1[a] for a in e.row_cells]
    x = exact_solve(e, f)
    assert isinstance(x, tuple)
    got = {c for c, v in zip(e.col_cells, x) if v == 1}
    assert got == MINES_1
    assert all(v in (0, 1) for v in x)


def test_exact_solve_zero_rhs_full_rank():
    e = chess_matrix(4, 3)
    assert exact_solve(e, [0] * 6) == tuple([Fraction(0)] * 6)


def test_exact_solve_underdetermined_and_inconsistent():
    e = chess_matrix(2, 2)
    assert exact_solve(e, [1, 1]) == Underdetermined(kernel_dim=1)
    assert exact_solve(e, [1, 2]) == Inconsistent()


def test_kernel_basis_examples():
    assert kernel_basis(chess_matrix(4, 3)) == []
    (v,) = kernel_basis(chess_matrix(2, 2))
    assert v[0] != 0 and v[1] == -v[0]
    (w,) = kernel_basis(top_row_matrix(5))
    scale = w[0]
    assert scale != 0
    assert tuple(x / scale for x in w) == (1, -1, 0, 1, -1)


def test_kernel_dimension_matches_rank():
    rng = random.Random(4)
    for _ in range(50):
        nr = rng.randint(1, 6)
        nc = rng.randint(1, 6)
        rows = [[rng.randint(-2, 2) for _ in range(nc)] for _ in range(nr)]

        class M:
            entries = tuple(tuple(r) for r in rows)
            shape = (nr, nc)

        assert len(kernel_basis(M)) == nc - exact_rank(rows)
        # kernel vectors actually lie in the null space
        for v in kernel_basis(M):
            for r in rows:
                assert sum(a * b for a, b in zip(r, v)) == 0


def test_chess_predicate_examples():
    assert chess_uniqueness_predicate(4, 3)
    assert not chess_uniqueness_predicate(2, 2)
    assert not chess_uniqueness_predicate(5, 5)


def test_two_by_n_predicate_examples():
    assert two_by_n_uniqueness_predicate(3)
    assert not two_by_n_uniqueness_predicate(5)
    assert not two_by_n_uniqueness_predicate(2)
    assert exact_rank(top_row_matrix(2)) == 1


def test_triangle_predicate_examples():
    assert triangle_uniqueness_predicate(5, 5)
    assert not triangle_uniqueness_predicate(3, 5)
    assert triangle_uniqueness_predicate(4, 6)


def test_chess_spectrum_examples():
    assert chess_spectrum(2, 2).zero_witnesses == ((1, 2), (2, 1))
    assert not chess_spectrum(4, 3).has_zero
    assert (3, 2) in chess_spectrum(5, 3).zero_witnesses


def test_predicate_rank_equivalence_small():
    # The coprimality predicate implies full column rank everywhere; the
    # converse holds exactly on the mn-even grids where the clue matrix is
    # square. (On odd-mn grids the matrix is (c+1) x c and can have full
    # column rank even when gcd(m+1, n+1) > 1, e.g. 1x3 or 3x5.)
    for m in range(1, 8):
        for n in range(m, 8):
            e = chess_matrix(m, n)
            full = exact_rank(e) == len(e.col_cells)
            if chess_uniqueness_predicate(m, n):
                assert full, (m, n)
            if (m * n) % 2 == 0:
                assert full == chess_uniqueness_predicate(m, n), (m, n)


def test_predicate_spectrum_equivalence():
    for m in range(1, 31):
        for n in range(m, 31):
            assert chess_spectrum(m, n).has_zero == (math.gcd(m + 1, n + 1) > 1)


def test_solve_round_trip_random_masks():
    rng = random.Random(11)
    for m, n in [(4, 3), (2, 3), (4, 5), (3, 4)]:
        e = chess_matrix(m, n)
        nr, nc = e.shape
        for _ in range(20):
            x = [rng.randint(0, 1) for _ in range(nc)]
            f = [sum(a * b for a, b in zip(row, x)) for row in e.entries]
            assert exact_solve(e, f) == tuple(Fraction(v) for v in x)


def test_triangle_multiplier_3x3_zero_at_3_1():
    assert triangle_multiplier(3, 3, 3, 1) == pytest.approx(0.0, abs=1e-12)
    assert triangle_multiplier_min(3, 3) == pytest.approx(0.0, abs=1e-12)
    # Zeros require cos 2y = 0 (l odd with n+1 = 4) and x + y = pi (k+l = 4):
    # exactly (3,1) and (1,3) on this grid.
    rep = triangle_spectrum(3, 3)
    assert set(rep.zero_witnesses) == {(3, 1), (1, 3)}


def test_triangle_multiplier_4x6_strictly_positive():
    assert triangle_multiplier_min(4, 6) > 1e-9


def test_triangle_spectrum_7x7_zero_witnesses():
    rep = triangle_spectrum(7, 7)
    assert rep.has_zero
    assert set(rep.zero_witnesses) == {(2, 6), (6, 2)}
    assert rep.min_abs_multiplier == pytest.approx(0.0, abs=1e-12)


def test_triangle_multiplier_consistency_up_to_12():
    for m in range(1, 13):
        for n in range(m, 13):
            v = triangle_multiplier_min(m, n)
            if (m + 1) % 4 == 0 and (n + 1) % 4 == 0:
                assert v == pytest.approx(0.0, abs=1e-12), (m, n)
            else:
                assert v > 1e-9, (m, n)


def test_triangle_rank_agrees_with_brute_force_small():
    # The divisibility predicate is NOT reliable at small sizes: e.g. on the
    # 2x2 triangle grid both open cells see both closed cells, so {(1,2)}
    # and {(2,1)} are indistinguishable even though neither 3 is divisible
    # by 4. Exact rank and exhaustive enumeration are the authorities, and
    # they must agree with each other.
    from papersweeper.solver import find_counterexample

    for m in range(1, 7):
        for n in range(m, 7):
            e = chess_matrix(m, n, kind=TR)
            if len(e.col_cells) > 16:
                continue
            g = Geometry(TR, m, n)
            full = exact_rank(e) == len(e.col_cells)
            ce = find_counterexample(g, OpenPattern.chess(), budget=1 << 17)
            assert full == (ce is None), (m, n)


def test_triangle_predicate_has_known_false_positives():
    # Documented defect of the closed-form triangle criterion: these sizes
    # satisfy the divisibility hypothesis yet admit ambiguous mine sets.
    for m, n in [(2, 2), (2, 4), (4, 5), (5, 5)]:
        assert triangle_uniqueness_predicate(m, n)
        e = chess_matrix(m, n, kind=TR)
        assert exact_rank(e) < len(e.col_cells), (m, n)


def test_clue_matrix_consistency_with_compute_clues():
    # E @ x_M equals the clue vector of compute_clues for random masks.
    rng = random.Random(7)
    for kind in (SQ, TR):
        g = Geometry(kind, 4, 5)
        a = expand_pattern(g, OpenPattern.chess())
        e = build_clue_matrix(g, a)
        for _ in range(10):
            bits = {c: rng.randint(0, 1) for c in e.col_cells}
            mask = MineMask(g, a, bits)
            clues = compute_clues(g, a, mask).clues
            for row, cell in zip(e.entries, e.row_cells):
                assert sum(v * bits[c] for v, c in zip(row, e.col_cells)) == clues[cell]
