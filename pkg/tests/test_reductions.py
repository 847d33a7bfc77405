"""The reduction chain: block views, circulant collapse, closed-form matrices."""

import pytest

from volentropy.core import IntMatrix, IntPolynomial
from volentropy.markov import (
    BlockKind,
    PresentationSpec,
    build_block,
    build_markov_from_blocks,
)
from volentropy.reductions import (
    BlockView,
    check_J_commutation,
    compacted_matrix,
    divided_compacted_matrix,
    is_block_circulant,
    is_disoriented_block_circulant,
    sum_first_block_row,
    super_compacted_matrix,
)
from volentropy.spectral import char_poly_exact

C3 = IntMatrix(
    [
        [0, 1, 1, 0, 0],
        [1, 1, 1, 2, 2],
        [1, 1, 1, 1, 1],
        [2, 2, 1, 1, 1],
        [0, 0, 1, 1, 0],
    ]
)

DC3 = IntMatrix(
    [
        [0, 1, 1, 1, 0, 0],
        [1, 1, 1, 1, 2, 2],
        [1, 1, 1, 0, 0, 0],
        [0, 0, 0, 1, 1, 1],
        [2, 2, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 0],
    ]
)

SC3 = IntMatrix([[0, 1, 2], [3, 3, 2], [1, 1, 1]])


def plus_form(n: int) -> PresentationSpec:
    return PresentationSpec(n, True, formal=True)


# ---------------------------------------------------------------- BlockView

def test_block_view_validation():
    m = IntMatrix.identity(6)
    BlockView(m, 2, 3)
    BlockView(m, 3, 2)
    BlockView(m, 6, 1)
    with pytest.raises(ValueError):
        BlockView(m, 4, 2)
    with pytest.raises(ValueError):
        BlockView(m, 0, 6)


def test_block_view_extraction():
    m = IntMatrix([[1, 2, 3, 4], [5, 6, 7, 8], [9, 10, 11, 12], [13, 14, 15, 16]])
    v = BlockView(m, 2, 2)
    assert v.block(1, 1) == IntMatrix([[1, 2], [5, 6]])
    assert v.block(2, 1) == IntMatrix([[9, 10], [13, 14]])
    assert v.block(2, 2) == IntMatrix([[11, 12], [15, 16]])
    with pytest.raises(IndexError):
        v.block(3, 1)


# ---------------------------------------------------------------- circulant

@pytest.mark.parametrize("n", range(3, 8))
def test_plus_form_is_block_circulant(n):
    m = build_markov_from_blocks(plus_form(n))
    assert is_block_circulant(BlockView(m, 2 * n, 2 * n - 1))


def test_minus_form_is_not_block_circulant():
    m = build_markov_from_blocks(PresentationSpec(3, False))
    assert not is_block_circulant(BlockView(m, 6, 5))


def test_unequal_diagonal_blocks_are_not_circulant():
    # Block diagonal diag(I, 2I): the circulant continuation of the first
    # block row (I 0) demands I again at block (2, 2), but 2I sits there.
    rows = [[0] * 6 for _ in range(6)]
    for i in range(3):
        rows[i][i] = 1
        rows[3 + i][3 + i] = 2
    assert not is_block_circulant(BlockView(IntMatrix(rows), 2, 3))
    # Equal diagonal blocks, by contrast, do continue the template.
    assert is_block_circulant(BlockView(IntMatrix.identity(6), 2, 3))
    # ...but as 1x1 blocks of size 6 it trivially is.
    assert is_block_circulant(BlockView(IntMatrix.identity(6), 1, 6))


@pytest.mark.parametrize("n", range(3, 10))
def test_first_block_row_sums_to_compacted(n):
    m = build_markov_from_blocks(plus_form(n))
    assert sum_first_block_row(BlockView(m, 2 * n, 2 * n - 1)) == compacted_matrix(n)


@pytest.mark.parametrize("n", range(3, 10))
def test_minus_first_block_row_sums_to_compacted(n):
    # Block row 1 is unreflected in the reversing form, so the collapse
    # lands on the same compacted matrix.
    m = build_markov_from_blocks(PresentationSpec(n, False))
    assert sum_first_block_row(BlockView(m, 2 * n, 2 * n - 1)) == compacted_matrix(n)


# ---------------------------------------------------------------- disoriented

@pytest.mark.parametrize("n", range(3, 8))
def test_minus_form_is_disoriented_with_plus_parallelization(n):
    m = build_markov_from_blocks(PresentationSpec(n, False))
    ok, para = is_disoriented_block_circulant(BlockView(m, 2 * n, 2 * n - 1))
    assert ok
    assert para == build_markov_from_blocks(plus_form(n))


def test_plus_form_is_disoriented_with_itself():
    m = build_markov_from_blocks(PresentationSpec(4, True))
    ok, para = is_disoriented_block_circulant(BlockView(m, 8, 7))
    assert ok
    assert para == m


def test_disoriented_rejects_scrambled_matrix():
    m = build_markov_from_blocks(PresentationSpec(3, False))
    rows = [list(r) for r in m.rows]
    rows[7], rows[8] = rows[8], rows[7]  # break one block row's structure
    ok, para = is_disoriented_block_circulant(BlockView(IntMatrix(rows), 6, 5))
    assert not ok
    assert para is None


def test_check_J_commutation():
    for n in range(3, 11):
        assert check_J_commutation(compacted_matrix(n))
    assert check_J_commutation(build_block(BlockKind.J(), 5))
    assert check_J_commutation(IntMatrix.identity(4))
    assert not check_J_commutation(build_block(BlockKind.U(1), 3))


# ---------------------------------------------------------------- closed forms

def test_compacted_rank_3_pinned():
    assert compacted_matrix(3) == C3


def test_compacted_rank_4_pinned():
    assert compacted_matrix(4) == IntMatrix(
        [
            [0, 1, 0, 0, 0, 0, 0],
            [0, 0, 1, 1, 0, 0, 0],
            [2, 2, 2, 2, 3, 3, 3],
            [1, 1, 1, 1, 1, 1, 1],
            [3, 3, 3, 2, 2, 2, 2],
            [0, 0, 0, 1, 1, 0, 0],
            [0, 0, 0, 0, 0, 1, 0],
        ]
    )


@pytest.mark.parametrize("n", range(3, 11))
def test_compacted_equals_block_sum(n):
    s = 2 * n - 1
    total = (
        build_block(BlockKind.T(), s)
        + build_block(BlockKind.JTJ(), s)
        + build_block(BlockKind.U(n), s)
        + (n - 2) * (build_block(BlockKind.U(n - 1), s) + build_block(BlockKind.U(n + 1), s))
    )
    assert total == compacted_matrix(n)


def test_divided_rank_3_pinned():
    assert divided_compacted_matrix(3) == DC3


@pytest.mark.parametrize("n", range(3, 9))
def test_divided_middle_rows_are_indicators(n):
    d = divided_compacted_matrix(n)
    assert d.rows[n - 1] == (1,) * n + (0,) * n
    assert d.rows[n] == (0,) * n + (1,) * n


@pytest.mark.parametrize("n", range(3, 9))
def test_divided_is_centrally_symmetric(n):
    d = divided_compacted_matrix(n)
    j = build_block(BlockKind.J(), 2 * n)
    assert j * d * j == d


@pytest.mark.parametrize("n", range(3, 9))
def test_divided_collapses_back_to_compacted(n):
    # The divided matrix duplicates the compacted middle column and splits
    # the compacted middle row: dropping one duplicate column and summing the
    # two indicator rows recovers the compacted matrix exactly.
    d = divided_compacted_matrix(n)
    c = compacted_matrix(n)

    def drop_middle_column(row: tuple[int, ...]) -> list[int]:
        return list(row[:n]) + list(row[n + 1 :])

    for i in range(1, 2 * n):
        expected = [c.entry(i, j) for j in range(1, 2 * n)]
        if i == n:
            summed = tuple(a + b for a, b in zip(d.rows[n - 1], d.rows[n]))
            assert drop_middle_column(summed) == expected
        else:
            di = i - 1 if i < n else i  # 0-based row in d, skipping the split pair
            row = d.rows[di]
            assert row[n - 1] == row[n], (n, i)  # duplicated middle column
            assert drop_middle_column(row) == expected


def test_supercompacted_rank_3_pinned():
    assert super_compacted_matrix(3) == SC3


def test_supercompacted_rank_4_pinned():
    assert super_compacted_matrix(4) == IntMatrix(
        [[0, 1, 0, 0], [0, 0, 1, 2], [5, 5, 5, 4], [1, 1, 1, 1]]
    )


@pytest.mark.parametrize("n", range(3, 11))
def test_fold_identity(n):
    # D11 + D12 * J: folding the divided matrix along its central symmetry.
    d = divided_compacted_matrix(n)
    view = BlockView(d, 2, n)
    j = build_block(BlockKind.J(), n)
    assert view.block(1, 1) + view.block(1, 2) * j == super_compacted_matrix(n)


@pytest.mark.parametrize("n", range(3, 11))
def test_conjugating_by_central_flip_pairs_the_blocks(n):
    # With Z = diag(I, J), the matrix Z * DC * Z has equal diagonal blocks
    # D11 and equal off-diagonal blocks D12 * J.
    d = divided_compacted_matrix(n)
    view = BlockView(d, 2, n)
    ident = IntMatrix.identity(n)
    j = build_block(BlockKind.J(), n)
    z_rows = []
    for i in range(n):
        z_rows.append(list(ident.rows[i]) + [0] * n)
    for i in range(n):
        z_rows.append([0] * n + list(j.rows[i]))
    z = IntMatrix(z_rows)
    conj = z * d * z
    cview = BlockView(conj, 2, n)
    d11, d12 = view.block(1, 1), view.block(1, 2)
    assert cview.block(1, 1) == d11
    assert cview.block(2, 2) == d11
    assert cview.block(1, 2) == d12 * j
    assert cview.block(2, 1) == d12 * j


@pytest.mark.parametrize("n", range(3, 11))
def test_spectrum_split_identity(n):
    lhs = char_poly_exact(divided_compacted_matrix(n))
    rhs = char_poly_exact(compacted_matrix(n)) * IntPolynomial([-1, 1])
    assert lhs == rhs


def test_closed_forms_reject_rank_2():
    for builder in (compacted_matrix, divided_compacted_matrix, super_compacted_matrix):
        with pytest.raises(ValueError):
            builder(2)
