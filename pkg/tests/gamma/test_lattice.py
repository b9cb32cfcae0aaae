from typing import List

import pytest
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form

from core.gamma import IntegerLattice, QuotientGroup, integer_kernel, smith_form, xgcd

"""整數格：HNF、成員證書、Smith 標準形與整數核"""


def sympy_diagonal(rows: List[List[int]]) -> List[int]:
    """以 sympy 的 Smith 標準形取非零對角元（取絕對值）"""

    snf: Matrix = smith_normal_form(Matrix(rows))
    size: int = min(snf.shape)
    return sorted(abs(int(snf[i, i])) for i in range(size) if snf[i, i] != 0)


# === 擴展歐幾里得 ===
@pytest.mark.parametrize("a, b", [(4, 6), (-4, 6), (7, -3), (0, 5), (12, 0), (-9, -6)])
def test_xgcd(a: int, b: int) -> None:
    x, y, g = xgcd(a, b)

    assert g >= 0
    assert x * a + y * b == g
    assert a % g == 0 and b % g == 0


# === HNF ===
def test_hnf_canonical_basis() -> None:
    lattice: IntegerLattice = IntegerLattice.from_rows(2, [[4, 0], [0, 6], [2, 3]])

    assert lattice.basis == [[2, 3], [0, 6]]
    assert lattice.rank == 2
    assert lattice.pivots == [0, 1]


def test_hnf_independent_of_generator_order() -> None:
    rows: List[List[int]] = [[2, 4, 6], [3, 1, 0], [0, 5, 5], [1, 1, 1]]
    first: IntegerLattice = IntegerLattice.from_rows(3, rows)
    second: IntegerLattice = IntegerLattice.from_rows(3, list(reversed(rows)))

    assert first == second
    for row in first.basis:
        pivot: int = next(c for c in row if c)
        assert pivot > 0  # pivot 為正


def test_dependent_rows_do_not_grow_rank() -> None:
    lattice: IntegerLattice = IntegerLattice.from_rows(2, [[2, 4]])

    assert lattice.add_vector([3, 6])  # gcd 列 (1, 2)
    assert lattice.basis == [[1, 2]]
    assert lattice.rank == 1
    assert not lattice.add_vector([-5, -10])  # 已在格中


def test_membership_certificate() -> None:
    lattice: IntegerLattice = IntegerLattice.from_rows(2, [[2, 3], [0, 6]])
    certificate = lattice.solve([6, 3])

    assert certificate == [3, -1]
    assert [1, 0] not in lattice
    assert [0, 0] in lattice
    assert lattice.solve([0, 3]) is None


def test_full_and_zero_lattices() -> None:
    assert [5, -7, 2] in IntegerLattice.full(3)
    assert IntegerLattice(3).rank == 0
    assert [0, 0, 0] in IntegerLattice(3)
    assert [0, 1, 0] not in IntegerLattice(3)
    with pytest.raises(ValueError):
        IntegerLattice(2).add_vector([1, 2, 3])


def test_sublattice_check() -> None:
    outer: IntegerLattice = IntegerLattice.from_rows(2, [[1, 0], [0, 2]])
    inner: IntegerLattice = IntegerLattice.from_rows(2, [[2, 0], [0, 4]])

    assert outer.contains_lattice(inner)
    assert not inner.contains_lattice(outer)


# === Smith 標準形 ===
@pytest.mark.parametrize(
    "rows",
    [
        [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
        [[2, 3], [0, 6]],
        [[6, 4], [4, 6], [2, 2]],
        [[0, 0, 3], [0, 5, 0]],
        [[12]],
    ],
)
def test_smith_form_matches_sympy(rows: List[List[int]]) -> None:
    diagonal, transform = smith_form(rows, len(rows[0]))

    assert sorted(diagonal) == sympy_diagonal(rows)
    for a, b in zip(diagonal, diagonal[1:]):
        assert b % a == 0  # d_i | d_{i+1}
    assert abs(Matrix(transform).det()) == 1  # V 么模


def test_smith_form_known_diagonal() -> None:
    diagonal, _ = smith_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], 3)

    assert diagonal == [2, 6, 12]


def test_smith_form_of_empty_matrix() -> None:
    diagonal, transform = smith_form([], 2)

    assert diagonal == []
    assert transform == [[1, 0], [0, 1]]


# === 商群 ===
def test_quotient_orders() -> None:
    quotient: QuotientGroup = QuotientGroup.build(
        IntegerLattice.full(2), IntegerLattice.from_rows(2, [[2, 3], [0, 6]])
    )

    assert quotient.invariant_factors == [12]
    assert quotient.order == 12
    assert quotient.element_order([1, 0]) == 4  # 4·(1,0) = 2·(2,3) − (0,6)
    assert quotient.element_order([0, 1]) == 6
    assert quotient.element_order([2, 3]) == 1


def test_quotient_with_free_part() -> None:
    quotient: QuotientGroup = QuotientGroup.build(
        IntegerLattice.full(2), IntegerLattice.from_rows(2, [[2, 0]])
    )

    assert quotient.invariant_factors == [2]
    assert quotient.free_rank == 1
    assert quotient.order == 0
    assert quotient.element_order([1, 0]) == 2
    assert quotient.element_order([0, 1]) == 0  # 無限階


def test_quotient_requires_inclusion() -> None:
    with pytest.raises(ValueError):
        QuotientGroup.build(IntegerLattice.from_rows(2, [[2, 0], [0, 2]]), IntegerLattice.full(2))


def test_quotient_coordinates_respect_inner_lattice() -> None:
    outer: IntegerLattice = IntegerLattice.full(3)
    inner: IntegerLattice = IntegerLattice.from_rows(3, [[2, 0, 0], [0, 4, 0], [1, 1, 2]])
    quotient: QuotientGroup = QuotientGroup.build(outer, inner)

    assert quotient.order == 16
    for row in inner.basis:
        assert all(c == 0 for c in quotient.coordinates(row))  # 內格在商群中為零
    x: List[int] = [1, 2, 3]
    shifted: List[int] = [a + b for a, b in zip(x, inner.basis[0])]
    assert quotient.coordinates(x) == quotient.coordinates(shifted)


# === 整數核 ===
def test_integer_kernel_mod_two() -> None:
    # a + b ≡ 0 (mod 2)
    assert integer_kernel([[1], [1]], [2]) == [[1, 1], [0, 2]]


def test_integer_kernel_over_integers() -> None:
    # a + 2b = 0
    assert integer_kernel([[1], [2]], [0]) == [[2, -1]]


def test_integer_kernel_mixed_moduli() -> None:
    columns: List[List[int]] = [[1, 0], [1, 2], [0, 1]]
    moduli: List[int] = [2, 4]
    kernel: List[List[int]] = integer_kernel(columns, moduli)

    for row in kernel:
        for j, d in enumerate(moduli):
            assert sum(a * col[j] for a, col in zip(row, columns)) % d == 0
    lattice: IntegerLattice = IntegerLattice.from_rows(3, kernel)
    assert [2, 0, 0] in lattice
    assert [1, 1, 2] in lattice  # (1,0)+(1,2)+2·(0,1) = (2,4)
    assert [0, 0, 1] not in lattice
