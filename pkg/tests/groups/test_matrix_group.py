import numpy as np
import pytest

from core.groups import (
    FiniteMatrixGroup,
    direct_product,
    elementary_matrix,
    format_group_text,
    generated_group,
    parse_group_text,
    unitriangular_group,
)
from core.groups import matrix_group
from core.utils import EnumerationBudgetError

"""單位上三角群的枚舉、編碼順序與文字格式"""


# === 枚舉 ===
@pytest.mark.parametrize("n, p, expected", [(3, 2, 8), (4, 2, 64), (2, 2, 2), (1, 2, 1), (3, 3, 27)])
def test_unitriangular_order(n: int, p: int, expected: int) -> None:
    group: FiniteMatrixGroup = unitriangular_group(n, p)

    assert group.order == expected
    assert len(group.generators) == n * (n - 1) // 2  # E_{i,j}, i<j
    assert len(group.closure(group.generators)) == expected


def test_unitriangular_budget() -> None:
    with pytest.raises(EnumerationBudgetError):
        unitriangular_group(8, 3)  # 3^28 個元素
    with pytest.raises(EnumerationBudgetError):
        unitriangular_group(4, 2, budget=63)


def test_unitriangular_rejects_non_prime() -> None:
    with pytest.raises(ValueError):
        unitriangular_group(3, 4)


def test_elements_are_unitriangular(g_group: FiniteMatrixGroup) -> None:
    mats: np.ndarray = g_group.elements.astype(np.int64)

    assert np.all(np.tril(mats, -1) == 0)
    assert np.all(np.diagonal(mats, axis1=1, axis2=2) == 1)


def test_identity_first_and_inverses(g_group: FiniteMatrixGroup) -> None:
    assert np.array_equal(g_group.matrix(0), np.eye(4, dtype=np.uint8))

    idx: np.ndarray = np.arange(g_group.order)
    assert np.all(g_group.table[idx, g_group.inverses] == 0)
    assert np.all(g_group.table[g_group.inverses, idx] == 0)


def test_table_matches_matrix_product(h_group: FiniteMatrixGroup) -> None:
    for i in range(h_group.order):
        for j in range(h_group.order):
            product: np.ndarray = (
                h_group.matrix(i).astype(np.int64) @ h_group.matrix(j).astype(np.int64)
            ) % 2
            assert h_group.index_of(product) == h_group.multiply(i, j)


def test_element_orders(h_group: FiniteMatrixGroup) -> None:
    e12e23: int = h_group.index_of(elementary_matrix(3, 1, 2) @ elementary_matrix(3, 2, 3))

    assert h_group.element_order(e12e23) == 4
    assert h_group.exponent == 4
    assert sorted(h_group.element_orders.tolist()) == [1, 2, 2, 2, 2, 2, 4, 4]  # D_8


def test_power_negative(h_group: FiniteMatrixGroup) -> None:
    x: int = h_group.index_of(elementary_matrix(3, 1, 2) @ elementary_matrix(3, 2, 3))

    assert h_group.power(x, -1) == int(h_group.inverses[x])
    assert h_group.power(x, 4) == 0


# === 其他構造 ===
def test_generated_group_matches_enumeration() -> None:
    gens = [elementary_matrix(4, 1, 2), elementary_matrix(4, 2, 3), elementary_matrix(4, 3, 4)]
    group: FiniteMatrixGroup = generated_group(2, 4, gens, "U4 by simple roots")

    assert group.order == 64
    assert np.array_equal(group.keys, unitriangular_group(4, 2).keys)


def test_direct_product(h_group: FiniteMatrixGroup) -> None:
    c2: FiniteMatrixGroup = unitriangular_group(2, 2)
    product: FiniteMatrixGroup = direct_product(c2, h_group)

    assert product.order == 16
    assert product.n == 5
    assert len(product.center_indices) == 4  # C_2 × Z(D_8)


def test_greedy_generators_refuse_large_groups(h_group: FiniteMatrixGroup, monkeypatch) -> None:
    monkeypatch.setattr(matrix_group, "GREEDY_GENERATOR_LIMIT", 4)

    with pytest.raises(EnumerationBudgetError):
        FiniteMatrixGroup(2, 3, h_group.elements, "copy")
    given: FiniteMatrixGroup = FiniteMatrixGroup(2, 3, h_group.elements, "copy", generators=[1, 2])
    assert given.generators == [1, 2]


def test_greedy_generators_generate(h_group: FiniteMatrixGroup) -> None:
    copy: FiniteMatrixGroup = FiniteMatrixGroup(2, 3, h_group.elements, "copy")

    assert copy.generators
    assert len(copy.closure(copy.generators)) == 8


def test_group_text_format() -> None:
    text: str = "2 3\n110010001\n100011001\n"
    group: FiniteMatrixGroup = parse_group_text(text, name="d8")

    assert group.order == 8
    assert parse_group_text(format_group_text(group)).order == 8


def test_group_text_rejects_bad_line() -> None:
    with pytest.raises(ValueError):
        parse_group_text("2 3\n11001000\n")
