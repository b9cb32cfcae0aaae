import numpy as np
import pytest

from core.groups import (
    ConjugacyData,
    FiniteMatrixGroup,
    class_count_g,
    class_count_h,
    class_count_l,
    conjugacy_classes,
    count_commuting_pairs,
    unitriangular_group,
)

"""共軛類、冪映射與 Burnside 計數"""


# === 類數 ===
def test_class_counts_p2(h_group, l_group, g_group) -> None:
    assert conjugacy_classes(h_group).num_classes == 5  # p^2+p-1
    assert conjugacy_classes(l_group).num_classes == 14  # 2p^3-p
    assert conjugacy_classes(g_group).num_classes == 16


@pytest.mark.parametrize("p", [2, 3])
def test_closed_forms(p: int) -> None:
    assert conjugacy_classes(unitriangular_group(3, p)).num_classes == class_count_h(p)


def test_closed_form_values() -> None:
    assert (class_count_h(2), class_count_l(2), class_count_g(2)) == (5, 14, 16)
    assert (class_count_h(3), class_count_l(3), class_count_g(3)) == (11, 51, 57)


@pytest.mark.slow
def test_class_count_u43() -> None:
    assert conjugacy_classes(unitriangular_group(4, 3)).num_classes == 57


# === 分割與 Burnside ===
@pytest.mark.parametrize("fixture_name", ["h_group", "l_group", "g_group"])
def test_partition_and_burnside(fixture_name: str, request) -> None:
    group: FiniteMatrixGroup = request.getfixturevalue(fixture_name)
    data: ConjugacyData = conjugacy_classes(group)

    assert int(data.sizes.sum()) == group.order
    assert np.all(data.class_of >= 0)
    assert data.classes[0].representative == 0  # 單位元類
    assert count_commuting_pairs(group) == data.num_classes * group.order


def test_commuting_pairs(h_group, l_group) -> None:
    assert count_commuting_pairs(l_group) == 448
    assert count_commuting_pairs(h_group) == 40
    assert count_commuting_pairs(unitriangular_group(1, 2)) == 1


def test_representatives_are_class_minima(g_group) -> None:
    data: ConjugacyData = conjugacy_classes(g_group)

    for cls in data.classes:
        assert cls.representative == int(cls.members.min())


# === 冪映射 ===
@pytest.mark.parametrize("fixture_name", ["h_group", "l_group", "g_group"])
def test_power_map_exhaustive(fixture_name: str, request) -> None:
    group: FiniteMatrixGroup = request.getfixturevalue(fixture_name)
    data: ConjugacyData = conjugacy_classes(group)

    for k in range(group.exponent):
        for idx, cls in enumerate(data.classes):
            images = {int(data.class_of[group.power(int(g), k)]) for g in cls.members}
            assert images == {data.power_class(idx, k)}


def test_inverse_class(h_group) -> None:
    data: ConjugacyData = conjugacy_classes(h_group)

    # D_8 的每個元素都與其反元素共軛
    assert data.inverse_class.tolist() == list(range(data.num_classes))


def test_centralizer_orders(h_group) -> None:
    data: ConjugacyData = conjugacy_classes(h_group)

    assert sorted(data.centralizer_orders.tolist()) == [4, 4, 4, 8, 8]
