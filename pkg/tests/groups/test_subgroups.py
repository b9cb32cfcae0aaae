from typing import List

import numpy as np
import pytest

from core.groups import (
    FiniteMatrixGroup,
    build_group,
    center,
    centralizer,
    elementary_abelian_subgroups,
    elementary_matrix,
    group_isomorphic,
    build_l_group,
    named_subgroup,
    parse_subgroup_key,
    regularity_bounds,
    center_p_rank,
    direct_product,
)
from core.utils import UnknownSubgroupError

"""具名子群、中心化子、基本交換子群、同構判定與正則性上界"""


# === 具名子群 ===
@pytest.mark.parametrize(
    "label, order",
    [
        ("L", 32),
        ("Z", 2),
        ("C2_4G", 16),
        ("C2_3G", 8),
        ("C2_3G_0", 8),
        ("C2_3G_1", 8),
        ("C2_3G_inf", 8),
        ("C2_2G", 4),
        ("H0", 8),
        ("Hinf", 8),
        ("I0", 8),
        ("Iinf", 8),
        ("N(0,1)", 8),
        ("N(1,1)", 8),
        ("L(1,1)", 32),
    ],
)
def test_named_subgroups_of_g(g_group: FiniteMatrixGroup, label: str, order: int) -> None:
    sub: FiniteMatrixGroup = named_subgroup(g_group, label)

    assert sub.order == order
    g_group.index_of_keys(sub.keys)  # 全部元素都在 G 裡


def test_elementary_abelian_named_subgroups_have_basis(g_group: FiniteMatrixGroup) -> None:
    for label, rank in [("C2_4G", 4), ("C2_3G", 3), ("C2_3G_1", 3), ("C2_2G", 2)]:
        sub: FiniteMatrixGroup = named_subgroup(g_group, label)
        assert sub.is_abelian and sub.exponent == 2
        assert len(sub.basis) == rank
        assert sub.basis_coordinates.shape == (sub.order, rank)


def test_h_subgroups(h_group: FiniteMatrixGroup) -> None:
    z: FiniteMatrixGroup = named_subgroup(h_group, "Z")
    c4: FiniteMatrixGroup = named_subgroup(h_group, "C_H(1,1)")

    assert z.order == 2
    assert np.array_equal(z.keys, center(h_group).keys)
    assert c4.order == 4 and c4.exponent == 4  # E12·E23 生成 C_4
    assert named_subgroup(h_group, "C_H(1,0)").exponent == 2


def test_l_subgroups(l_group: FiniteMatrixGroup) -> None:
    assert named_subgroup(l_group, "C4L").order == 16
    assert named_subgroup(l_group, "C3L").order == 8
    assert named_subgroup(l_group, "ZL").order == 4
    assert np.array_equal(named_subgroup(l_group, "Z").keys, center(l_group).keys)
    assert named_subgroup(l_group, "N_L(1,0)").order == 4


def test_unknown_subgroup_keys(h_group: FiniteMatrixGroup, g_group: FiniteMatrixGroup) -> None:
    with pytest.raises(UnknownSubgroupError):
        named_subgroup(h_group, "C2_4G")  # 只對 U(4,p) 註冊
    with pytest.raises(UnknownSubgroupError):
        named_subgroup(g_group, "nope")
    with pytest.raises(UnknownSubgroupError):
        named_subgroup(h_group, "C_H(0,0)")  # n, k 不可同為 0


def test_parse_subgroup_key() -> None:
    assert parse_subgroup_key("C_H(1,1)") == ("C_H", {"n": 1, "k": 1})
    assert parse_subgroup_key("C2_4G") == ("C2_4G", {})


# === 中心化子 ===
def test_l_is_centralizer(g_group: FiniteMatrixGroup, l_group: FiniteMatrixGroup) -> None:
    s: List[int] = [
        g_group.index_of(elementary_matrix(4, 2, 4)),
        g_group.index_of(elementary_matrix(4, 1, 4)),
    ]
    cent: FiniteMatrixGroup = centralizer(g_group, s)

    assert cent.order == 32
    assert np.array_equal(cent.keys, l_group.keys)


def test_trivial_centralizers(g_group: FiniteMatrixGroup) -> None:
    assert centralizer(g_group, [0]).order == 64
    assert centralizer(g_group, g_group.center_indices.tolist()).order == 64


def test_center_ranks(h_group, l_group, g_group) -> None:
    assert center_p_rank(g_group) == 1
    assert center_p_rank(h_group) == 1
    assert center_p_rank(l_group) == 2
    assert center_p_rank(build_group("C2")) == 1


# === 基本交換子群 ===
def test_maximal_elementary_abelian_g(g_group: FiniteMatrixGroup) -> None:
    subs: List[FiniteMatrixGroup] = elementary_abelian_subgroups(g_group, maximal_only=True)

    assert sorted(len(s.basis) for s in subs) == [3, 3, 3, 3, 4]
    for s in subs:
        assert s.is_abelian and s.exponent == 2
    # 沒有任何一個包含另一個
    for a in subs:
        for b in subs:
            if a is not b:
                assert not set(a.keys.tolist()) <= set(b.keys.tolist())


def test_maximal_representatives_use_coordinate_bases(g_group: FiniteMatrixGroup) -> None:
    subs: List[FiniteMatrixGroup] = elementary_abelian_subgroups(g_group, maximal_only=True)

    def basis_of(sub: FiniteMatrixGroup, positions) -> set:
        return {sub.index_of(elementary_matrix(4, i, j)) for i, j in positions}

    rank4 = [s for s in subs if len(s.basis) == 4]
    assert len(rank4) == 1
    assert set(rank4[0].basis) == basis_of(rank4[0], [(1, 3), (1, 4), (2, 3), (2, 4)])
    # <E12, E34, E14> 與其共軛 <E12+E13, E34+E24, E14> 只留前者
    e12, e34 = (int(g_group.keys[g_group.index_of(elementary_matrix(4, i, j))]) for i, j in [(1, 2), (3, 4)])
    coordinate = [s for s in subs if len(s.basis) == 3 and {e12, e34} <= set(s.keys.tolist())]
    assert len(coordinate) == 1
    assert set(coordinate[0].basis) == basis_of(coordinate[0], [(1, 2), (3, 4), (1, 4)])


def test_maximal_elementary_abelian_small(h_group: FiniteMatrixGroup) -> None:
    subs: List[FiniteMatrixGroup] = elementary_abelian_subgroups(h_group, maximal_only=True)
    c2sq: FiniteMatrixGroup = build_group("C2^2")

    assert [len(s.basis) for s in subs] == [2, 2]
    assert [s.order for s in elementary_abelian_subgroups(c2sq, maximal_only=True)] == [4]


def test_all_elementary_abelian_contains_maximal(h_group: FiniteMatrixGroup) -> None:
    subs = elementary_abelian_subgroups(h_group)

    # D_8：5 個 C_2 加上 2 個 C_2^2
    assert sorted(s.order for s in subs) == [2, 2, 2, 2, 2, 4, 4]


# === 同構 ===
def test_l_family_isomorphic(g_group: FiniteMatrixGroup, l_group: FiniteMatrixGroup) -> None:
    other: FiniteMatrixGroup = named_subgroup(g_group, "L(1,1)")
    result = group_isomorphic(l_group, other)

    assert result
    witness = result.witness
    assert np.array_equal(other.table[np.ix_(witness, witness)], witness[l_group.table])


def test_c4_not_c2_squared() -> None:
    assert not group_isomorphic(build_group("C4"), build_group("C2^2"))


def test_isomorphism_reflexive_symmetric(h_group, l_group) -> None:
    assert group_isomorphic(h_group, h_group)
    assert group_isomorphic(l_group, l_group)
    d8 = named_subgroup(build_group("G"), "H0")
    assert group_isomorphic(h_group, d8) and group_isomorphic(d8, h_group)


def test_trivial_group_isomorphic() -> None:
    assert group_isomorphic(build_group("trivial"), build_group("trivial"))


@pytest.mark.slow
def test_l_family_isomorphic_p3() -> None:
    a: FiniteMatrixGroup = build_l_group(3, 0, 1)
    b: FiniteMatrixGroup = build_l_group(3, 1, 1)

    assert a.order == b.order == 243
    assert group_isomorphic(a, b)


@pytest.mark.slow
def test_non_central_centralizers_classified(g_group: FiniteMatrixGroup, l_group) -> None:
    c2_times_h: FiniteMatrixGroup = direct_product(build_group("C2"), build_group("H"))
    central: set = set(g_group.center_indices.tolist())

    for sub in elementary_abelian_subgroups(g_group):
        members: List[int] = sub.fusion_into(g_group).tolist()
        if set(members) <= central:
            continue
        cent: FiniteMatrixGroup = centralizer(g_group, members)
        if cent.is_abelian and cent.exponent == 2:
            continue
        assert group_isomorphic(cent, l_group) or group_isomorphic(cent, c2_times_h)


# === 正則性上界 ===
@pytest.mark.parametrize(
    "degrees, expected",
    [([1, 2], (2, 2)), ([1], (1, 1)), ([1, 2, 3, 4], (6, 12))],
)
def test_regularity_bounds(degrees: List[int], expected) -> None:
    assert regularity_bounds(degrees) == expected


def test_regularity_bounds_empty() -> None:
    with pytest.raises(ValueError):
        regularity_bounds([])
