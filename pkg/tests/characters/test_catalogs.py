from typing import Dict, List

import pytest

from core.characters import (
    CharacterIdentity,
    G_PRINTED_DISCREPANCIES,
    character_table,
    g_identities,
    g_restrictions,
    h_identities,
    h_restrictions,
    l_identities,
    l_printed_discrepancies,
    l_restrictions,
    printed_discrepancies,
)
from core.groups import FiniteMatrixGroup, build_group, unitriangular_group

"""乘積、外冪與限制目錄逐條比對"""


def failures(items: List[CharacterIdentity]) -> List[str]:
    return [item.key for item in items if not item.consistent]


def discrepancies(items: List[CharacterIdentity]) -> set:
    return {item.key for item in items if item.discrepancy}


def by_key(items: List[CharacterIdentity]) -> Dict[str, CharacterIdentity]:
    return {item.key: item for item in items}


# === U(3,p) ===
@pytest.mark.parametrize("p", [2, 3])
def test_h_identities(p: int) -> None:
    items: List[CharacterIdentity] = h_identities(character_table(unitriangular_group(3, p)))

    assert items
    assert failures(items) == []
    assert all(item.expected for item in items)


def test_h_lambda_two(h_group: FiniteMatrixGroup) -> None:
    item: CharacterIdentity = by_key(h_identities(character_table(h_group)))["H.lambda2-phi1"]
    assert item.holds  # λ²φ = f(1,1)


@pytest.mark.parametrize("p", [2, 3])
def test_h_restrictions(p: int) -> None:
    items: List[CharacterIdentity] = h_restrictions(unitriangular_group(3, p))
    assert failures(items) == []
    assert len(items) == (p + 1) * (p * p + p - 1) + (p - 1) + 1


# === L_0 ===
def test_l_identities_p2(l_group: FiniteMatrixGroup) -> None:
    items: Dict[str, CharacterIdentity] = by_key(l_identities(character_table(l_group)))

    assert failures(list(items.values())) == []
    assert items["L.lambda2-phi(0,1)"].holds  # λ²A = f(1,0,1)
    assert items["L.lambda2-phi(inf,1)"].holds  # λ²C = f(0,1,1)
    assert items["L.A-B"].holds and items["L.A-C"].holds and items["L.B-C"].holds
    # p = 2 時 kx 與 −kx 相同，照抄的穩定子式子也成立
    assert not any(item.discrepancy for key, item in items.items() if key.endswith("-phi(1,1).printed"))


@pytest.mark.slow
def test_l_identities_p3() -> None:
    items: Dict[str, CharacterIdentity] = by_key(l_identities(character_table(build_group("L3"))))

    assert failures(list(items.values())) == []
    assert items["L.phi(0,1)-phi(0,2).printed"].holds  # n = 0 時兩種寫法一致
    assert items["L.phi(1,1)-phi(1,2).printed"].discrepancy  # 穩定子應為 f(kx,−nx,y)
    assert items["L.phi(0,1)-phi(1,1)"].holds
    assert set(discrepancies(list(items.values()))) == l_printed_discrepancies(3)


def test_l_printed_discrepancies_p2(l_group: FiniteMatrixGroup) -> None:
    table = character_table(l_group)
    # 有限斜率乘 ∞ 斜率：p = 2 時 Σ f(x,(r+1)x,0) 是穩定子之和，截不到原點
    expected = {"L.phi(0,1)-phi(inf,1).printed", "L.phi(1,1)-phi(inf,1).printed"}

    assert l_printed_discrepancies(2) == expected
    assert discrepancies(l_identities(table)) == expected
    assert printed_discrepancies(table) == expected


def test_printed_discrepancy_rules_p3() -> None:
    keys = l_printed_discrepancies(3)

    assert "L.phi(1,1)-phi(1,2).printed" in keys
    assert "L.phi(inf,1)-phi(inf,2).printed" not in keys
    assert "L.phi(0,1)-phi(1,1).printed" not in keys  # 斜率 (r+s)/(i+j) 與 (ir+js)/(i+j) 一致
    assert "L.phi(1,2)-phi(2,2).printed" in keys  # r+s ≡ 0
    assert "L.phi(0,2)-phi(inf,1).printed" not in keys
    assert "L.phi(1,2)-phi(inf,1).printed" in keys  # r ≠ 0 且 i ≠ 1


def test_no_printed_forms_for_h(h_group: FiniteMatrixGroup) -> None:
    assert printed_discrepancies(character_table(h_group)) == set()


def test_l_restrictions(l_group: FiniteMatrixGroup) -> None:
    items: List[CharacterIdentity] = l_restrictions(l_group)

    assert failures(items) == []
    assert len(items) == 3 * 8 + 3 * 3


# === U(4,2) ===
def test_g_identities(g_group: FiniteMatrixGroup) -> None:
    items: Dict[str, CharacterIdentity] = by_key(g_identities(character_table(g_group)))

    assert failures(list(items.values())) == []
    assert items["G.lambda2-psi"].holds
    assert items["G.lambda3-psi"].holds and items["G.lambda4-psi"].holds
    assert items["G.psi^2"].holds


def test_printed_psi_square_is_flagged(g_group: FiniteMatrixGroup) -> None:
    item: CharacterIdentity = by_key(g_identities(character_table(g_group)))["G.psi^2-printed"]

    assert item.discrepancy
    assert item.lhs.degree == item.rhs.degree == 16  # 次數相同，中心上差一個符號
    assert discrepancies(g_identities(character_table(g_group))) == G_PRINTED_DISCREPANCIES


def test_g_restrictions(g_group: FiniteMatrixGroup) -> None:
    items: Dict[str, CharacterIdentity] = by_key(g_restrictions(g_group))

    assert failures(list(items.values())) == []
    assert len(items) == 5 * 4
    assert items["G.res.I0.psi"].holds  # ψ ↦ 2φ
    assert items["G.res.H0.phi1"].holds and items["G.res.Hinf.phi1"].holds  # φ_1 ↦ φ
