from typing import List

import numpy as np
import pytest

from core.characters import (
    CharacterTable,
    ClassFunction,
    Cyclotomic,
    VirtualRep,
    abelian_table,
    character_table,
    table_explicit,
    table_g,
    table_generic,
)
from core.characters.dixon import choose_prime
from core.groups import (
    FiniteMatrixGroup,
    build_group,
    conjugacy_classes,
    elementary_matrix,
    named_subgroup,
    unitriangular_group,
)
from core.utils import CharacterTableError

"""特徵標表：顯式構造、Dixon–Schneider 與交換群對偶，彼此交叉比對"""


def encodings(table: CharacterTable) -> List[tuple]:
    return [chi.encoding() for chi in table.characters]


# === 次數 ===
def test_degrees_h(h_group: FiniteMatrixGroup) -> None:
    assert character_table(h_group).degrees == [1, 1, 1, 1, 2]


def test_degrees_g(g_group: FiniteMatrixGroup) -> None:
    degrees: List[int] = character_table(g_group).degrees

    assert sorted(degrees) == [1] * 8 + [2] * 6 + [4] * 2
    assert sum(d * d for d in degrees) == 64


@pytest.mark.parametrize(
    "p, expected",
    [
        (2, [1] * 8 + [2] * 6 + [4] * 2),
        (3, [1] * 27 + [3] * 24 + [9] * 6),
    ],
)
def test_table_g_explicit(p: int, expected: List[int]) -> None:
    group: FiniteMatrixGroup = unitriangular_group(4, p)
    table: CharacterTable = table_g(group)

    assert sorted(table.degrees) == expected
    assert len(table) == conjugacy_classes(group).num_classes
    assert sum(d * d for d in table.degrees) == p**6


def test_table_g_psi_values() -> None:
    # v ≠ 0 時 ψ_k = 3·ζ^{k(z - xy/v)}
    group: FiniteMatrixGroup = unitriangular_group(4, 3)
    table: CharacterTable = table_g(group)
    psi: ClassFunction = table.characters[table.index("psi(1)")]
    m = np.eye(4, dtype=np.int64)
    m[0, 2], m[1, 2], m[1, 3] = 1, 1, 1  # x = v = y = 1, z = 0

    assert psi.value_at(group.index_of(m)) == Cyclotomic.zeta(3, -1) * 3


def test_degrees_l(l_group: FiniteMatrixGroup) -> None:
    assert sorted(character_table(l_group).degrees) == [1] * 8 + [2] * 6


def test_degrees_odd_p() -> None:
    h3: CharacterTable = character_table(build_group("H3"))
    l3: CharacterTable = character_table(build_group("L3"))

    assert sorted(h3.degrees) == [1] * 9 + [3] * 2
    assert sorted(l3.degrees) == [1] * 27 + [3] * 24


# === 標籤 ===
def test_labels_and_aliases(h_group, l_group, g_group) -> None:
    h, l, g = character_table(h_group), character_table(l_group), character_table(g_group)

    assert h["phi"] is h["phi(1)"]
    assert l["A"] is l["phi(0,1)"] and l["C"] is l["phi(inf,1)"]
    assert g["psi"].degree == 4
    assert g["phiinf"] is g["phi(1,inf,0)"]
    assert g.labels[0] == "f(0,0,0)"  # 平凡表示排在最前
    with pytest.raises(CharacterTableError):
        g.index("phi(2,0,inf)")


def test_table_values_h(h_group: FiniteMatrixGroup) -> None:
    phi: ClassFunction = character_table(h_group)["phi"]
    center: int = h_group.index_of(elementary_matrix(3, 1, 3))

    assert phi.degree == 2
    assert phi.value_at(center) == -2  # 2·ζ_2
    assert phi.inner(phi) == 1


# === 與 Dixon–Schneider 交叉比對 ===
@pytest.mark.parametrize("fixture_name", ["h_group", "l_group", "g_group"])
def test_dixon_agrees_with_explicit(fixture_name: str, request) -> None:
    group: FiniteMatrixGroup = request.getfixturevalue(fixture_name)

    generic: CharacterTable = table_generic(group)
    assert generic.source == "dixon"
    assert generic.labels[0] == "chi0"
    assert encodings(generic) == encodings(table_explicit(group))  # 同一排序規則


def test_dixon_agrees_with_explicit_odd_p() -> None:
    h3: FiniteMatrixGroup = unitriangular_group(3, 3)
    assert encodings(table_generic(h3)) == encodings(table_explicit(h3))


def test_dixon_on_abelian_groups() -> None:
    c2sq: FiniteMatrixGroup = build_group("C2^2")
    c4: FiniteMatrixGroup = build_group("C4")

    assert table_generic(c2sq).degrees == [1, 1, 1, 1]
    assert encodings(table_generic(c4)) == encodings(abelian_table(c4))


def test_c4_contains_i(h_group: FiniteMatrixGroup) -> None:
    c4: FiniteMatrixGroup = build_group("C4")
    sigma: ClassFunction = character_table(c4)["sigma(1)"]

    assert c4.exponent == 4
    assert sigma.value_at(c4.basis[0]) == Cyclotomic.zeta(4)  # M ↦ i


def test_dixon_on_nonabelian_subgroup(g_group: FiniteMatrixGroup) -> None:
    h0: FiniteMatrixGroup = named_subgroup(g_group, "H0")
    table: CharacterTable = character_table(h0)

    assert table.source == "dixon"
    assert table.degrees == [1, 1, 1, 1, 2]


def test_generic_table_size_limit() -> None:
    with pytest.raises(CharacterTableError):
        table_generic(unitriangular_group(5, 2))  # 1024 階


def test_choose_prime() -> None:
    assert choose_prime(64, 4) == 17
    assert choose_prime(27, 3) == 13
    assert choose_prime(8, 4, start=10) == 13


# === 表的文字格式 ===
def test_dump_roundtrip(g_group: FiniteMatrixGroup) -> None:
    table: CharacterTable = character_table(g_group)
    lines: List[str] = table.dump()

    assert lines[0].startswith("f(0,0,0) | 1 |")
    reloaded: CharacterTable = CharacterTable.from_dump(g_group, lines)
    assert encodings(reloaded) == encodings(table)
    assert reloaded.labels == table.labels


def test_virtual_degree(g_group: FiniteMatrixGroup) -> None:
    table: CharacterTable = character_table(g_group)
    x: VirtualRep = table.rep("psi") - table.rep("phi0") * 3

    assert x.degree == -2
    assert not x.is_genuine()
    assert x.augmented().degree == 0
