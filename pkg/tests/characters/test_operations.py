import itertools
from typing import Dict, List

import pytest

from core.characters import (
    CharacterTable,
    ClassFunction,
    Cyclotomic,
    LinearCharacterGroup,
    MonomialMatrix,
    VirtualRep,
    adams,
    character_table,
    decompose,
    exterior_power,
    heisenberg_model,
    invert_series,
    lambda_series,
    linear_character_group,
    linear_characters,
    newton_exterior_power,
    psi_model,
    restrict,
)
from core.groups import (
    FiniteMatrixGroup,
    build_group,
    detection_bound,
    named_subgroup,
    unitriangular_group,
)

"""R(G) 的運算：Adams、外冪、限制與一次特徵標群"""


def model_character(group: FiniteMatrixGroup, model: Dict[int, MonomialMatrix], k: int) -> ClassFunction:
    """單項矩陣模型的第 k 個外冪的跡"""

    return ClassFunction.from_element_function(group, lambda idx: model[idx].exterior_traces()[k])


# === 單項矩陣模型 ===
@pytest.mark.parametrize("p", [2, 3])
def test_exterior_powers_match_heisenberg_model(p: int) -> None:
    group: FiniteMatrixGroup = unitriangular_group(3, p)
    table: CharacterTable = character_table(group)
    model: Dict[int, MonomialMatrix] = heisenberg_model(group, 1)
    phi: VirtualRep = decompose(model_character(group, model, 1), table)

    assert phi.degree == p
    assert phi.character().inner(phi.character()) == 1  # 不可約
    for k in range(p + 1):
        assert exterior_power(phi, k).character() == model_character(group, model, k)


def test_exterior_powers_match_psi_model(g_group: FiniteMatrixGroup) -> None:
    table: CharacterTable = character_table(g_group)
    model: Dict[int, MonomialMatrix] = psi_model(g_group, 1)
    psi: VirtualRep = decompose(model_character(g_group, model, 1), table)

    assert psi == table.rep("psi")
    for k in range(5):
        assert exterior_power(psi, k).character() == model_character(g_group, model, k)


def test_monomial_traces() -> None:
    cycle: MonomialMatrix = MonomialMatrix((1, 2, 0), (0, 0, 1), 3)

    assert cycle.cycles() == [(3, 1)]
    assert cycle.trace() == 0
    assert (cycle @ cycle @ cycle).trace() == Cyclotomic.zeta(3) * 3  # ζ·I_3


# === Adams ===
def test_adams_basic(h_group: FiniteMatrixGroup) -> None:
    table: CharacterTable = character_table(h_group)
    phi: VirtualRep = table.rep("phi")
    c2: FiniteMatrixGroup = build_group("C2")
    regular: ClassFunction = character_table(c2)[0] + character_table(c2)[1]

    assert adams(phi, 1) == phi
    assert adams(phi, 2) == phi * phi - exterior_power(phi, 2) * 2  # ψ² = λ¹² − 2λ²
    assert adams(regular, 2) == ClassFunction.constant(c2, 2)


def test_adams_is_a_ring_map(g_group: FiniteMatrixGroup) -> None:
    table: CharacterTable = character_table(g_group)
    samples: List[VirtualRep] = [table.rep(label) for label in ("phi0", "psi", "f(1,0,1)")]
    for x, y in itertools.product(samples, repeat=2):
        for k in (2, 3):
            assert (x + y).adams(k) == x.adams(k) + y.adams(k)
            assert (x * y).adams(k) == x.adams(k) * y.adams(k)


# === 外冪 ===
def test_exterior_power_examples(h_group, g_group) -> None:
    h: CharacterTable = character_table(h_group)
    g: CharacterTable = character_table(g_group)

    assert exterior_power(h.rep("phi"), 2) == h.rep("f(1,1)")
    assert exterior_power(g.rep("psi"), 3) == g.rep("f(0,1,0)") * g.rep("psi")
    assert exterior_power(g.rep("psi"), 4) == g.rep("f(0,1,0)")
    assert exterior_power(g.rep("psi"), 5) == VirtualRep.zero(g)
    assert exterior_power(g.rep("psi"), 0) == g.one()


def test_whitney_sum_rule(l_group: FiniteMatrixGroup) -> None:
    table: CharacterTable = character_table(l_group)
    x: VirtualRep = table.rep("A") + table.rep("f(1,0,0)")
    y: VirtualRep = table.rep("C") * 2
    for n in range(5):
        expected: VirtualRep = VirtualRep.zero(table)
        for i in range(n + 1):
            expected = expected + exterior_power(x, i) * exterior_power(y, n - i)
        assert exterior_power(x + y, n) == expected


def test_virtual_exterior_powers(g_group: FiniteMatrixGroup) -> None:
    table: CharacterTable = character_table(g_group)
    x: VirtualRep = table.rep("psi") - table.rep("phi0")

    # λ_t(x)·λ_t(phi0) = λ_t(psi)
    lam_x: List[VirtualRep] = lambda_series(x, 4)
    lam_phi: List[VirtualRep] = lambda_series(table.rep("phi0"), 4)
    for n in range(5):
        total: VirtualRep = VirtualRep.zero(table)
        for i in range(n + 1):
            total = total + lam_x[i] * lam_phi[n - i]
        assert total == exterior_power(table.rep("psi"), n)
    assert newton_exterior_power(x, 3) == exterior_power(x, 3)


def test_augmentation_powers(h_group: FiniteMatrixGroup) -> None:
    table: CharacterTable = character_table(h_group)
    x: VirtualRep = table.rep("f(1,0)").augmented()

    assert exterior_power(x, 1) == x
    assert exterior_power(-table.one(), 3) == -table.one()  # λ_t(−1) = (1+t)^{-1}


def test_invert_series(h_group: FiniteMatrixGroup) -> None:
    table: CharacterTable = character_table(h_group)
    series: List[VirtualRep] = lambda_series(table.rep("phi"), 2)
    inverse: List[VirtualRep] = invert_series(series + [VirtualRep.zero(table)] * 2)

    for n in range(1, 5):
        total: VirtualRep = VirtualRep.zero(table)
        for i in range(n + 1):
            coefficient: VirtualRep = series[i] if i < len(series) else VirtualRep.zero(table)
            total = total + coefficient * inverse[n - i]
        assert total == VirtualRep.zero(table)


def test_exterior_power_rejects_negative_k(h_group: FiniteMatrixGroup) -> None:
    with pytest.raises(ValueError):
        exterior_power(character_table(h_group).rep("phi"), -1)


# === 限制 ===
def test_restriction_examples(g_group, h_group) -> None:
    g: CharacterTable = character_table(g_group)
    i0: FiniteMatrixGroup = named_subgroup(g_group, "I0")
    z: FiniteMatrixGroup = named_subgroup(h_group, "Z")

    psi_on_i0: VirtualRep = restrict(g.rep("psi"), i0)
    assert psi_on_i0.degree == 4
    assert psi_on_i0.coords.tolist().count(2) == 1 and psi_on_i0.is_genuine()  # 2φ
    assert restrict(character_table(h_group).rep("phi"), z) == character_table(z).rep("sigma(1)") * 2
    assert restrict(g.one(), i0) == character_table(i0).one()


@pytest.mark.parametrize("label", ["H0", "Iinf", "C2_4G", "C2_3G_1", "L"])
def test_restriction_is_a_lambda_ring_map(g_group: FiniteMatrixGroup, label: str) -> None:
    table: CharacterTable = character_table(g_group)
    sub: FiniteMatrixGroup = named_subgroup(g_group, label)
    psi, phi = table.rep("psi"), table.rep("phi1")

    assert restrict(psi * phi, sub) == restrict(psi, sub) * restrict(phi, sub)
    for k in (2, 3):
        assert restrict(exterior_power(psi, k), sub) == exterior_power(restrict(psi, sub), k)


# === 一次特徵標 ===
def test_linear_character_groups(h_group, g_group) -> None:
    g_linear: LinearCharacterGroup = linear_character_group(character_table(g_group))
    h_linear: LinearCharacterGroup = linear_character_group(character_table(h_group))
    trivial: LinearCharacterGroup = linear_character_group(character_table(build_group("trivial")))

    assert g_linear.order == 8 and g_linear.invariants == [2, 2, 2]
    assert h_linear.order == 4 and h_linear.invariants == [2, 2]
    assert trivial.order == 1 and trivial.invariants == []
    assert len(linear_characters(character_table(g_group))) == 8


def test_linear_characters_cyclic_and_odd() -> None:
    assert linear_character_group(character_table(build_group("C4"))).invariants == [4]
    assert linear_character_group(character_table(build_group("H3"))).invariants == [3, 3]


# === 偵測上界 ===
@pytest.mark.parametrize("key, bound", [("G", 3), ("H", 1), ("C2", 0), ("L", 2)])
def test_detection_bounds(key: str, bound: int) -> None:
    group: FiniteMatrixGroup = build_group(key)
    assert detection_bound(group, character_table(group)).bound == bound
