from typing import Dict, List

from core.algebra import F2Echelon, row_space_equal
from core.pipeline.chow import joint_kernel, kernel_overlap
from core.pipeline.reference import (
    CYCLE_KERNEL_DIM,
    DEGREE3_SUBGROUPS,
    G_DEGREE3_BASIS,
    GAMMA_KERNEL,
    OVERLAP_DIM,
    PRINTED_GAMMA_KERNEL,
    PRINTED_OVERLAP,
    PRINTED_RESTRICTION_KERNEL,
    PRINTED_RESTRICTIONS,
    RELATIONS,
    RESTRICTION_KERNEL_DIM,
    RESTRICTIONS,
    bits_to_columns,
    columns_to_bits,
    relation_counts,
)
from core.utils import GroupFamily

"""已知數值之間的一致性：不需要群，只用 F_2 線性代數"""


# φ0 ↔ φ∞ 在 15 個單項式上的置換（1-based）
SWAP: Dict[int, int] = {1: 1, 2: 6, 3: 5, 4: 7, 5: 3, 6: 2, 7: 4, 8: 9, 9: 8, 10: 10, 11: 14, 12: 13, 13: 12, 14: 11, 15: 15}


def swap_rows(rows: List[List[int]]) -> List[List[int]]:
    return [sorted(SWAP[k] for k in row) for row in rows]


def all_restriction_rows(matrices: Dict[str, List[List[int]]]) -> List[int]:
    return [v for label in DEGREE3_SUBGROUPS for v in columns_to_bits(matrices[label])]


def test_bit_conversion():
    assert columns_to_bits([[1, 3]]) == [0b101]
    assert bits_to_columns(0b101) == [1, 3]
    assert len(G_DEGREE3_BASIS) == 15


def test_relation_counts():
    assert relation_counts(GroupFamily.G, 6) == {1: 0, 2: 2, 3: 3, 4: 3, 5: 0, 6: 1}
    assert relation_counts(GroupFamily.L, 4) == {1: 0, 2: 2, 3: 1, 4: 1}
    assert sum(len(v) for v in RELATIONS[GroupFamily.H].values()) == 1


# === 限制矩陣 ===


def test_corrected_h0_mirrors_h_infinity():
    mirrored = columns_to_bits(swap_rows(RESTRICTIONS["Hinf"]))

    assert row_space_equal(columns_to_bits(RESTRICTIONS["H0"]), mirrored)
    assert not row_space_equal(columns_to_bits(PRINTED_RESTRICTIONS["H0"]), mirrored)


def test_restriction_kernel():
    kernel = joint_kernel(all_restriction_rows(RESTRICTIONS), 15)

    assert len(kernel) == RESTRICTION_KERNEL_DIM
    assert F2Echelon.from_vectors(kernel).contains_all(columns_to_bits(PRINTED_RESTRICTION_KERNEL))


# === γ 核與交集 ===


def test_gamma_kernel_is_symmetric():
    rows = columns_to_bits(GAMMA_KERNEL)

    assert F2Echelon.from_vectors(rows).rank == 7
    assert row_space_equal(rows, columns_to_bits(swap_rows(GAMMA_KERNEL)))
    assert not row_space_equal(
        columns_to_bits(PRINTED_GAMMA_KERNEL), columns_to_bits(swap_rows(PRINTED_GAMMA_KERNEL))
    )


def test_overlap_and_balance():
    functionals = all_restriction_rows(RESTRICTIONS)
    overlap = kernel_overlap(columns_to_bits(GAMMA_KERNEL), functionals)
    cycle_rows = columns_to_bits(PRINTED_OVERLAP)

    assert len(overlap) == OVERLAP_DIM
    assert F2Echelon.from_vectors(cycle_rows).rank == CYCLE_KERNEL_DIM
    assert F2Echelon.from_vectors(overlap).contains_all(cycle_rows)
    assert F2Echelon.from_vectors(columns_to_bits(GAMMA_KERNEL)).contains_all(cycle_rows)
    assert len(GAMMA_KERNEL) - CYCLE_KERNEL_DIM == 4
