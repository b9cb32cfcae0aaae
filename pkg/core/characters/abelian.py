import itertools
from typing import List, Sequence

import numpy as np

from core.characters.class_function import CharacterTable, ClassFunction
from core.characters.cyclotomic import Cyclotomic
from core.groups import FiniteMatrixGroup, conjugacy_classes
from core.utils import CharacterTableError

"""交換群（有記錄基底者）的對偶群：σ^a(g) = Π ζ_{o_i}^{a_i·c_i(g)}"""


def sigma_label(exponents: Sequence[int]) -> str:
    return "sigma(" + ",".join(str(int(a)) for a in exponents) + ")"


def basis_sigma_label(rank: int, i: int) -> str:
    """第 i 個基底特徵標 σ_i 的標籤"""

    return sigma_label([1 if j == i else 0 for j in range(rank)])


def abelian_table(group: FiniteMatrixGroup) -> CharacterTable:
    """
    - Description:
        以 group.basis 的座標寫出全部一次特徵標
    - Parameters:
        - group: FiniteMatrixGroup
            交換群且 basis 已設定（基本交換子群與 C4 都是）
    - Return:
        - CharacterTable
            標籤 sigma(a_1,...,a_r)
    """

    if not group.is_abelian or group.basis is None:
        raise CharacterTableError(f"{group.name} is not an abelian group with a recorded basis")

    exponent: int = group.exponent
    orders: List[int] = [group.element_order(b) for b in group.basis]
    coords: np.ndarray = group.basis_coordinates
    representatives: List[int] = conjugacy_classes(group).representatives

    characters: List[ClassFunction] = []
    labels: List[str] = []
    for exps in itertools.product(*(range(o) for o in orders)):
        values: List[Cyclotomic] = []
        for rep in representatives:
            power: int = sum(
                a * int(c) * (exponent // o) for a, c, o in zip(exps, coords[rep], orders)
            )
            values.append(Cyclotomic.zeta(exponent, power))
        characters.append(ClassFunction(group, values))
        labels.append(sigma_label(exps))
    return CharacterTable(group, characters, labels, source="abelian")
