from dataclasses import dataclass, field
from typing import List

import numpy as np
from loguru import logger

from core.groups.matrix_group import FiniteMatrixGroup
from core.utils import FusionError

"""共軛類、冪映射與 Burnside 類數公式"""


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int  # 類中 index 最小的元素
    members: np.ndarray = field(repr=False)
    size: int = 0


@dataclass(frozen=True)
class ConjugacyData:
    """
    共軛類資料

    classes 依代表元 index 排序，因此單位元類永遠是第 0 類。
    power_map[k][c] 為第 c 類元素 k 次方所在的類（0 ≤ k < exponent）。
    """

    group_name: str
    order: int
    classes: List[ConjugacyClass]
    class_of: np.ndarray = field(repr=False)
    power_map: np.ndarray = field(repr=False)
    inverse_class: np.ndarray = field(repr=False)

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> np.ndarray:
        return np.array([c.size for c in self.classes], dtype=np.int64)

    @property
    def centralizer_orders(self) -> np.ndarray:
        return self.order // self.sizes

    @property
    def representatives(self) -> List[int]:
        return [c.representative for c in self.classes]

    def power_class(self, class_index: int, k: int) -> int:
        """任意整數 k 的冪映射（對 exponent 取模）"""

        return int(self.power_map[k % self.power_map.shape[0], class_index])


def conjugacy_classes(group: FiniteMatrixGroup) -> ConjugacyData:
    """
    - Description:
        以乘法表計算共軛類與冪映射；冪映射在建構時逐元素檢查與代表元無關
    - Parameters:
        - group: FiniteMatrixGroup
            已枚舉的群
    - Return:
        - ConjugacyData
    """

    cached = getattr(group, "_conjugacy", None)
    if cached is not None:
        return cached

    table: np.ndarray = group.table
    inverses: np.ndarray = group.inverses
    size: int = group.order

    class_of: np.ndarray = np.full(size, -1, dtype=np.int32)
    classes: List[ConjugacyClass] = []
    for g in range(size):
        if class_of[g] >= 0:
            continue
        conjugates: np.ndarray = np.unique(table[table[:, g], inverses])
        class_of[conjugates] = len(classes)
        classes.append(ConjugacyClass(g, conjugates, len(conjugates)))

    if int(sum(c.size for c in classes)) != size:
        raise FusionError(f"{group.name}: conjugacy classes do not partition the group")

    powers: np.ndarray = group.power_table
    power_map: np.ndarray = np.zeros((powers.shape[0], len(classes)), dtype=np.int32)
    for k in range(powers.shape[0]):
        image: np.ndarray = class_of[powers[k]]
        for idx, cls in enumerate(classes):
            targets: np.ndarray = np.unique(image[cls.members])
            if len(targets) != 1:
                raise FusionError(
                    f"{group.name}: power map g -> g^{k} is not a class function"
                )
            power_map[k, idx] = targets[0]

    inverse_class: np.ndarray = np.array(
        [class_of[inverses[c.representative]] for c in classes], dtype=np.int32
    )
    data: ConjugacyData = ConjugacyData(
        group.name, size, classes, class_of, power_map, inverse_class
    )
    group._conjugacy = data
    logger.debug(f"{group.name}: {len(classes)} conjugacy classes")
    return data


def count_commuting_pairs(group: FiniteMatrixGroup) -> int:
    """#{(x,y) : xy = yx}，直接比對乘法表與其轉置"""

    return int(np.count_nonzero(group.table == group.table.T))


# === Burnside 類數公式 ===


def class_count_h(p: int) -> int:
    """U(3,p) 的類數"""

    return p * p + p - 1


def class_count_l(p: int) -> int:
    """L_{nk^-1} 的類數"""

    return 2 * p**3 - p


def class_count_g(p: int) -> int:
    """U(4,p) 的類數"""

    return p * (p - 1) + p * (p + 1) * (p - 1) + p**3
