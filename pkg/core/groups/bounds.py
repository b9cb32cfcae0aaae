import itertools
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from core.groups.matrix_group import FiniteMatrixGroup

"""偵測上界與正則性上界"""


@dataclass(frozen=True)
class DetectionBound:
    min_faithful_degree: int
    center_rank: int
    faithful_set: Tuple[int, ...]  # 達到最小次數的不可約表示 index

    @property
    def bound(self) -> int:
        return self.min_faithful_degree - self.center_rank


def center_p_rank(group: FiniteMatrixGroup) -> int:
    """中心的 p-秩：log_p #{z ∈ Z(G) : z^p = 1}"""

    center = group.center_indices
    count: int = int((group.element_orders[center] <= group.p).sum())
    # 只有 1 與 p 階元素會滿足 z^p = 1
    rank: int = round(math.log(count, group.p)) if count > 1 else 0
    if group.p**rank != count:
        raise ValueError(f"{group.name}: socle of the center has size {count}")
    return rank


def min_faithful_degree(table) -> Tuple[int, Tuple[int, ...]]:
    """
    - Description:
        使得核的交集只含單位元類的一組不可約表示中，總次數最小者
    - Parameters:
        - table: CharacterTable
            需要 degrees 與 kernel_classes(i)
    - Return:
        - Tuple[int, Tuple[int, ...]]
            (最小總次數, 達成此值的不可約 index)
    """

    degrees: List[int] = list(table.degrees)
    kernels: List[frozenset] = [table.kernel_classes(i) for i in range(len(degrees))]
    trivial: frozenset = frozenset({0})

    # 平凡群：單一類，次數 0 即為忠實
    if len(degrees) == 1:
        return 0, ()

    order = sorted(range(len(degrees)), key=lambda i: (degrees[i], i))
    best: Optional[Tuple[int, Tuple[int, ...]]] = None
    min_deg: int = min(degrees)
    for size in range(1, len(degrees) + 1):
        if best is not None and size * min_deg >= best[0]:
            break
        for combo in itertools.combinations(order, size):
            total: int = sum(degrees[i] for i in combo)
            if best is not None and total >= best[0]:
                continue
            common: frozenset = frozenset.intersection(*(kernels[i] for i in combo))
            if common == trivial:
                best = (total, tuple(sorted(combo)))
    if best is None:
        raise ValueError("no faithful combination of irreducibles")
    return best


def detection_bound(group: FiniteMatrixGroup, table) -> DetectionBound:
    """n − c，其中 n 為最小忠實表示次數、c 為中心的 p-秩"""

    degree, combo = min_faithful_degree(table)
    return DetectionBound(degree, center_p_rank(group), combo)


def regularity_bounds(y_degrees: Sequence[int]) -> Tuple[int, int]:
    """
    - Description:
        σ = Σ(|y_i| − 1)；回傳 (生成元次數上界, 關係式次數上界)
    - Parameters:
        - y_degrees: Sequence[int]
            多項式生成元的次數（非空）
    - Return:
        - Tuple[int, int]
            (max{|y_i|, σ}, max{|y_i|, σ+1, 2σ})
    """

    if not y_degrees:
        raise ValueError("regularity bound needs at least one generator degree")
    sigma: int = sum(d - 1 for d in y_degrees)
    top: int = max(y_degrees)
    return max(top, sigma), max(top, sigma + 1, 2 * sigma)
