import weakref
from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

import numpy as np
from loguru import logger
from sympy import factorint

from core.characters.abelian import abelian_table
from core.characters.class_function import CharacterTable, ClassFunction, VirtualRep
from core.characters.dixon import table_generic
from core.characters.explicit import table_explicit
from core.groups import ConjugacyData, FiniteMatrixGroup, conjugacy_classes
from core.utils import CharacterTableError, GroupFamily, LambdaRingError

"""
R(G) 上的運算：分解、Adams、外冪（λ）、限制、一次特徵標群，以及特徵標表的分派
"""


# 每張表各自的 λ 級數快取：coords → [λ^0, λ^1, ...]
_LAMBDA_MEMO: "weakref.WeakKeyDictionary[CharacterTable, Dict[tuple, List[VirtualRep]]]" = (
    weakref.WeakKeyDictionary()
)


# -----------------------------------------------------------------------------
# 特徵標表分派
# -----------------------------------------------------------------------------


def _has_explicit_table(group: FiniteMatrixGroup) -> bool:
    if group.family in (GroupFamily.H, GroupFamily.G):
        return True
    if group.family == GroupFamily.L:
        return (group.params.get("n", 0), group.params.get("k", 1)) == (0, 1)
    return False


def character_table(group: FiniteMatrixGroup) -> CharacterTable:
    """
    - Description:
        顯式構造（H / L_0 / G 族）→ 有基底的交換群 → Dixon–Schneider，結果快取在群物件上
    - Parameters:
        - group: FiniteMatrixGroup
    - Return:
        - CharacterTable
    """

    cached = getattr(group, "_character_table", None)
    if cached is not None:
        return cached

    table: CharacterTable
    if _has_explicit_table(group):
        try:
            table = table_explicit(group)
        except CharacterTableError as exc:
            logger.warning(f"{group.name}: explicit table rejected ({exc}), using Dixon–Schneider")
            table = table_generic(group)
    elif group.is_abelian and group.basis is not None:
        table = abelian_table(group)
    else:
        table = table_generic(group)

    group._character_table = table
    return table


# -----------------------------------------------------------------------------
# 分解與 Adams
# -----------------------------------------------------------------------------


def decompose(chi: ClassFunction, table: CharacterTable) -> VirtualRep:
    """coords_i = ⟨χ, χ_i⟩"""

    return VirtualRep.from_class_function(table, chi)


def adams(chi: Union[ClassFunction, VirtualRep], k: int) -> Union[ClassFunction, VirtualRep]:
    """(ψ^k χ)(g) = χ(g^k)"""

    return chi.adams(k)


def tensor(x: VirtualRep, y: VirtualRep) -> VirtualRep:
    return x * y


# -----------------------------------------------------------------------------
# λ 運算
# -----------------------------------------------------------------------------


def _newton_series(x: VirtualRep, k: int) -> List[VirtualRep]:
    # n·λ^n = Σ_{i=1..n} (−1)^{i−1} λ^{n−i} ψ^i
    memo: Dict[tuple, List[VirtualRep]] = _LAMBDA_MEMO.setdefault(x.table, {})
    key: tuple = tuple(x.coords.tolist())
    series: List[VirtualRep] = memo.get(key, [x.table.one()])
    if len(series) > k:
        return series[: k + 1]

    series = list(series)
    adams_terms: List[VirtualRep] = [x.table.one()] + [x.adams(i) for i in range(1, k + 1)]
    for n in range(len(series), k + 1):
        total: VirtualRep = VirtualRep.zero(x.table)
        for i in range(1, n + 1):
            term: VirtualRep = series[n - i] * adams_terms[i]
            total = total + term if i % 2 else total - term
        if np.any(total.coords % n):
            raise LambdaRingError(f"Newton recurrence for lambda^{n} is not divisible by {n}")
        series.append(VirtualRep(x.table, total.coords // n))
    memo[key] = series
    return series


def invert_series(series: List[VirtualRep]) -> List[VirtualRep]:
    """Σ a_i t^i（a_0 = 1）的形式逆"""

    inverse: List[VirtualRep] = [series[0].table.one()]
    for n in range(1, len(series)):
        total: VirtualRep = VirtualRep.zero(series[0].table)
        for i in range(1, n + 1):
            total = total + series[i] * inverse[n - i]
        inverse.append(-total)
    return inverse


def lambda_series(x: VirtualRep, k: int) -> List[VirtualRep]:
    """
    - Description:
        [λ^0(x), ..., λ^k(x)]；真表示走 Newton 遞迴，虛擬元素拆成 P − N 後用
        λ_t(P − N) = λ_t(P) · λ_t(N)^{-1}
    """

    if k < 0:
        raise ValueError(f"exterior power needs k >= 0, got {k}")
    if x.is_genuine():
        return _newton_series(x, k)

    positive: VirtualRep = VirtualRep(x.table, np.maximum(x.coords, 0))
    negative: VirtualRep = VirtualRep(x.table, np.maximum(-x.coords, 0))
    lam_p: List[VirtualRep] = _newton_series(positive, k)
    inv_n: List[VirtualRep] = invert_series(_newton_series(negative, k))
    result: List[VirtualRep] = []
    for n in range(k + 1):
        total: VirtualRep = VirtualRep.zero(x.table)
        for i in range(n + 1):
            total = total + lam_p[i] * inv_n[n - i]
        result.append(total)
    return result


def exterior_power(x: VirtualRep, k: int) -> VirtualRep:
    return lambda_series(x, k)[k]


def newton_exterior_power(x: VirtualRep, k: int) -> VirtualRep:
    """不拆正負部，直接對 x 套 Newton 遞迴（λ 環中對任意元素成立）"""

    if k < 0:
        raise ValueError(f"exterior power needs k >= 0, got {k}")
    return _newton_series(x, k)[k]


# -----------------------------------------------------------------------------
# 限制
# -----------------------------------------------------------------------------


def restrict_class_function(chi: ClassFunction, sub: FiniteMatrixGroup) -> ClassFunction:
    """沿共軛類融合把類函數拉回子群"""

    fusion: np.ndarray = sub.fusion_into(chi.group)
    data: ConjugacyData = conjugacy_classes(sub)
    return ClassFunction(sub, [chi.value_at(int(fusion[r])) for r in data.representatives])


def restrict(x: VirtualRep, sub: FiniteMatrixGroup, sub_table: CharacterTable = None) -> VirtualRep:
    """
    - Description:
        Res^G_S(x)，在 S 的表中分解
    - Parameters:
        - x: VirtualRep
            G 上的虛擬表示
        - sub: FiniteMatrixGroup
            與 G 嵌在同一個矩陣空間的子群
        - sub_table: CharacterTable
            省略時使用 character_table(sub)
    - Return:
        - VirtualRep
    """

    sub_table = sub_table if sub_table is not None else character_table(sub)
    return decompose(restrict_class_function(x.character(), sub), sub_table)


# -----------------------------------------------------------------------------
# 一次特徵標
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearCharacterGroup:
    """Hom(G, C^×)：tensor 積下的有限交換群"""

    labels: Tuple[str, ...]
    indices: Tuple[int, ...]  # 在特徵標表中的位置
    products: np.ndarray  # products[i, j] = i ⊗ j 的位置（本群內）
    orders: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def invariants(self) -> List[int]:
        """
        - Description:
            由 #{x : x^{p^k} = 1} 逐層讀出各 p-部分的不變因子
        - Return:
            - List[int]
                由小到大
        """

        result: List[int] = []
        for p in sorted(factorint(self.order)):
            counts: List[int] = [1]
            k: int = 1
            while counts[-1] < self._p_part(p):
                counts.append(sum(1 for o in self.orders if (p**k) % o == 0))
                k += 1
            ranks: List[int] = [_log(c, p) for c in counts]
            at_least: List[int] = [ranks[j] - ranks[j - 1] for j in range(1, len(ranks))] + [0]
            for j in range(len(at_least) - 1):
                result.extend([p ** (j + 1)] * (at_least[j] - at_least[j + 1]))
        return sorted(result)

    def _p_part(self, p: int) -> int:
        return p ** factorint(self.order).get(p, 0)


def _log(value: int, base: int) -> int:
    exponent: int = 0
    while value > 1:
        value //= base
        exponent += 1
    return exponent


def linear_characters(table: CharacterTable) -> List[ClassFunction]:
    """次數為 1 的不可約特徵標"""

    return [chi for chi in table.characters if chi.degree == 1]


def linear_character_group(table: CharacterTable) -> LinearCharacterGroup:
    indices: List[int] = [i for i, chi in enumerate(table.characters) if chi.degree == 1]
    position: Dict[tuple, int] = {table.characters[i].encoding(): n for n, i in enumerate(indices)}
    size: int = len(indices)

    products: np.ndarray = np.zeros((size, size), dtype=np.int32)
    for a, i in enumerate(indices):
        for b, j in enumerate(indices):
            products[a, b] = position[(table.characters[i] * table.characters[j]).encoding()]

    orders: List[int] = []
    for a in range(size):
        current, order = a, 1
        while current != 0:
            current = int(products[current, a])
            order += 1
        orders.append(order)
    return LinearCharacterGroup(
        tuple(table.labels[i] for i in indices), tuple(indices), products, tuple(orders)
    )
