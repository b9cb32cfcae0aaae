from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np
from loguru import logger

from core.groups.conjugacy import conjugacy_classes
from core.groups.matrix_group import FiniteMatrixGroup
from core.utils import MAX_ISOMORPHISM_ORDER, IsomorphismBudgetError

"""以生成元像的回溯搜尋判定兩個有限群是否同構"""


# 回溯過程允許嘗試的生成元像組合數
MAX_ISOMORPHISM_CANDIDATES: int = 1000000


@dataclass(frozen=True)
class IsomorphismResult:
    isomorphic: bool
    witness: Optional[np.ndarray] = None  # witness[i] = A 的第 i 個元素在 B 中的 index
    reason: str = ""

    def __bool__(self) -> bool:
        return self.isomorphic


def _invariants(group: FiniteMatrixGroup) -> tuple:
    orders: Counter = Counter(group.element_orders.tolist())
    data = conjugacy_classes(group)
    return (
        group.order,
        tuple(sorted(orders.items())),
        data.num_classes,
        len(group.center_indices),
    )


def frattini_generators(group: FiniteMatrixGroup) -> List[int]:
    """
    - Description:
        p-群的最小生成集：挑選在 G/Φ(G) 中線性獨立的元素（Burnside 基底定理）
    - Parameters:
        - group: FiniteMatrixGroup
    - Return:
        - List[int]
            生成元 index；非 p-群時退回貪婪挑選
    """

    if group.order == 1:
        return []
    table: np.ndarray = group.table
    inv: np.ndarray = group.inverses
    seeds: set = set(group.power_table[group.p % group.exponent].tolist()) if group.exponent > 1 else set()
    a: np.ndarray = np.arange(group.order)
    for x in range(group.order):
        comm: np.ndarray = table[table[table[x, a], inv[x]], inv]
        seeds.update(comm.tolist())
    frattini: set = set(group.closure(seeds).tolist())

    chosen: List[int] = []
    current: set = set(frattini)
    for g in range(group.order):
        if g not in current:
            chosen.append(g)
            current = set(group.closure(list(frattini) + chosen).tolist())
            if len(current) == group.order:
                break

    if len(group.closure(chosen)) != group.order:
        return list(group.generators)
    return chosen


def _extend(
    a: FiniteMatrixGroup,
    b: FiniteMatrixGroup,
    gens: List[int],
    images: List[int],
) -> Optional[Dict[int, int]]:
    # 沿著生成元的字延伸映射；遇到矛盾立刻回傳 None
    mapping: Dict[int, int] = {a.identity: b.identity}
    frontier: List[int] = [a.identity]
    used: set = {b.identity}
    while frontier:
        nxt: List[int] = []
        for x in frontier:
            for g, h in zip(gens, images):
                y: int = int(a.table[x, g])
                value: int = int(b.table[mapping[x], h])
                known: Optional[int] = mapping.get(y)
                if known is None:
                    if value in used:
                        return None
                    mapping[y] = value
                    used.add(value)
                    nxt.append(y)
                elif known != value:
                    return None
        frontier = nxt
    return mapping


def group_isomorphic(
    a: FiniteMatrixGroup,
    b: FiniteMatrixGroup,
    max_candidates: int = MAX_ISOMORPHISM_CANDIDATES,
) -> IsomorphismResult:
    """
    - Description:
        先比對不變量（階、元素階分布、類數、中心大小），再回溯搜尋生成元的像
    - Parameters:
        - a, b: FiniteMatrixGroup
            待比較的兩個群（|A| = |B| ≤ 1000）
        - max_candidates: int
            生成元像組合的嘗試上限
    - Return:
        - IsomorphismResult
            同構時附上元素對應 witness
    """

    if a.order != b.order:
        return IsomorphismResult(False, reason="orders differ")
    if a.order > MAX_ISOMORPHISM_ORDER:
        raise IsomorphismBudgetError(
            f"isomorphism test limited to order {MAX_ISOMORPHISM_ORDER}, got {a.order}"
        )
    if _invariants(a) != _invariants(b):
        return IsomorphismResult(False, reason="invariants differ")

    gens: List[int] = frattini_generators(a)
    if not gens:
        return IsomorphismResult(True, np.zeros(1, dtype=np.int32), "trivial")

    data_a = conjugacy_classes(a)
    data_b = conjugacy_classes(b)
    candidates: List[List[int]] = []
    for g in gens:
        size: int = data_a.classes[data_a.class_of[g]].size
        mask: np.ndarray = (b.element_orders == a.element_order(g)) & (
            data_b.sizes[data_b.class_of] == size
        )
        candidates.append(np.nonzero(mask)[0].tolist())

    attempts: int = 0

    def search(depth: int, images: List[int]) -> Optional[Dict[int, int]]:
        nonlocal attempts
        if depth == len(gens):
            mapping = _extend(a, b, gens, images)
            if mapping is not None and len(mapping) == a.order:
                return mapping
            return None
        for h in candidates[depth]:
            attempts += 1
            if attempts > max_candidates:
                raise IsomorphismBudgetError(
                    f"isomorphism search between {a.name} and {b.name} exceeded {max_candidates} candidates"
                )
            trial: List[int] = images + [h]
            # 部分生成元已出現矛盾就剪枝
            if _extend(a, b, gens[: depth + 1], trial) is None:
                continue
            found = search(depth + 1, trial)
            if found is not None:
                return found
        return None

    mapping = search(0, [])
    if mapping is None:
        logger.debug(f"{a.name} !~ {b.name} after {attempts} candidates")
        return IsomorphismResult(False, reason="no generator images extend")

    witness: np.ndarray = np.array([mapping[i] for i in range(a.order)], dtype=np.int32)
    # 完整驗證同態性質
    if not np.array_equal(b.table[np.ix_(witness, witness)], witness[a.table]):
        return IsomorphismResult(False, reason="extension is not a homomorphism")
    logger.debug(f"{a.name} ~ {b.name} after {attempts} candidates")
    return IsomorphismResult(True, witness, "generator images extend")
