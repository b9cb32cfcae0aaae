import re
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from core.groups.matrix_group import (
    FiniteMatrixGroup,
    matrix_from_entries,
    unitriangular_group,
)
from core.utils import GroupFamily, UnknownSubgroupError

"""
具名子群登錄表、中心化子與基本交換子群枚舉

登錄表以 (母群族, 名稱) 為鍵；名稱可帶參數，例如 "C_H(1,1)"、"L(1,1)"、"N(0,1)"。
每個建構器回傳生成矩陣與（若為基本交換）有序基底，座標順序即為上同調資料檔的 c1_i 順序。
"""


Entries = Dict[Tuple[int, int], int]
Builder = Callable[[FiniteMatrixGroup, Dict[str, int]], Tuple[List[Entries], bool]]

_KEY_PATTERN = re.compile(r"^\s*([A-Za-z0-9_]+)\s*(?:\(([-\d,\s]*)\))?\s*$")


# -----------------------------------------------------------------------------
# 中心化子
# -----------------------------------------------------------------------------


def centralizer(
    group: FiniteMatrixGroup, subset: Sequence[int], name: Optional[str] = None
) -> FiniteMatrixGroup:
    """
    - Description:
        C_G(S) = {g : gs = sg, ∀ s ∈ S}
    - Parameters:
        - group: FiniteMatrixGroup
            母群
        - subset: Sequence[int]
            S 在母群中的 index
    - Return:
        - FiniteMatrixGroup
            中心化子（subgroup() 會驗證封閉性）
    """

    table: np.ndarray = group.table
    mask: np.ndarray = np.ones(group.order, dtype=bool)
    for s in subset:
        mask &= table[:, s] == table[s, :]
    return group.subgroup(np.nonzero(mask)[0], name or f"C_{group.name}(S)")


def center(group: FiniteMatrixGroup) -> FiniteMatrixGroup:
    return group.subgroup(group.center_indices, f"Z({group.name})")


def elementary_center(group: FiniteMatrixGroup) -> FiniteMatrixGroup:
    """Z(G) 附有序基底；Z(G) 必須是基本交換群"""

    members: frozenset = frozenset(int(i) for i in group.center_indices)
    if any(group.element_order(g) not in (1, group.p) for g in members):
        raise ValueError(f"the center of {group.name} is not elementary abelian")
    basis: List[int] = _greedy_basis(group, members)
    return group.subgroup(
        sorted(members),
        f"Z({group.name})",
        generators=basis,
        basis=basis,
        params={"rank": len(basis)},
    )


# -----------------------------------------------------------------------------
# 基本交換子群
# -----------------------------------------------------------------------------


def _span(group: FiniteMatrixGroup, members: frozenset, g: int) -> frozenset:
    table: np.ndarray = group.table
    current: np.ndarray = np.array(sorted(members), dtype=np.int32)
    result: set = set(members)
    power: int = g
    while power != group.identity:
        result.update(table[current, power].tolist())
        power = int(table[power, g])
    return frozenset(result)


def _support(group: FiniteMatrixGroup, g: int) -> int:
    """嚴格上三角的非零位置數"""

    return int(np.count_nonzero(np.triu(group.matrix(g), 1)))


def _greedy_basis(group: FiniteMatrixGroup, members: frozenset) -> List[int]:
    # 非零位置少者優先，基底落在矩陣座標方向上（例如 E_13、E_12+E_34）
    basis: List[int] = []
    spanned: frozenset = frozenset({group.identity})
    for x in sorted(members, key=lambda g: (_support(group, g), g)):
        if x not in spanned:
            basis.append(x)
            spanned = _span(group, spanned, x)
    return basis


def _conjugacy_representatives(group: FiniteMatrixGroup, subsets: List[frozenset]) -> List[frozenset]:
    """每個共軛類留一個；類內取座標基底總非零位置最少者"""

    table: np.ndarray = group.table
    inverses: np.ndarray = group.inverses
    ranked: List[frozenset] = sorted(
        subsets,
        key=lambda s: (len(s), sum(_support(group, g) for g in _greedy_basis(group, s)), sorted(s)),
    )
    seen: set = set()
    representatives: List[frozenset] = []
    for members in ranked:
        if members in seen:
            continue
        representatives.append(members)
        idx: np.ndarray = np.array(sorted(members), dtype=np.int32)
        conjugates: np.ndarray = table[table[:, idx], inverses[:, None]]
        seen.update(frozenset(row.tolist()) for row in conjugates)
    return representatives


def elementary_abelian_subgroups(
    group: FiniteMatrixGroup, maximal_only: bool = False
) -> List[FiniteMatrixGroup]:
    """
    - Description:
        逐秩擴張枚舉所有非平凡的基本交換 p-子群
    - Parameters:
        - group: FiniteMatrixGroup
            p-群
        - maximal_only: bool
            只回傳不被更大基本交換子群包含者，且每個共軛類一個代表
    - Return:
        - List[FiniteMatrixGroup]
            依 (秩, 元素 index) 排序，每個都帶有貪婪挑選的有序基底
    """

    table: np.ndarray = group.table
    order_p: np.ndarray = np.nonzero(group.element_orders == group.p)[0]

    found: List[frozenset] = []
    maximal: set = set()
    level: List[frozenset] = [frozenset({group.identity})]
    while level:
        next_level: Dict[frozenset, None] = {}
        for members in level:
            idx: np.ndarray = np.array(sorted(members), dtype=np.int32)
            commuting: np.ndarray = np.all(
                table[np.ix_(idx, order_p)] == table[np.ix_(order_p, idx)].T, axis=0
            )
            candidates: List[int] = [
                int(g) for g in order_p[commuting] if int(g) not in members
            ]
            if not candidates:
                maximal.add(members)
            for g in candidates:
                next_level.setdefault(_span(group, members, g), None)
        found.extend(s for s in next_level)
        level = list(next_level)

    chosen: List[frozenset] = (
        _conjugacy_representatives(group, [s for s in found if s in maximal]) if maximal_only else list(found)
    )
    chosen.sort(key=lambda s: (len(s), sorted(s)))

    result: List[FiniteMatrixGroup] = []
    for i, members in enumerate(chosen):
        basis: List[int] = _greedy_basis(group, members)
        result.append(
            group.subgroup(
                sorted(members),
                f"E{len(basis)}_{i}",
                generators=basis,
                basis=basis,
                params={"rank": len(basis)},
            )
        )
    logger.debug(
        f"{group.name}: {len(result)} elementary abelian subgroups (maximal_only={maximal_only})"
    )
    return result


# -----------------------------------------------------------------------------
# 具名子群登錄表
# -----------------------------------------------------------------------------


def _nk(params: Dict[str, int], p: int, default: Tuple[int, int]) -> Tuple[int, int]:
    n: int = params.get("n", default[0]) % p
    k: int = params.get("k", default[1]) % p
    if n == 0 and k == 0:
        raise UnknownSubgroupError("parameters n, k must not both be zero")
    return n, k


def _center_h(group, params):
    return [{(1, 3): 1}], True


def _cyclic_h(group, params):
    n, k = _nk(params, group.p, (1, 1))
    return [{(1, 2): n, (2, 3): k}], True


def _center_g(group, params):
    return [{(1, 4): 1}], True


def _l_generators(p: int, params: Dict[str, int]) -> List[Entries]:
    n, k = _nk(params, p, (0, 1))
    return [{(1, 3): n, (2, 4): k}, {(1, 4): 1}]


def _h_infinity(group, params):
    return [{(1, 2): 1}, {(1, 3): 1}, {(2, 3): 1}], False


def _h_zero(group, params):
    return [{(2, 3): 1}, {(2, 4): 1}, {(3, 4): 1}], False


def _i_infinity(group, params):
    return [{(1, 2): 1}, {(1, 4): 1}, {(2, 4): 1}], False


def _i_zero(group, params):
    return [{(1, 3): 1}, {(1, 4): 1}, {(3, 4): 1}], False


def _c2_2g(group, params):
    return [{(1, 2): 1}, {(3, 4): 1}], True


def _c2_3g(group, params):
    return [{(1, 2): 1}, {(3, 4): 1}, {(1, 4): 1}], True


def _c2_3g_0(group, params):
    return [{(1, 2): 1}, {(1, 3): 1}, {(1, 4): 1}], True


def _c2_3g_1(group, params):
    return [{(1, 2): 1, (3, 4): 1}, {(1, 3): 1, (2, 4): 1}, {(1, 4): 1}], True


def _c2_3g_inf(group, params):
    return [{(3, 4): 1}, {(2, 4): 1}, {(1, 4): 1}], True


def _c2_4g(group, params):
    return [{(2, 3): 1}, {(1, 3): 1}, {(2, 4): 1}, {(1, 4): 1}], True


def _n_family(group, params):
    n, k = _nk(params, group.p, (0, 1))
    p: int = group.p
    return [
        {(1, 2): n, (3, 4): k},
        {(1, 3): n, (2, 4): (-k) % p},
        {(1, 4): 1},
    ], True


def _c4l(group, params):
    return [{(1, 3): 1}, {(2, 3): 1}, {(1, 4): 1}, {(2, 4): 1}], True


def _c3l(group, params):
    return [{(3, 4): 1}, {(2, 4): 1}, {(1, 4): 1}], True


def _zl(group, params):
    return [{(1, 4): 1}, {(2, 4): 1}], True


def _nl(group, params):
    n, k = _nk(params, group.p, (0, 1))
    return [{(1, 3): n, (2, 3): k}, {(1, 4): n, (2, 4): k}], True


SUBGROUP_REGISTRY: Dict[Tuple[GroupFamily, str], Builder] = {
    (GroupFamily.H, "Z"): _center_h,
    (GroupFamily.H, "C_H"): _cyclic_h,
    (GroupFamily.G, "Z"): _center_g,
    (GroupFamily.G, "H0"): _h_zero,
    (GroupFamily.G, "Hinf"): _h_infinity,
    (GroupFamily.G, "I0"): _i_zero,
    (GroupFamily.G, "Iinf"): _i_infinity,
    (GroupFamily.G, "C2_2G"): _c2_2g,
    (GroupFamily.G, "C2_3G"): _c2_3g,
    (GroupFamily.G, "C2_3G_0"): _c2_3g_0,
    (GroupFamily.G, "C2_3G_1"): _c2_3g_1,
    (GroupFamily.G, "C2_3G_inf"): _c2_3g_inf,
    (GroupFamily.G, "C2_4G"): _c2_4g,
    (GroupFamily.G, "N"): _n_family,
    (GroupFamily.L, "Z"): _zl,
    (GroupFamily.L, "ZL"): _zl,
    (GroupFamily.L, "C4L"): _c4l,
    (GroupFamily.L, "C3L"): _c3l,
    (GroupFamily.L, "N_L"): _nl,
}
"""(母群族, 名稱) → 建構器；"L" 另行處理（需要中心化子）"""


def parse_subgroup_key(key: str) -> Tuple[str, Dict[str, int]]:
    """
    - Description:
        "C_H(1,1)" → ("C_H", {"n": 1, "k": 1})
    """

    match = _KEY_PATTERN.match(key)
    if match is None:
        raise UnknownSubgroupError(f"malformed subgroup key {key!r}")
    label: str = match.group(1)
    params: Dict[str, int] = {}
    if match.group(2):
        values: List[int] = [int(v) for v in match.group(2).split(",") if v.strip()]
        if len(values) != 2:
            raise UnknownSubgroupError(f"subgroup key {key!r} needs two parameters (n,k)")
        params = {"n": values[0], "k": values[1]}
    return label, params


def _from_entries(
    group: FiniteMatrixGroup,
    entries: List[Entries],
    name: str,
    with_basis: bool,
    family: GroupFamily,
    params: Dict[str, int],
) -> FiniteMatrixGroup:
    mats: List[np.ndarray] = [matrix_from_entries(group.n, e) for e in entries]
    gens: List[int] = [group.index_of(m) for m in mats]
    members: np.ndarray = group.closure(gens)
    sub: FiniteMatrixGroup = group.subgroup(
        members, name, generators=gens, family=family, params=params
    )
    if with_basis and sub.is_abelian:
        gen_orders: int = int(np.prod([sub.element_order(g) for g in sub.generators]))
        if gen_orders == sub.order:
            sub.basis = list(sub.generators)
    return sub


def l_subgroup(group: FiniteMatrixGroup, params: Optional[Dict[str, int]] = None) -> FiniteMatrixGroup:
    """
    - Description:
        L_{nk^-1}：U(4,p) 中 E13^n E24^k 與 E14 的中心化子（order p^5）
    """

    params = dict(params or {})
    n, k = _nk(params, group.p, (0, 1))
    gens: List[int] = [
        group.index_of(matrix_from_entries(group.n, e)) for e in _l_generators(group.p, params)
    ]
    name: str = "L" if (n, k) == (0, 1) else f"L({n},{k})"
    sub: FiniteMatrixGroup = centralizer(group, gens, name)
    sub.family = GroupFamily.L
    sub.params = {"p": group.p, "n": n, "k": k}
    return sub


def named_subgroup(group: FiniteMatrixGroup, key: str) -> FiniteMatrixGroup:
    """
    - Description:
        依登錄表建構具名子群
    - Parameters:
        - group: FiniteMatrixGroup
            母群（family 為 H、L 或 G）
        - key: str
            子群名稱，可帶 (n,k) 參數
    - Return:
        - FiniteMatrixGroup
            元素皆屬於母群；基本交換者帶有有序基底
    """

    label, params = parse_subgroup_key(key)
    if group.family == GroupFamily.G and label == "L":
        return l_subgroup(group, params)
    if label == "Z" and group.family == GroupFamily.OTHER:
        return center(group)

    if group.family == GroupFamily.L and (group.params.get("n", 0), group.params.get("k", 1)) != (0, 1):
        raise UnknownSubgroupError(f"named subgroups are registered for L_0 only, not {group.name}")
    builder: Optional[Builder] = SUBGROUP_REGISTRY.get((group.family, label))
    if builder is None:
        raise UnknownSubgroupError(
            f"subgroup {label!r} is not defined for {group.name} (family {group.family.value})"
        )
    entries, with_basis = builder(group, params)
    sub: FiniteMatrixGroup = _from_entries(
        group, entries, key.strip(), with_basis, GroupFamily.OTHER, {"p": group.p, **params}
    )
    logger.debug(f"{group.name}/{key}: order {sub.order}")
    return sub


def build_l_group(p: int = 2, n: int = 0, k: int = 1) -> FiniteMatrixGroup:
    """U(4,p) 內的 L_{nk^-1}，作為獨立的母群使用"""

    return l_subgroup(unitriangular_group(4, p), {"n": n, "k": k})
