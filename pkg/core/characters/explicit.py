from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from loguru import logger

from core.characters.class_function import CharacterTable, ClassFunction
from core.characters.cyclotomic import Cyclotomic
from core.groups import FiniteMatrixGroup, conjugacy_classes
from core.utils import CharacterTableError, GroupFamily

"""
顯式特徵標表：U(3,p)、L_0 ⊆ U(4,p)、U(4,p)

做法：先寫出一次表示 f 與 φ、ψ 的特徵標公式（在類代表矩陣上求值），
再以一次表示的張量作用展開軌道、依特徵標值去重，最後由 CharacterTable 檢查正交歸一。
"""


Formula = Callable[[np.ndarray], Cyclotomic]

INF: str = "inf"


def _inv(x: int, p: int) -> int:
    return pow(int(x), -1, p)


def _linear_labels(p: int, rank: int) -> List[Tuple[int, ...]]:
    vectors: List[Tuple[int, ...]] = [()]
    for _ in range(rank):
        vectors = [v + (a,) for v in vectors for a in range(p)]
    return vectors


def _fmt(vector: Tuple[int, ...]) -> str:
    return "f(" + ",".join(str(a) for a in vector) + ")"


def _class_function(group: FiniteMatrixGroup, formula: Formula) -> ClassFunction:
    data = conjugacy_classes(group)
    mats: List[np.ndarray] = [group.matrix(r).astype(np.int64) for r in data.representatives]
    return ClassFunction(group, [formula(m) for m in mats])


def _expand_orbits(
    group: FiniteMatrixGroup,
    linear: List[Tuple[str, ClassFunction]],
    seeds: List[Tuple[str, ClassFunction]],
    aliases: Dict[str, str],
    source: str,
) -> CharacterTable:
    # 一次表示 × 種子表示，依特徵標值去重，保留第一次出現的標籤
    seen: Dict[tuple, str] = {}
    characters: List[ClassFunction] = []
    labels: List[str] = []

    def add(label: str, chi: ClassFunction) -> None:
        key: tuple = chi.encoding()
        if key not in seen:
            seen[key] = label
            characters.append(chi)
            labels.append(label)

    for label, chi in linear:
        add(label, chi)
    for label, chi in seeds:
        add(label, chi)
    for seed_label, seed in seeds:
        for f_label, f in linear[1:]:
            add(f"{f_label}*{seed_label}", f * seed)

    expected: int = conjugacy_classes(group).num_classes
    if len(characters) != expected:
        raise CharacterTableError(
            f"{group.name}: explicit construction gave {len(characters)} irreducibles, expected {expected}"
        )
    table: CharacterTable = CharacterTable(group, characters, labels, source=source, aliases=aliases)
    logger.info(f"{group.name}: explicit character table ({len(table)} irreducibles)")
    return table


# -----------------------------------------------------------------------------
# U(3,p)
# -----------------------------------------------------------------------------


def table_h(group: FiniteMatrixGroup) -> CharacterTable:
    """
    - Description:
        U(3,p)：f_(a,b)(M) = ζ^{a·M12 + b·M23}；φ_k 只在 M12 = M23 = 0 時非零，值為 p·ζ^{k·M13}
    - Parameters:
        - group: FiniteMatrixGroup
            U(3,p)
    - Return:
        - CharacterTable
            p=2 時另有別名 phi → phi(1)
    """

    p: int = group.p
    linear = [
        (_fmt(v), _class_function(group, lambda m, v=v: Cyclotomic.zeta(p, v[0] * m[0, 1] + v[1] * m[1, 2])))
        for v in _linear_labels(p, 2)
    ]

    def phi(k: int) -> Formula:
        def value(m: np.ndarray) -> Cyclotomic:
            if m[0, 1] % p or m[1, 2] % p:
                return Cyclotomic.from_int(0, p)
            return Cyclotomic.zeta(p, k * m[0, 2]) * p

        return value

    seeds = [(f"phi({k})", _class_function(group, phi(k))) for k in range(1, p)]
    aliases: Dict[str, str] = {"phi": "phi(1)"} if p == 2 else {}
    return _expand_orbits(group, linear, seeds, aliases, "explicit-H")


# -----------------------------------------------------------------------------
# L_0 ⊆ U(4,p)
# -----------------------------------------------------------------------------


def _projective_points(p: int) -> List[object]:
    return list(range(p)) + [INF]


def table_l(group: FiniteMatrixGroup) -> CharacterTable:
    """
    - Description:
        L_0 = {a=(1,3), b=(2,3), c=(3,4), d=(2,4), e=(1,4)}：
        f_(a',b',c') = ζ^{a'a + b'b + c'c}；
        φ_{r,i}（r ∈ F_p ∪ {∞}）只在 c = 0 且 (a,b) ∈ F_p·(n,k) 時非零，
        值為 p·ζ^{i(e − r·d)}（r 有限）或 p·ζ^{−i·d}（r = ∞）
    - Parameters:
        - group: FiniteMatrixGroup
            L_0（family 為 L，參數 n=0, k=1）
    - Return:
        - CharacterTable
            p=2 時別名 A/B/C 對應 phi(0,1)、phi(1,1)、phi(inf,1)
    """

    p: int = group.p
    linear = [
        (
            _fmt(v),
            _class_function(
                group,
                lambda m, v=v: Cyclotomic.zeta(p, v[0] * m[0, 2] + v[1] * m[1, 2] + v[2] * m[2, 3]),
            ),
        )
        for v in _linear_labels(p, 3)
    ]

    def phi(r, i: int) -> Formula:
        n, k = (1, 0) if r == INF else (r, 1)

        def value(m: np.ndarray) -> Cyclotomic:
            a, b, c, d, e = m[0, 2] % p, m[1, 2] % p, m[2, 3] % p, m[1, 3], m[0, 3]
            on_line: bool = (a * k - b * n) % p == 0
            if c or not on_line:
                return Cyclotomic.from_int(0, p)
            exponent: int = -i * d if r == INF else i * (e - r * d)
            return Cyclotomic.zeta(p, exponent) * p

        return value

    seeds = [
        (f"phi({r},{i})", _class_function(group, phi(r, i)))
        for r in _projective_points(p)
        for i in range(1, p)
    ]
    aliases: Dict[str, str] = (
        {"A": "phi(0,1)", "B": "phi(1,1)", "C": f"phi({INF},1)"} if p == 2 else {}
    )
    return _expand_orbits(group, linear, seeds, aliases, "explicit-L")


# -----------------------------------------------------------------------------
# U(4,p)
# -----------------------------------------------------------------------------


def table_g(group: FiniteMatrixGroup) -> CharacterTable:
    """
    - Description:
        U(4,p)，座標 u=(1,2), x=(1,3), z=(1,4), v=(2,3), y=(2,4), w=(3,4)：
        - f_(a,b,c) = ζ^{au + bv + cw}
        - φ_{i,ℓ,∞}（ℓ ∈ F_p）：ℓw = u 且 v = 0 時為 p·ζ^{i(x + ℓy)}
        - φ_{j,∞,0}：w = v = 0 時為 p·ζ^{j·y}
        - ψ_k：u = w = 0、v ≠ 0 時為 p·ζ^{k(z - xy/v)}；只有 z 非零時為 p²·ζ^{kz}
    - Parameters:
        - group: FiniteMatrixGroup
            U(4,p)
    - Return:
        - CharacterTable
            p=2 時別名 phi0、phi1、phiinf、psi
    """

    p: int = group.p

    def coords(m: np.ndarray) -> Tuple[int, int, int, int, int, int]:
        return (m[0, 1] % p, m[0, 2] % p, m[0, 3] % p, m[1, 2] % p, m[1, 3] % p, m[2, 3] % p)

    linear = [
        (
            _fmt(vec),
            _class_function(
                group,
                lambda m, vec=vec: Cyclotomic.zeta(
                    p, vec[0] * m[0, 1] + vec[1] * m[1, 2] + vec[2] * m[2, 3]
                ),
            ),
        )
        for vec in _linear_labels(p, 3)
    ]

    def phi_inf(i: int, ell: int) -> Formula:
        def value(m: np.ndarray) -> Cyclotomic:
            u, x, z, v, y, w = coords(m)
            if (ell * w - u) % p or v:
                return Cyclotomic.from_int(0, p)
            return Cyclotomic.zeta(p, i * (x + ell * y)) * p

        return value

    def phi_zero_inf(j: int) -> Formula:
        def value(m: np.ndarray) -> Cyclotomic:
            u, x, z, v, y, w = coords(m)
            if w or v:
                return Cyclotomic.from_int(0, p)
            return Cyclotomic.zeta(p, j * y) * p

        return value

    def psi(k: int) -> Formula:
        def value(m: np.ndarray) -> Cyclotomic:
            u, x, z, v, y, w = coords(m)
            if u or w:
                return Cyclotomic.from_int(0, p)
            if v:
                return Cyclotomic.zeta(p, k * (z - x * y * _inv(v, p))) * p
            if x or y:
                return Cyclotomic.from_int(0, p)
            return Cyclotomic.zeta(p, k * z) * (p * p)

        return value

    seeds: List[Tuple[str, ClassFunction]] = []
    for ell in range(p):
        for i in range(1, p):
            seeds.append((f"phi({i},{ell},{INF})", _class_function(group, phi_inf(i, ell))))
    for j in range(1, p):
        seeds.append((f"phi({j},{INF},0)", _class_function(group, phi_zero_inf(j))))
    for k in range(1, p):
        seeds.append((f"psi({k})", _class_function(group, psi(k))))

    aliases: Dict[str, str] = (
        {"phi0": f"phi(1,0,{INF})", "phi1": f"phi(1,1,{INF})", "phiinf": f"phi(1,{INF},0)", "psi": "psi(1)"}
        if p == 2
        else {}
    )
    return _expand_orbits(group, linear, seeds, aliases, "explicit-G")


def table_explicit(group: FiniteMatrixGroup) -> CharacterTable:
    """依群族分派到顯式構造"""

    if group.family == GroupFamily.H:
        return table_h(group)
    if group.family == GroupFamily.L:
        if (group.params.get("n", 0), group.params.get("k", 1)) != (0, 1):
            raise CharacterTableError(f"explicit table only covers L_0, not {group.name}")
        return table_l(group)
    if group.family == GroupFamily.G:
        return table_g(group)
    raise CharacterTableError(f"no explicit construction for {group.name}")


def label_of(table: CharacterTable, name: str) -> Optional[str]:
    """別名或標籤 → 標籤"""

    try:
        return table.labels[table.index(name)]
    except CharacterTableError:
        return None
