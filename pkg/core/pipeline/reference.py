from typing import Dict, List, Tuple

from core.algebra.f2 import bits_of, indices_of
from core.utils import GroupFamily

"""
已發表的數值

報告中的 expected 欄位全部取自這裡。矩陣以「非零行的 1-based 欄位」表示，
欄位次序為 G_DEGREE3_BASIS；比較時只比列空間。
"""


# -----------------------------------------------------------------------------
# 群與特徵標表
# -----------------------------------------------------------------------------

CLASS_COUNTS: Dict[str, int] = {"H": 5, "L": 14, "G": 16, "H3": 11}

DEGREE_MULTISETS: Dict[str, str] = {
    "H": "1^4,2",
    "L": "1^8,2^6",
    "G": "1^8,2^6,4^2",
}

TABLE_KEYS: List[str] = ["H", "H3", "L", "L3", "G"]

DETECTION_BOUNDS: Dict[str, int] = {"H": 1, "G": 3, "C2^2": 0}

# 非中心基本交換子群的中心化子類型
NONCENTRAL_CENTRALIZER_TYPES: Dict[str, List[str]] = {
    "H": ["elementary abelian"],
    "G": ["C2 x U(3,2)", "L", "elementary abelian"],
}


# -----------------------------------------------------------------------------
# γ 分次
# -----------------------------------------------------------------------------

GRADED_PIECES: Dict[Tuple[str, int], List[int]] = {
    ("H", 1): [2, 2],
    ("H", 2): [2, 2, 4],
    ("G", 1): [2, 2, 2],
    ("G", 2): [2, 2, 2, 2, 4, 4, 4],
}

CHERN_ORDERS: Dict[str, Dict[str, int]] = {
    "H": {"c1(f(1,0))": 2, "c1(phi)": 2, "c2(phi)": 4},
    "G": {"c1(psi)": 2, "c2(phi0)": 4, "c2(psi)": 4},
}

H_GENERATORS: List[str] = ["f(1,0)", "phi"]

# CH*(BH) = ℤ[c1(f), c1(φ), c2(φ)] / (2c1(f), 2c1(φ), 4c2(φ), c1(f)² + c1(f)c1(φ))
H_INTEGRAL_DEGREE2: List[Dict[str, int]] = [
    {"c1(f(1,0))^2": 2},
    {"c1(f(1,0))*c1(phi)": 2},
    {"c1(phi)^2": 2},
    {"c2(phi)": 4},
    {"c1(f(1,0))^2": 1, "c1(f(1,0))*c1(phi)": 1},
]

# C4 = <E12 E23> ⊂ H；c2(φ)^i 在 Z(H) 上的限制
H_CENTER_POWERS: int = 3


# -----------------------------------------------------------------------------
# 循環類映射
# -----------------------------------------------------------------------------

CANDIDATE_COUNTS: Dict[GroupFamily, int] = {
    GroupFamily.H: 2,
    GroupFamily.L: 2,
    GroupFamily.G: 1,
}

H_COMMON_IMAGES: Dict[str, str] = {
    "c1(phi)": "b1_0^2 + b1_1^2",
    "c2(phi)": "c2_2^2",
}
H_SWAPPED_IMAGES: List[str] = ["b1_0^2", "b1_1^2"]  # c1(f(1,0)) 在兩個候選中的像

L_IMAGES: Dict[str, str] = {
    "c1(A)": "b1_0^2 + b1_1^2",
    "c1(B)": "b1_0^2 + b1_1^2 + b1_2^2",
    "c1(C)": "b1_0^2 + b1_2^2",
    "c2(A)": "c2_5^2",
    "c2(B)": "c2_5^2 + b2_4^2 + c2_6^2",
    "c2(C)": "c2_6^2",
}

G_IMAGES: Dict[str, str] = {
    "c1(phi0)": "b1_0^2 + b1_1^2",
    "c1(phiinf)": "b1_0^2 + b1_2^2",
    "c1(psi)": "b1_0^2",
    "c2(phi0)": "b2_4^2",
    "c2(phiinf)": "b2_6^2",
    "c2(psi)": "b2_4^2 + b2_5^2 + b2_6^2 + b1_1^4 + b1_1^2*b1_2^2 + b1_2^4",
    "c3(psi)": "b3_11^2 + b1_2^2*b2_6^2 + b1_1^2*b2_4^2 + b1_1^2*b1_2^4 + b1_1^4*b1_2^2",
    "c4(psi)": "c4_18^2",
}


# -----------------------------------------------------------------------------
# mod 2 表示（次數 → 關係）
# -----------------------------------------------------------------------------

_L_CROSS: str = " + ".join(f"c1({a})*c2({b})" for a in "ABC" for b in "ABC")

RELATIONS: Dict[GroupFamily, Dict[int, List[str]]] = {
    GroupFamily.H: {
        2: ["c1(f(1,0))^2 + c1(f(1,0))*c1(phi)"],
    },
    GroupFamily.L: {
        2: [
            "c1(A)*c1(B) + c1(B)^2 + c1(A)*c1(C) + c1(C)^2",
            "c1(A)^2 + c1(B)^2 + c1(A)*c1(C) + c1(B)*c1(C)",
        ],
        3: [_L_CROSS],
        4: [
            "c1(B)*c1(C)*c2(A) + c1(A)*c1(C)*c2(B) + c1(B)^2*c2(C) + c1(A)*c1(C)*c2(C)"
            " + c1(C)^2*c2(C) + c2(A)^2 + c2(B)^2 + c2(C)^2"
        ],
    },
    GroupFamily.G: {
        2: [
            "c1(phiinf)*c1(psi) + c1(psi)^2",
            "c1(phi0)*c1(psi) + c1(psi)^2",
        ],
        3: [
            "c1(phiinf)*c2(phi0) + c1(psi)*c2(phi0) + c1(phi0)*c2(phiinf) + c1(psi)*c2(phiinf)",
            "c1(phi0)^2*c1(phiinf) + c1(phi0)*c1(phiinf)^2 + c1(phiinf)^3 + c1(psi)^3"
            " + c1(phiinf)*c2(phiinf) + c1(psi)*c2(phiinf) + c1(phiinf)*c2(psi) + c1(psi)*c2(psi)",
            "c1(phi0)^3 + c1(phiinf)^3 + c1(phi0)*c2(phi0) + c1(psi)*c2(phi0) + c1(phiinf)*c2(phiinf)"
            " + c1(psi)*c2(phiinf) + c1(phi0)*c2(psi) + c1(phiinf)*c2(psi)",
        ],
        4: [
            "c1(phi0)^2*c2(phi0) + c1(psi)^2*c2(phi0) + c1(phi0)*c1(phiinf)*c2(phiinf)"
            " + c1(phiinf)^2*c2(phiinf) + c1(phi0)^2*c2(psi) + c1(phi0)*c1(phiinf)*c2(psi)"
            " + c1(phiinf)^2*c2(psi) + c1(psi)^2*c2(psi)"
            " + c2(phi0)^2 + c2(phi0)*c2(phiinf) + c2(phiinf)^2 + c2(psi)^2 + c1(psi)*c3(psi)",
            "c1(phiinf)^4 + c1(psi)^4 + c1(phiinf)^2*c2(psi) + c1(psi)^2*c2(psi)"
            " + c1(phiinf)*c3(psi) + c1(psi)*c3(psi)",
            "c1(phi0)*c1(phiinf)^3 + c1(psi)^4 + c1(phiinf)^2*c2(phiinf) + c1(psi)^2*c2(phiinf)"
            " + c1(phi0)^2*c2(psi) + c1(phiinf)^2*c2(psi) + c2(phi0)^2 + c2(phi0)*c2(phiinf)"
            " + c2(phiinf)^2 + c2(psi)^2 + c1(phi0)*c3(psi)",
        ],
        6: [
            "c1(phiinf)^3*c3(psi) + c1(psi)^3*c3(psi) + c2(phi0)^2*c2(phiinf) + c2(phi0)*c2(phiinf)^2"
            " + c1(phi0)*c2(phi0)*c3(psi) + c1(psi)*c2(phi0)*c3(psi) + c1(phi0)*c2(phiinf)*c3(psi)"
            " + c1(psi)*c2(phiinf)*c3(psi) + c1(phiinf)*c2(psi)*c3(psi) + c1(psi)^2*c4(psi) + c3(psi)^2"
        ],
    },
}


def relation_counts(family: GroupFamily, bound: int) -> Dict[int, int]:
    """每個次數 1..bound 的新關係數"""

    listed: Dict[int, List[str]] = RELATIONS[family]
    return {d: len(listed.get(d, [])) for d in range(1, bound + 1)}


# -----------------------------------------------------------------------------
# U(4,2) 的三次記帳
# -----------------------------------------------------------------------------

# c3ψ；c2φ0·{c1φ0, c1φ∞, c1ψ}；c2φ∞·{...}；c2ψ·{...}；c1 的三次方項
G_DEGREE3_BASIS: List[str] = [
    "c3(psi)",
    "c2(phi0)*c1(phi0)",
    "c2(phi0)*c1(phiinf)",
    "c2(phi0)*c1(psi)",
    "c2(phiinf)*c1(phi0)",
    "c2(phiinf)*c1(phiinf)",
    "c2(phiinf)*c1(psi)",
    "c2(psi)*c1(phi0)",
    "c2(psi)*c1(phiinf)",
    "c2(psi)*c1(psi)",
    "c1(phi0)^3",
    "c1(phi0)^2*c1(phiinf)",
    "c1(phi0)*c1(phiinf)^2",
    "c1(phiinf)^3",
    "c1(psi)^3",
]

DEGREE3_SUBGROUPS: List[str] = ["H0", "Hinf", "I0", "Iinf", "C2_2G"]

# 印出的限制矩陣（H0 以外與重算的列空間一致）
PRINTED_RESTRICTIONS: Dict[str, List[List[int]]] = {
    "H0": [[1, 6, 9], [1, 5, 7, 8, 10], [1, 9, 14], [1, 8, 10, 11, 12, 13, 15]],
    "Hinf": [[2, 3, 4, 8, 9, 10], [1, 3, 4, 9, 10], [11, 12, 13, 14, 15], [8, 12, 13, 14, 15]],
    "I0": [[9, 14], [9, 14]],
    "Iinf": [[8, 11]],
    "C2_2G": [[8, 11], [1, 8, 9, 12], [1, 8, 9, 13], [9, 14]],
}

# H0 由 φ∞ ↦ φ、φ0 ↦ 1 + f(1,0)、ψ ↦ 1 + f(0,1) + φ 重算；c3ψ|H0 = c1(f(0,1))c2(φ)
RESTRICTIONS: Dict[str, List[List[int]]] = {
    **PRINTED_RESTRICTIONS,
    "H0": [[1, 6, 9], [1, 5, 7, 8, 10], [9, 14], [9, 11, 12, 13, 15]],
}

PRINTED_RESTRICTION_KERNEL: List[List[int]] = [
    [2, 4, 8, 10, 11, 12, 13, 15],
    [3, 4],
    [5, 7],
    [6, 7, 9, 10, 12, 13, 14, 15],
]
RESTRICTION_KERNEL_DIM: int = 6

PRINTED_GAMMA_KERNEL: List[List[int]] = [
    [2],
    [6],
    [1, 10],
    [13, 14],
    [3, 4, 5, 7],
    [1, 4, 8, 11, 15],
    [1, 7, 9, 14, 15],
]

# 第四列依 c1φ0²c1φ∞ + c1φ0c1φ∞² ∈ Γ^4 更正；更正後在 φ0 ↔ φ∞ 下不變
GAMMA_KERNEL: List[List[int]] = [
    [2],
    [6],
    [1, 10],
    [12, 13],
    [3, 4, 5, 7],
    [1, 4, 8, 11, 15],
    [1, 7, 9, 14, 15],
]

# 與循環類映射的核（限制在 A^3 上）相同
PRINTED_OVERLAP: List[List[int]] = [
    [3, 4, 5, 7],
    [2, 4, 6, 7, 8, 9, 11, 14],
    [6, 7, 9, 10, 12, 13, 14, 15],
]
OVERLAP_DIM: int = 4
CYCLE_KERNEL_DIM: int = 3


def columns_to_bits(rows: List[List[int]]) -> List[int]:
    """1-based 欄位列表 → F_2 位元向量（第 k 欄為第 k-1 個位元）"""

    return [bits_of(k - 1 for k in row) for row in rows]


def bits_to_columns(vector: int) -> List[int]:
    return sorted(k + 1 for k in indices_of(vector))
