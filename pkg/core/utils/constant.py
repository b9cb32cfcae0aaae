from enum import Enum

# 定義群族標籤常量（決定使用哪一套顯式特徵標表）
GROUP_FAMILY_H = "H"  # U(3,p)
GROUP_FAMILY_L = "L"  # U(4,p) 中的 index p 子群 L_{nk^-1}
GROUP_FAMILY_G = "G"  # U(4,p)
GROUP_FAMILY_OTHER = "OTHER"

# 定義分級慣例常量
GRADING_CHOW = "chow"  # c_i 的次數為 i
GRADING_COHOMOLOGY = "cohomology"  # c_i 的像落在 H^{2i}

# 定義報告判定常量
VERDICT_PASS = "PASS"
VERDICT_FAIL = "FAIL"
VERDICT_SKIP = "SKIP"

# 同構測試允許的群大小上限
MAX_ISOMORPHISM_ORDER: int = 1000

# Dixon 演算法允許的群大小上限
MAX_GENERIC_TABLE_ORDER: int = 1000

# 萬用多項式的根數上限（n·m 或 C(n,l)）
MAX_CHERN_ROOTS: int = 36


class GroupFamily(str, Enum):
    """群族：顯式構造的特徵標表依此分派"""

    H = GROUP_FAMILY_H
    L = GROUP_FAMILY_L
    G = GROUP_FAMILY_G
    OTHER = GROUP_FAMILY_OTHER


class Grading(str, Enum):
    """代數的分級慣例：Chow 次數 d 對應上同調次數 2d"""

    CHOW = GRADING_CHOW
    COHOMOLOGY = GRADING_COHOMOLOGY


class Verdict(str, Enum):
    """報告項目的判定結果"""

    PASS = VERDICT_PASS
    FAIL = VERDICT_FAIL
    SKIP = VERDICT_SKIP


class GammaStrategy(str, Enum):
    """Γ^n 生成元的產生方式"""

    RECURSIVE = "recursive"  # Γ^n = Σ C_a · Γ^{n-w(a)}
    WINDOW = "window"  # 權重落在 [n, n+m) 的乘積枚舉
