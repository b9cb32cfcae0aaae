"""Workbench 專用例外類別。

依模組分組，讓呼叫端可以只攔截自己關心的那一層：
- WorkbenchError：全專案共通基底
- 群構造、指標、γ 濾鏈、Chern 多項式、上同調橋接、Pipeline 各自一組

Usage:
    from core.utils import EnumerationBudgetError, WorkbenchError

    try:
        group = unitriangular_group(8, 3)
    except EnumerationBudgetError:
        # 元素數量超出枚舉上限：改用較小的 n 或 p
        ...
    except WorkbenchError as e:
        # 其他 workbench 錯誤
        ...
"""

# -----------------------------------------------------------------------------
# Workbench 通用
# -----------------------------------------------------------------------------


class WorkbenchError(Exception):
    """Workbench 相關錯誤的共通基底，方便與 Python 內建例外區隔。"""

    pass


# -----------------------------------------------------------------------------
# 群構造（core.groups）
# -----------------------------------------------------------------------------


class EnumerationBudgetError(WorkbenchError):
    """群的元素個數超過枚舉上限。"""

    pass


class UnknownSubgroupError(WorkbenchError):
    """子群名稱未註冊，或該名稱不適用於此母群。"""

    pass


class IsomorphismBudgetError(WorkbenchError):
    """同構搜尋超出群大小或組合數上限。"""

    pass


# -----------------------------------------------------------------------------
# 分圓數與特徵標（core.characters）
# -----------------------------------------------------------------------------


class CyclotomicError(WorkbenchError):
    """分圓數的模數不相容或字串無法解析。"""

    pass


class CharacterTableError(WorkbenchError):
    """特徵標表無法建立（未知群族、正交性失敗、質數搜尋用盡）。"""

    pass


class NotAVirtualCharacterError(WorkbenchError):
    """分解得到非整數重數：輸入不是虛擬特徵標。"""

    pass


class LambdaRingError(WorkbenchError):
    """λ 運算的遞迴出現無法整除的情況。"""

    pass


class FusionError(WorkbenchError):
    """子群元素無法對應到母群的共軛類。"""

    pass


# -----------------------------------------------------------------------------
# γ 濾鏈（core.gamma）
# -----------------------------------------------------------------------------


class GammaBudgetError(WorkbenchError):
    """Γ^n 生成元的枚舉數量超過上限。"""

    pass


class FiltrationInclusionError(WorkbenchError):
    """Γ^{n+1} 不包含於 Γ^n（不變量被破壞）。"""

    pass


# -----------------------------------------------------------------------------
# Chern 萬用多項式（core.chern）
# -----------------------------------------------------------------------------


class ChernBudgetError(WorkbenchError):
    """分裂原理所需的根數超過上限。"""

    pass


class IdentityMismatchError(WorkbenchError):
    """表示式兩側的虛擬特徵標不相等，拒絕導出關係式。"""

    pass


# -----------------------------------------------------------------------------
# 上同調橋接（core.cohomology）
# -----------------------------------------------------------------------------


class CohomDataError(WorkbenchError):
    """上同調資料檔格式錯誤。"""

    pass


class RelationViolationError(CohomDataError):
    """某個代數同態（限制映射、自同構）沒有把關係式送到 0。"""

    def __init__(self, map_name: str, relation: str, image: str = ""):
        self.map_name: str = map_name
        self.relation: str = relation
        suffix: str = f" (image {image})" if image else ""
        super().__init__(f"{map_name}: relation {relation} does not map to 0{suffix}")


class CycleMapUnsolvableError(WorkbenchError):
    """任何配對下都找不到相容的 cycle class map。"""

    pass


# -----------------------------------------------------------------------------
# Pipeline（core.pipeline）
# -----------------------------------------------------------------------------


class PipelineCheckError(WorkbenchError):
    """Pipeline 的設定或子檢查失敗；子檢查失敗時 item 為該筆 ReportItem。"""

    def __init__(self, message: str, item: object = None):
        self.item: object = item
        super().__init__(message)
