from dataclasses import dataclass, field
from typing import Dict, Optional

from core.cohomology import BUILTIN_FOR_FAMILY, BUILTIN_PREFIX
from core.config import DEGREE_BOUND, H3_RANK, NUM_THREADS
from core.utils import GroupFamily, PipelineCheckError

"""Pipeline 的執行參數"""


MIN_DEGREE_BOUND: int = 3  # 三次的記帳需要 gr^3
PRESENTATION_BOUND: int = 6  # 已知表示中最高的關係式次數（G 的六次關係）


def _builtin_sources() -> Dict[GroupFamily, str]:
    return {family: f"{BUILTIN_PREFIX}{key}" for family, key in BUILTIN_FOR_FAMILY.items()}


@dataclass
class PipelineConfig:
    """一次 pipeline 執行固定的參數；未指定時使用 default() 讀自 core.config 的值"""

    degree_bound: int = DEGREE_BOUND
    modulus: Optional[int] = None  # None 表示 ℤ（只用在 H 的整數表示）；否則為 2
    h3_rank: int = H3_RANK  # rank H^3(BG, ℤ)，三次記帳的維度平衡用
    fix_symmetry: bool = True  # 套用 DEFAULT_CHOICES 消去 64#138 的生成元對稱
    num_threads: int = NUM_THREADS
    seed: int = 0  # 只影響隨機化的性質檢查
    cohom_sources: Dict[GroupFamily, str] = field(default_factory=_builtin_sources)

    def __post_init__(self):
        if self.degree_bound < MIN_DEGREE_BOUND:
            raise PipelineCheckError(
                f"degree bound must be >= {MIN_DEGREE_BOUND}, got {self.degree_bound}"
            )
        if self.h3_rank < 0:
            raise PipelineCheckError(f"H^3 rank must be >= 0, got {self.h3_rank}")
        if self.modulus not in (None, 2):
            raise PipelineCheckError(f"modulus must be 2 or None (integral), got {self.modulus}")
        if self.num_threads < 1:
            raise PipelineCheckError(f"thread count must be >= 1, got {self.num_threads}")

    @classmethod
    def default(
        cls,
        degree_bound: Optional[int] = None,
        seed: int = 0,
    ) -> "PipelineConfig":
        """core.config 的設定值；degree_bound 可覆寫"""

        return cls(
            degree_bound=degree_bound if degree_bound is not None else DEGREE_BOUND,
            seed=seed,
        )

    @property
    def presentation_enabled(self) -> bool:
        return self.degree_bound >= PRESENTATION_BOUND

    def cohom_source(self, family: GroupFamily) -> str:
        if family not in self.cohom_sources:
            raise PipelineCheckError(f"no cohomology data configured for family {family.value}")
        return self.cohom_sources[family]
