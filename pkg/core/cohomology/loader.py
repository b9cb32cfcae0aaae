from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from loguru import logger

from core.algebra import (
    AlgebraHom,
    F2GradedAlgebra,
    F2Poly,
    chow_ring_of_elementary_abelian,
    parse_polynomial,
)
from core.config import BUILTIN_COHOM_FILES, DATA_DIR_PATH
from core.utils import CohomDataError, Grading

"""
上同調表示資料檔的讀取與載入時檢查

格式（# 開頭的行為註解）：
    NAME 64#138
    GEN b1_0 1
    REL b1_0*b1_1
    SLOT 1 3
    MAP b1_1 -> c1_0
    CENTER 2
每個 slot 的目標是 H*(BC_2^rank, F_2) = F_2[c1_0, ..., c1_{rank-1}]。
"""


BUILTIN_PREFIX: str = "builtin:"


@dataclass
class CohomSlot:
    """一個基本交換子群 slot：限制映射 H*(BG) → H*(BC_2^rank)"""

    slot_id: str
    rank: int
    restriction: AlgebraHom
    is_center: bool = False

    @property
    def ring(self) -> F2GradedAlgebra:
        return self.restriction.target


@dataclass
class CohomData:
    key: str
    algebra: F2GradedAlgebra
    slots: List[CohomSlot]
    center: Optional[CohomSlot] = None
    source: str = ""

    @property
    def all_slots(self) -> List[CohomSlot]:
        """一般 slot 在前，中心（若有）在最後"""

        return self.slots + ([self.center] if self.center is not None else [])

    def slot(self, slot_id: str) -> CohomSlot:
        for s in self.all_slots:
            if s.slot_id == slot_id:
                return s
        raise KeyError(f"{self.key}: no slot {slot_id!r}")

    def summary(self) -> str:
        ranks: str = ", ".join(f"{s.slot_id}:{s.rank}" for s in self.slots)
        center: str = f", center rank {self.center.rank}" if self.center is not None else ""
        return (
            f"{self.key}: {self.algebra.ngens} generators, {len(self.algebra.relations)} relations, "
            f"slots [{ranks}]{center}"
        )


@dataclass
class _Block:
    slot_id: str
    rank: int
    is_center: bool
    line: int
    maps: Dict[str, str] = field(default_factory=dict)


def _fail(line_no: int, message: str) -> CohomDataError:
    return CohomDataError(f"line {line_no}: {message}")


def _parse_int(text: str, line_no: int, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise _fail(line_no, f"{what} must be an integer, got {text!r}") from None


def parse_cohom_text(text: str, key: str = "file") -> CohomData:
    """
    - Description:
        解析上同調資料文字，建立代數與各 slot 的限制映射
    - Parameters:
        - text: str
            資料檔內容
        - key: str
            NAME 行缺席時使用的名稱
    - Return:
        - CohomData
    - Raises:
        - CohomDataError
            格式錯誤、未知生成元或缺少 MAP
        - RelationViolationError
            某個限制映射沒有把關係送到 0
    """

    generators: List[Tuple[str, int]] = []
    relations: List[Tuple[int, str]] = []
    blocks: List[_Block] = []
    name: str = key

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line: str = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()

        if keyword == "NAME":
            name = rest
        elif keyword == "GEN":
            parts: List[str] = rest.split()
            if len(parts) != 2:
                raise _fail(line_no, f"GEN needs a name and a degree: {line!r}")
            generators.append((parts[0], _parse_int(parts[1], line_no, "degree")))
        elif keyword == "REL":
            relations.append((line_no, rest))
        elif keyword == "SLOT":
            parts = rest.split()
            if len(parts) != 2:
                raise _fail(line_no, f"SLOT needs an id and a rank: {line!r}")
            blocks.append(_Block(parts[0], _parse_int(parts[1], line_no, "rank"), False, line_no))
        elif keyword == "CENTER":
            blocks.append(_Block("Z", _parse_int(rest, line_no, "rank"), True, line_no))
        elif keyword == "MAP":
            if not blocks:
                raise _fail(line_no, "MAP outside of a SLOT or CENTER block")
            gen, arrow, image = rest.partition("->")
            if not arrow:
                raise _fail(line_no, f"MAP needs `gen -> polynomial`: {line!r}")
            blocks[-1].maps[gen.strip()] = image.strip()
        else:
            raise _fail(line_no, f"unknown keyword {keyword!r}")

    if not generators:
        raise CohomDataError(f"{name}: no generators")
    if len({g for g, _ in generators}) != len(generators):
        raise CohomDataError(f"{name}: duplicate generator names")
    if sum(b.is_center for b in blocks) > 1:
        raise CohomDataError(f"{name}: more than one CENTER block")

    names: List[str] = [g for g, _ in generators]
    relation_polys: List[F2Poly] = []
    for line_no, rel in relations:
        try:
            relation_polys.append(parse_polynomial(rel, names))
        except ValueError as e:
            raise _fail(line_no, f"bad relation {rel!r}: {e}") from None
    try:
        algebra: F2GradedAlgebra = F2GradedAlgebra(
            generators, relation_polys, grading=Grading.COHOMOLOGY, name=f"H*({name})"
        )
    except ValueError as e:
        raise CohomDataError(f"{name}: {e}") from None

    slots: List[CohomSlot] = []
    center: Optional[CohomSlot] = None
    for block in blocks:
        missing: List[str] = [g for g, _ in generators if g not in block.maps]
        if missing:
            raise _fail(block.line, f"slot {block.slot_id} has no MAP for {', '.join(missing)}")
        ring: F2GradedAlgebra = chow_ring_of_elementary_abelian(block.rank, Grading.COHOMOLOGY)
        try:
            hom: AlgebraHom = AlgebraHom(algebra, ring, block.maps, name=f"res[{name}:{block.slot_id}]")
        except ValueError as e:
            raise _fail(block.line, str(e)) from None
        slot: CohomSlot = CohomSlot(block.slot_id, block.rank, hom, block.is_center)
        if block.is_center:
            center = slot
        else:
            slots.append(slot)

    data: CohomData = CohomData(name, algebra, slots, center)
    logger.debug(f"parsed {data.summary()}")
    return data


def builtin_cohom_keys() -> List[str]:
    return list(BUILTIN_COHOM_FILES)


def load_cohom(source: str) -> CohomData:
    """
    - Description:
        讀入上同調資料；`builtin:<id>` 或 `<id>` 取內建檔，其他視為路徑
    - Parameters:
        - source: str
            例如 "builtin:64#138"、"32#27"、"/path/to/file.txt"
    - Return:
        - CohomData
    """

    key: str = source[len(BUILTIN_PREFIX):] if source.startswith(BUILTIN_PREFIX) else source
    if key in BUILTIN_COHOM_FILES:
        path: Path = DATA_DIR_PATH / BUILTIN_COHOM_FILES[key]
    elif source.startswith(BUILTIN_PREFIX):
        raise CohomDataError(f"unknown built-in presentation {key!r}; known: {', '.join(BUILTIN_COHOM_FILES)}")
    else:
        path = Path(source)

    if not path.is_file():
        raise CohomDataError(f"cohomology data file not found: {path}")
    data: CohomData = parse_cohom_text(path.read_text(encoding="utf-8"), key=path.stem)
    data.source = str(path)
    logger.info(f"loaded {data.summary()}")
    return data
