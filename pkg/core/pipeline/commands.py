import re
from collections import Counter
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from core.characters import CharacterTable, character_table
from core.cohomology import (
    BUILTIN_FOR_FAMILY,
    BUILTIN_PREFIX,
    CHERN_GENERATORS,
    CohomData,
    CycleClassCandidate,
    load_cohom,
    solve_cycle_map,
)
from core.gamma import ChernMonomial, GammaFiltration, GradedPiece
from core.groups import (
    FiniteMatrixGroup,
    build_group,
    class_count_g,
    class_count_h,
    class_count_l,
    conjugacy_classes,
    count_commuting_pairs,
)
from core.pipeline.config import PipelineConfig
from core.pipeline.reference import (
    CANDIDATE_COUNTS,
    CHERN_ORDERS,
    CLASS_COUNTS,
    DEGREE_MULTISETS,
    GRADED_PIECES,
)
from core.pipeline.report import Report
from core.utils import CharacterTableError, GroupFamily, PipelineCheckError

"""群資訊、特徵標表、γ 分次與循環類映射的單項子命令"""


CLOSED_FORMS: Dict[GroupFamily, Tuple[str, Callable[[int], int]]] = {
    GroupFamily.H: ("p^2 + p - 1", class_count_h),
    GroupFamily.L: ("2p^3 - p", class_count_l),
    GroupFamily.G: ("p(p-1) + p(p+1)(p-1) + p^3", class_count_g),
}

Choice = Tuple[str, str, str]


def report_name(prefix: str, key: str) -> str:
    """群代號轉成可當檔名的報告名稱"""

    return f"{prefix}_" + re.sub(r"[^A-Za-z0-9]+", "_", key).strip("_")


def degree_multiset(degrees: Sequence[int]) -> str:
    """[1, 1, 2] → "1^2,2" """

    counts: Counter = Counter(degrees)
    return ",".join(f"{d}^{n}" if n > 1 else str(d) for d, n in sorted(counts.items()))


def parse_choice(text: str) -> Choice:
    """
    - Description:
        CLI 的 `<generator>=<cohomology element>@<slot>`，例如 `c1(phi0)=b1_1^2@1`
    - Parameters:
        - text: str
    - Return:
        - Tuple[str, str, str]
            (生成元, 上同調元素, slot id)
    """

    body, sep, slot = text.rpartition("@")
    generator, eq, element = body.partition("=")
    if not sep or not eq or not generator.strip() or not element.strip() or not slot.strip():
        raise PipelineCheckError(f"choice must look like GEN=ELEMENT@SLOT, got {text!r}")
    return generator.strip(), element.strip(), slot.strip()


# -----------------------------------------------------------------------------
# group info
# -----------------------------------------------------------------------------


def cmd_group_info(key: str) -> Report:
    """階、中心與類數；類數同時以 Burnside 計數與封閉公式核對"""

    group: FiniteMatrixGroup = build_group(key)
    report: Report = Report(report_name("group", key))
    classes: int = len(conjugacy_classes(group).classes)

    report.note(
        f"group: {group.name} (key {key})",
        f"matrices: {group.n}x{group.n} over F_{group.p}",
        f"family: {group.family.value}",
        f"order: {group.order}",
        f"exponent: {group.exponent}",
        f"center order: {len(group.center_indices)}",
        f"generators: {len(group.generators)}",
        f"conjugacy classes: {classes}",
    )

    report.check(
        f"{key}.classes.burnside",
        "class count equals #{commuting pairs} / |G|",
        classes,
        count_commuting_pairs(group) // group.order,
    )
    if group.family in CLOSED_FORMS:
        formula, count = CLOSED_FORMS[group.family]
        report.check(f"{key}.classes.closed_form", f"class count equals {formula} at p = {group.p}", classes, count(group.p))
    if key in CLASS_COUNTS:
        report.check(f"{key}.classes", f"{key} has {CLASS_COUNTS[key]} conjugacy classes", classes, CLASS_COUNTS[key])
    return report


# -----------------------------------------------------------------------------
# table
# -----------------------------------------------------------------------------


def cmd_table(key: str) -> Report:
    """特徵標表本身、正交性、Σ deg² = |G| 與次數分佈"""

    group: FiniteMatrixGroup = build_group(key)
    table: CharacterTable = character_table(group)
    report: Report = Report(report_name("table", key))
    report.note(f"{group.name}: {len(table)} irreducibles ({table.source})", *table.dump())

    try:
        table.check()
        orthonormal: bool = True
    except CharacterTableError as e:
        logger.warning(f"{group.name}: {e}")
        orthonormal = False
    report.check(f"{key}.table.orthonormal", "row and column orthogonality hold exactly", orthonormal, True)
    report.check(
        f"{key}.table.sum_of_squares",
        "sum of squared degrees equals the group order",
        sum(d * d for d in table.degrees),
        group.order,
    )
    if key in DEGREE_MULTISETS:
        report.check(f"{key}.table.degrees", "multiset of irreducible degrees", degree_multiset(table.degrees), DEGREE_MULTISETS[key])
    else:
        report.note(f"degrees: {degree_multiset(table.degrees)}")
    return report


# -----------------------------------------------------------------------------
# gr-gamma
# -----------------------------------------------------------------------------


def cmd_gr_gamma(key: str, degree: int, config: Optional[PipelineConfig] = None) -> Report:
    """
    - Description:
        gr^degree 的不變因子；有已知值時核對，並核對次數相符的 Chern 類的階
    - Parameters:
        - key: str
            群代號
        - degree: int
            ≥ 1
        - config: Optional[PipelineConfig]
    - Return:
        - Report
    """

    if degree < 1:
        raise PipelineCheckError(f"graded piece degree must be >= 1, got {degree}")
    config = config if config is not None else PipelineConfig.default()
    group: FiniteMatrixGroup = build_group(key)
    table: CharacterTable = character_table(group)
    filtration: GammaFiltration = GammaFiltration(table, num_threads=config.num_threads)
    piece: GradedPiece = filtration.graded_piece(degree)

    report: Report = Report(report_name(f"gr{degree}", key))
    report.note(
        f"gr^{degree} of {group.name}: invariant factors {piece.invariant_factors}",
        f"free rank {piece.free_rank}, order {piece.order}",
    )
    report.check(
        f"{key}.gr{degree}.divides_order",
        "every invariant factor divides |G|",
        all(group.order % f == 0 for f in piece.invariant_factors),
        True,
    )
    if (key, degree) in GRADED_PIECES:
        report.check(
            f"{key}.gr{degree}",
            f"invariant factors of gr^{degree}",
            piece.invariant_factors,
            GRADED_PIECES[(key, degree)],
        )
    for name, order in CHERN_ORDERS.get(key, {}).items():
        monomial: ChernMonomial = ChernMonomial.parse(name)
        if monomial.degree == degree:
            report.check(f"{key}.order.{name}", f"{name} has order {order} in gr^{degree}", filtration.chern_order(monomial), order)
    return report


# -----------------------------------------------------------------------------
# cycle-map
# -----------------------------------------------------------------------------


def cmd_cycle_map(
    key: str,
    cohom_source: Optional[str] = None,
    choices: Sequence[Choice] = (),
    config: Optional[PipelineConfig] = None,
) -> Report:
    """
    - Description:
        列出群與上同調資料之間的循環類映射候選
    - Parameters:
        - key: str
            H / L / G 族的群代號
        - cohom_source: Optional[str]
            `builtin:<id>` 或檔案路徑；省略時用該族內建的資料
        - choices: Sequence[Tuple[str, str, str]]
            消去對稱的選擇
        - config: Optional[PipelineConfig]
    - Return:
        - Report
    """

    config = config if config is not None else PipelineConfig.default()
    group: FiniteMatrixGroup = build_group(key)
    if group.family not in CHERN_GENERATORS:
        raise PipelineCheckError(f"{group.name}: no Chern generators registered for family {group.family.value}")
    source: str = cohom_source or f"{BUILTIN_PREFIX}{BUILTIN_FOR_FAMILY[group.family]}"
    cohom: CohomData = load_cohom(source)
    table: CharacterTable = character_table(group)
    candidates: List[CycleClassCandidate] = solve_cycle_map(
        table, cohom, CHERN_GENERATORS[group.family], choices, config.num_threads
    )

    report: Report = Report(report_name("cycle_map", key))
    report.note(f"{group.name} -> {cohom.summary()}")
    for i, candidate in enumerate(candidates):
        report.note(f"-- candidate {i + 1} ({candidate.realizations} pairing(s)) --", *candidate.lines(cohom.algebra))

    report.check(
        f"{key}.cycle.sound",
        "every candidate restricts to the squared Chern restrictions on each slot",
        all(c.is_sound for c in candidates),
        True,
    )
    builtin: bool = source == f"{BUILTIN_PREFIX}{BUILTIN_FOR_FAMILY[group.family]}"
    if builtin and not choices and group.p == 2 and group.family != GroupFamily.G:
        report.check(f"{key}.cycle.candidates", "number of candidates", len(candidates), CANDIDATE_COUNTS[group.family])
    else:
        report.record(f"{key}.cycle.candidates", "number of candidates", len(candidates))
    return report
