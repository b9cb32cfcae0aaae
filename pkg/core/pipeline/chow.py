from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from core.algebra import (
    AlgebraHom,
    F2Echelon,
    F2GradedAlgebra,
    F2Poly,
    format_polynomial,
    hom_kernel,
    ideal_span,
    nullspace,
    row_space_equal,
)
from core.algebra.f2 import bits_of
from core.characters import CharacterTable, character_table, restrict
from core.cohomology import (
    CHERN_GENERATORS,
    DEFAULT_CHOICES,
    ChernGenerator,
    CohomData,
    CycleClassCandidate,
    RestrictionCatalog,
    cycle_class_hom,
    kernel_mod2,
    load_cohom,
    solve_cycle_map,
)
from core.gamma import (
    ChernMonomial,
    GammaFiltration,
    IntegerLattice,
    RelationBasis,
    chern_class,
    smith_form,
)
from core.groups import (
    FiniteMatrixGroup,
    build_group,
    elementary_abelian_subgroups,
    elementary_center,
    named_subgroup,
)
from core.pipeline.config import PRESENTATION_BOUND, PipelineConfig
from core.pipeline.reference import (
    CANDIDATE_COUNTS,
    CHERN_ORDERS,
    CYCLE_KERNEL_DIM,
    DEGREE3_SUBGROUPS,
    G_DEGREE3_BASIS,
    G_IMAGES,
    GAMMA_KERNEL,
    GRADED_PIECES,
    H_CENTER_POWERS,
    H_COMMON_IMAGES,
    H_GENERATORS,
    H_INTEGRAL_DEGREE2,
    H_SWAPPED_IMAGES,
    L_IMAGES,
    OVERLAP_DIM,
    PRINTED_GAMMA_KERNEL,
    PRINTED_OVERLAP,
    PRINTED_RESTRICTION_KERNEL,
    PRINTED_RESTRICTIONS,
    RELATIONS,
    RESTRICTION_KERNEL_DIM,
    RESTRICTIONS,
    columns_to_bits,
    relation_counts,
)
from core.pipeline.report import Report
from core.utils import GroupFamily, PipelineCheckError

"""
Chow 環的計算

- H：γ 分次的階、C4 → Z(H) 的限制論證與 mod 2 核組成整數表示
- L、G：循環類映射候選 → mod 2 核給出的表示
- G：A^3 的 15 個單項式上的限制矩陣、γ 核與循環類核的維度記帳
"""


EXPECTED_IMAGES: Dict[GroupFamily, Dict[str, str]] = {
    GroupFamily.L: L_IMAGES,
    GroupFamily.G: G_IMAGES,
}

CHOW_TARGETS: Dict[str, GroupFamily] = {
    "H": GroupFamily.H,
    "L": GroupFamily.L,
    "G": GroupFamily.G,
}


# -----------------------------------------------------------------------------
# 比較工具
# -----------------------------------------------------------------------------


def images_agree(
    algebra: F2GradedAlgebra, candidate: CycleClassCandidate, generator: str, text: str
) -> bool:
    """候選的像與 text 相差聯合限制零空間中的元素"""

    d: int = 2 * ChernGenerator.parse(generator).index
    diff: F2Poly = candidate.images[generator] ^ algebra.parse(text)
    family: F2Echelon = F2Echelon.from_vectors(
        algebra.reduce_vector(algebra.to_vector(k, d), d) for k in candidate.kernels[generator]
    )
    return algebra.reduce_vector(algebra.to_vector(diff, d), d) in family


def same_ideal(
    source: F2GradedAlgebra,
    found: Dict[int, List[F2Poly]],
    expected: Dict[int, List[str]],
    bound: int,
) -> bool:
    """兩組關係在次數 1..bound 生成相同的理想"""

    found_all: List[F2Poly] = [r for d in sorted(found) for r in found[d]]
    expected_all: List[F2Poly] = [source.parse(t) for d in sorted(expected) for t in expected[d]]
    for d in range(1, bound + 1):
        if not row_space_equal(
            ideal_span(source, found_all, d).rows, ideal_span(source, expected_all, d).rows
        ):
            return False
    return True


def _parity(v: int) -> int:
    return bin(v).count("1") % 2


def restriction_functionals(
    table: CharacterTable, subgroup: FiniteMatrixGroup, basis: Sequence[ChernMonomial]
) -> List[int]:
    """
    - Description:
        basis 經限制到 subgroup 後的 mod 2 線性泛函（以極大基本交換子群偵測）
    - Parameters:
        - table: CharacterTable
            母群的特徵標表
        - subgroup: FiniteMatrixGroup
        - basis: Sequence[ChernMonomial]
    - Return:
        - List[int]
            限制矩陣列空間的梯形基底；第 k 個位元對應 basis[k]
    """

    functionals: List[int] = []
    for v in elementary_abelian_subgroups(subgroup, maximal_only=True):
        images: List[F2Poly] = RestrictionCatalog(table, v).monomials(basis)
        targets = sorted(set().union(*images))
        for target in targets:
            functionals.append(bits_of(k for k, image in enumerate(images) if target in image))
    return F2Echelon.from_vectors(functionals).rows


def joint_kernel(functionals: Sequence[int], size: int) -> List[int]:
    """所有泛函共同的零空間"""

    columns: List[int] = [
        bits_of(i for i, f in enumerate(functionals) if (f >> k) & 1) for k in range(size)
    ]
    return nullspace(columns)


def kernel_overlap(rows: Sequence[int], functionals: Sequence[int]) -> List[int]:
    """span(rows) 中被所有泛函送到 0 的部分"""

    independent: List[int] = F2Echelon.from_vectors(rows).rows
    columns: List[int] = [
        bits_of(i for i, f in enumerate(functionals) if _parity(f & g)) for g in independent
    ]
    overlap: List[int] = []
    for tag in nullspace(columns):
        combined: int = 0
        for j, g in enumerate(independent):
            if (tag >> j) & 1:
                combined ^= g
        overlap.append(combined)
    return overlap


def _relation_bits(relations: RelationBasis) -> List[int]:
    return [bits_of(k for k, c in enumerate(row) if c % 2) for row in relations.rows]


# -----------------------------------------------------------------------------
# γ 分次
# -----------------------------------------------------------------------------


def graded_stage(key: str, filtration: GammaFiltration, report: Report) -> None:
    """gr^1、gr^2 的不變因子與 Chern 類的階"""

    for n in (1, 2):
        report.check(
            f"{key}.gr{n}",
            f"invariant factors of gr^{n} of the gamma filtration on {key}",
            filtration.graded_piece(n).invariant_factors,
            GRADED_PIECES[(key, n)],
        )
    orders: Dict[str, int] = {
        name: filtration.chern_order(ChernMonomial.parse(name)) for name in CHERN_ORDERS[key]
    }
    report.check(f"{key}.chern_orders", f"orders of Chern classes in gr on {key}", orders, CHERN_ORDERS[key])


# -----------------------------------------------------------------------------
# 循環類映射與 mod 2 表示
# -----------------------------------------------------------------------------


def cycle_stage(
    family: GroupFamily, table: CharacterTable, config: PipelineConfig, report: Report
) -> Tuple[CohomData, List[CycleClassCandidate]]:
    """
    - Description:
        解循環類映射，檢查候選數、健全性與列出的像
    - Parameters:
        - family: GroupFamily
        - table: CharacterTable
        - config: PipelineConfig
        - report: Report
    - Return:
        - Tuple[CohomData, List[CycleClassCandidate]]
            上同調資料與候選；L、G 時與列出的像一致者排在最前
    """

    key: str = family.value
    cohom: CohomData = load_cohom(config.cohom_source(family))
    algebra: F2GradedAlgebra = cohom.algebra
    generators: List[str] = CHERN_GENERATORS[family]
    choices = DEFAULT_CHOICES.get(family, []) if config.fix_symmetry else []
    candidates: List[CycleClassCandidate] = solve_cycle_map(
        table, cohom, generators, choices, config.num_threads
    )

    claim: str = f"number of cycle class map candidates for {key}"
    if family == GroupFamily.G and not config.fix_symmetry:
        report.record(f"{key}.cycle.candidates", claim + " (generator symmetry not fixed)", len(candidates))
    else:
        report.check(f"{key}.cycle.candidates", claim, len(candidates), CANDIDATE_COUNTS[family])
    report.check(
        f"{key}.cycle.sound",
        "every candidate restricts to the squared Chern restrictions on each slot",
        all(c.is_sound for c in candidates),
        True,
    )

    if family == GroupFamily.H:
        for generator, text in H_COMMON_IMAGES.items():
            report.check(
                f"H.cycle.{generator}",
                f"{generator} maps to {text} in every candidate",
                all(images_agree(algebra, c, generator, text) for c in candidates),
                True,
            )
        report.check(
            "H.cycle.c1(f(1,0))",
            "the two candidates differ by swapping b1_0 and b1_1",
            sorted(algebra.format(c.images["c1(f(1,0))"]) for c in candidates),
            sorted(H_SWAPPED_IMAGES),
        )
    else:
        expected: Dict[str, str] = EXPECTED_IMAGES[family]
        for generator, text in expected.items():
            report.check(
                f"{key}.cycle.{generator}",
                f"{generator} maps to {text}",
                any(images_agree(algebra, c, generator, text) for c in candidates),
                True,
            )
        matching: List[CycleClassCandidate] = [
            c for c in candidates if all(images_agree(algebra, c, g, t) for g, t in expected.items())
        ]
        report.check(
            f"{key}.cycle.images",
            "exactly one candidate carries every listed image",
            len(matching),
            1,
        )
        candidates = matching + [c for c in candidates if c not in matching]

    for i, candidate in enumerate(candidates):
        report.note(f"-- {key} candidate {i + 1} --", *candidate.lines(algebra))
    return cohom, candidates


def presentation_stage(
    family: GroupFamily,
    cohom: CohomData,
    candidate: CycleClassCandidate,
    config: PipelineConfig,
    report: Report,
) -> Optional[Tuple[AlgebraHom, Dict[int, List[F2Poly]]]]:
    """mod 2 表示：逐次數的新關係數與理想相等；次數上界不足時兩項都 SKIP"""

    key: str = family.value
    counts_claim: str = f"new relations per degree in the mod 2 presentation of {key}"
    ideal_claim: str = f"relations generate the listed ideal of {key} through each degree"
    if not config.presentation_enabled:
        reason: str = f"degree bound {config.degree_bound} < {PRESENTATION_BOUND}"
        report.skip(f"{key}.presentation.counts", counts_claim, reason, relation_counts(family, PRESENTATION_BOUND))
        report.skip(f"{key}.presentation.ideal", ideal_claim, reason, True)
        return None

    bound: int = config.degree_bound
    hom, found = kernel_mod2(cohom, CHERN_GENERATORS[family], candidate, bound, config.num_threads)
    report.check(
        f"{key}.presentation.counts",
        counts_claim,
        {d: len(v) for d, v in found.items()},
        relation_counts(family, bound),
    )
    report.check(
        f"{key}.presentation.ideal",
        ideal_claim,
        same_ideal(hom.source, found, RELATIONS[family], bound),
        True,
    )
    report.check(
        f"{key}.presentation.sound",
        "every relation maps to zero in cohomology",
        all(not hom.apply(r) for rels in found.values() for r in rels),
        True,
    )

    report.note(f"-- {key} mod 2 relations --")
    for d in sorted(found):
        for relation in found[d]:
            report.note(f"[{d}] {hom.source.format(relation)}")
    return hom, found


def kernel_notes(hom: AlgebraHom, bound: int, report: Report) -> None:
    """未約化的完整核基底，讓關係的約化步驟可以逐項核對"""

    report.note(f"-- {hom.name}: full kernel basis --")
    for d in range(1, bound + 1):
        kernel: List[F2Poly] = hom_kernel(hom, d)
        report.note(f"degree {d}: dim {len(kernel)}")
        report.note(*(f"  {hom.source.format(k)}" for k in kernel))


# -----------------------------------------------------------------------------
# H 的整數表示
# -----------------------------------------------------------------------------


def _integral_rows(relations: RelationBasis, rows: Sequence[Dict[str, int]]) -> List[List[int]]:
    positions: Dict[ChernMonomial, int] = {m: k for k, m in enumerate(relations.monomials)}
    vectors: List[List[int]] = []
    for row in rows:
        vector: List[int] = [0] * len(relations.monomials)
        for text, coefficient in row.items():
            vector[positions[ChernMonomial.parse(text)]] = coefficient
        vectors.append(vector)
    return vectors


def h_integral_stage(table: CharacterTable, filtration: GammaFiltration, config: PipelineConfig, report: Report) -> None:
    """
    - Description:
        整數表示的三個來源：
        - gr^2 中的整數關係與列出的關係生成相同的格，Smith 形給回 gr^2
        - c_2(φ)^i 在 C4 上的階為 4
        - c_2(φ)^i 限制到 Z(H) 為 x^{2i} ≠ 0
    """

    group: FiniteMatrixGroup = table.group
    relations: RelationBasis = filtration.chern_relations(2, H_GENERATORS)
    size: int = len(relations.monomials)
    listed: List[List[int]] = _integral_rows(relations, H_INTEGRAL_DEGREE2)
    report.check(
        "H.integral.degree2",
        "integral degree-2 relations are 2c1(f)^2, 2c1(f)c1(phi), 2c1(phi)^2, 4c2(phi), c1(f)^2 + c1(f)c1(phi)",
        IntegerLattice.from_rows(size, relations.rows) == IntegerLattice.from_rows(size, listed),
        True,
    )
    diagonal, _ = smith_form(listed, size)
    report.check(
        "H.integral.snf",
        "Smith form of the listed relations gives gr^2",
        [d for d in diagonal if d > 1],
        filtration.graded_piece(2).invariant_factors,
    )

    c4: FiniteMatrixGroup = named_subgroup(group, "C_H(1,1)")
    z: FiniteMatrixGroup = elementary_center(group)
    report.check(
        "H.integral.center_in_c4",
        "Z(H) lies in the cyclic subgroup generated by E12 E23",
        set(z.keys.tolist()) <= set(c4.keys.tolist()),
        True,
    )
    c4_table: CharacterTable = character_table(c4)
    c4_filtration: GammaFiltration = GammaFiltration(c4_table, num_threads=config.num_threads)
    c2_phi = chern_class(restrict(table.rep("phi"), c4, c4_table), 2)
    catalog: RestrictionCatalog = RestrictionCatalog(table, z)
    for i in range(1, H_CENTER_POWERS + 1):
        report.check(
            f"H.integral.c4.c2^{i}",
            f"c2(phi)^{i} restricted to C4 has order 4 in gr^{2 * i}",
            c4_filtration.graded_piece(2 * i).order_of(c2_phi**i),
            4,
        )
        on_center: F2Poly = catalog.monomial(ChernMonomial.of(*[("phi", 2)] * i))
        report.check(
            f"H.integral.center.c2^{i}",
            f"c2(phi)^{i} restricted to Z(H) is nonzero mod 2",
            format_polynomial(on_center, ["x1"]),
            f"x1^{2 * i}",
        )


# -----------------------------------------------------------------------------
# G 的三次記帳
# -----------------------------------------------------------------------------


def degree_three_stage(
    table: CharacterTable,
    filtration: GammaFiltration,
    cohom: CohomData,
    candidate: CycleClassCandidate,
    config: PipelineConfig,
    report: Report,
) -> None:
    """
    - Description:
        A^3 的 15 個單項式上：
        - 五個子群的限制矩陣（列空間）與其共同核
        - gr^3 中的 mod 2 關係（γ 核）與它和限制核的交
        - 循環類映射在 A^3 上的核，以及維度平衡 dim γ 核 − dim 循環類核 = rank H^3
    - Parameters:
        - table: CharacterTable
            U(4,2) 的表
        - filtration: GammaFiltration
        - cohom: CohomData
        - candidate: CycleClassCandidate
        - config: PipelineConfig
        - report: Report
    """

    group: FiniteMatrixGroup = table.group
    basis: List[ChernMonomial] = [ChernMonomial.parse(text) for text in G_DEGREE3_BASIS]
    size: int = len(basis)

    orders: List[int] = [filtration.chern_order(m) for m in basis]
    report.check("G.deg3.torsion", "every degree-3 monomial is 2-torsion in gr^3", max(orders) <= 2, True)

    functionals: List[int] = []
    for label in DEGREE3_SUBGROUPS:
        rows: List[int] = restriction_functionals(table, named_subgroup(group, label), basis)
        report.check(
            f"G.deg3.restriction.{label}",
            f"restriction matrix to {label} (row space)",
            row_space_equal(rows, columns_to_bits(RESTRICTIONS[label])),
            True,
        )
        if RESTRICTIONS[label] != PRINTED_RESTRICTIONS[label]:
            report.record(
                f"G.deg3.restriction.{label}.printed",
                f"printed restriction matrix to {label} has the computed row space",
                row_space_equal(rows, columns_to_bits(PRINTED_RESTRICTIONS[label])),
            )
        functionals.extend(rows)

    restriction_kernel: List[int] = joint_kernel(functionals, size)
    report.check(
        "G.deg3.restriction_kernel.dim",
        "dimension of the joint kernel of the five restrictions",
        len(restriction_kernel),
        RESTRICTION_KERNEL_DIM,
    )
    report.check(
        "G.deg3.restriction_kernel.printed",
        "the printed kernel rows lie in the joint kernel",
        F2Echelon.from_vectors(restriction_kernel).contains_all(columns_to_bits(PRINTED_RESTRICTION_KERNEL)),
        True,
    )

    gamma_kernel: List[int] = F2Echelon.from_vectors(
        _relation_bits(filtration.chern_relations(3, modulus=2, monomials=basis))
    ).rows
    report.check(
        "G.deg3.gamma_kernel",
        "mod 2 relations in gr^3 among the 15 monomials (row space)",
        row_space_equal(gamma_kernel, columns_to_bits(GAMMA_KERNEL)),
        True,
    )
    report.check("G.deg3.gamma_kernel.dim", "dimension of the gamma kernel", len(gamma_kernel), len(GAMMA_KERNEL))
    report.record(
        "G.deg3.gamma_kernel.printed",
        "printed gamma kernel has the computed row space",
        row_space_equal(gamma_kernel, columns_to_bits(PRINTED_GAMMA_KERNEL)),
    )

    overlap: List[int] = kernel_overlap(gamma_kernel, functionals)
    report.check(
        "G.deg3.overlap.dim",
        "dimension of gamma kernel intersected with the restriction kernel",
        len(overlap),
        OVERLAP_DIM,
    )

    hom: AlgebraHom = cycle_class_hom(cohom, CHERN_GENERATORS[GroupFamily.G], candidate)
    cycle_kernel: List[int] = nullspace(
        [hom.image_vector(hom.source.parse(str(m)), 3) for m in basis]
    )
    report.check(
        "G.deg3.cycle_kernel",
        "kernel of the cycle class map on the 15 monomials is spanned by the printed overlap rows",
        row_space_equal(cycle_kernel, columns_to_bits(PRINTED_OVERLAP)),
        True,
    )
    report.check(
        "G.deg3.cycle_kernel.dim", "dimension of the cycle class kernel", len(cycle_kernel), CYCLE_KERNEL_DIM
    )
    report.check(
        "G.deg3.cycle_kernel.inside",
        "cycle class kernel lies in the gamma kernel and the restriction kernel",
        F2Echelon.from_vectors(overlap).contains_all(cycle_kernel),
        True,
    )
    report.check(
        "G.deg3.balance",
        "dim gamma kernel - dim cycle class kernel = rank H^3(BG, Z)",
        len(gamma_kernel) - len(cycle_kernel),
        config.h3_rank,
    )
    logger.info(
        f"G degree 3: restriction kernel {len(restriction_kernel)}, gamma kernel {len(gamma_kernel)}, "
        f"overlap {len(overlap)}, cycle kernel {len(cycle_kernel)}"
    )


# -----------------------------------------------------------------------------
# 三個群
# -----------------------------------------------------------------------------


def chow_h(config: PipelineConfig, report: Report) -> None:
    table: CharacterTable = character_table(build_group("H"))
    filtration: GammaFiltration = GammaFiltration(table, num_threads=config.num_threads)
    graded_stage("H", filtration, report)
    h_integral_stage(table, filtration, config, report)

    cohom, candidates = cycle_stage(GroupFamily.H, table, config, report)
    presentation_stage(GroupFamily.H, cohom, candidates[0], config, report)
    report.note(
        "CH*(BH) = Z[c1(f(1,0)), c1(phi), c2(phi)] / "
        "(2*c1(f(1,0)), 2*c1(phi), 4*c2(phi), c1(f(1,0))^2 + c1(f(1,0))*c1(phi))"
    )


def chow_l(config: PipelineConfig, report: Report) -> None:
    table: CharacterTable = character_table(build_group("L"))
    cohom, candidates = cycle_stage(GroupFamily.L, table, config, report)
    presentation_stage(GroupFamily.L, cohom, candidates[0], config, report)


def chow_g(config: PipelineConfig, report: Report) -> None:
    table: CharacterTable = character_table(build_group("G"))
    filtration: GammaFiltration = GammaFiltration(table, num_threads=config.num_threads)
    graded_stage("G", filtration, report)

    cohom, candidates = cycle_stage(GroupFamily.G, table, config, report)
    found = presentation_stage(GroupFamily.G, cohom, candidates[0], config, report)
    if found is not None:
        kernel_notes(found[0], config.degree_bound, report)
    degree_three_stage(table, filtration, cohom, candidates[0], config, report)


_STAGES = {
    GroupFamily.H: chow_h,
    GroupFamily.L: chow_l,
    GroupFamily.G: chow_g,
}


def cmd_chow(target: str, config: Optional[PipelineConfig] = None, strict: bool = True) -> Report:
    """
    - Description:
        H、L、G 其中之一的 Chow 環表示與其全部子檢查
    - Parameters:
        - target: str
            "H"、"L" 或 "G"
        - config: Optional[PipelineConfig]
            省略時使用 PipelineConfig.default()
        - strict: bool
            True 時第一個失敗的子檢查以 PipelineCheckError 中止
    - Return:
        - Report
    """

    family: Optional[GroupFamily] = CHOW_TARGETS.get(target.strip().upper())
    if family is None:
        raise PipelineCheckError(f"chow target must be one of {', '.join(CHOW_TARGETS)}, got {target!r}")
    config = config if config is not None else PipelineConfig.default()

    report: Report = Report(f"chow_{family.value}", strict=strict)
    logger.info(f"chow {family.value}: degree bound {config.degree_bound}, {config.num_threads} thread(s)")
    _STAGES[family](config, report)
    logger.info(report.summary())
    return report
