from itertools import combinations
from typing import Dict, List, Tuple

import numpy as np

from core.algebra import AlgebraHom, F2GradedAlgebra, F2Poly, hom_kernel
from core.characters import CharacterTable, VirtualRep, character_table, exterior_power
from core.chern import chern_of_exterior, chern_of_tensor, elementary_of_values
from core.cohomology import CHERN_GENERATORS, CohomData, cycle_class_hom, load_cohom, solve_cycle_map
from core.gamma import GammaFiltration
from core.groups import build_group
from core.pipeline.config import PipelineConfig
from core.pipeline.report import Report
from core.utils import GroupFamily

"""
性質檢查

以 config.seed 固定的隨機樣本檢查 λ 環、γ 濾鏈、萬用多項式與 F_2 代數的一般性質。
樣本只影響檢查的覆蓋面，不影響任何計算結果。
"""


SAMPLES: int = 12
PROPERTY_GROUPS: List[str] = ["H", "L"]
FILTRATION_DEPTH: int = 3
TENSOR_SHAPES: List[Tuple[int, int]] = [(1, 2), (2, 2), (2, 3)]
EXTERIOR_SHAPES: List[Tuple[int, int]] = [(3, 2), (4, 2), (4, 3)]
POLY_DEGREES: List[int] = [2, 4, 6]


def _chern_values(label: str, roots: List[int]) -> Dict[Tuple[str, int], int]:
    return {(label, i): elementary_of_values(roots, i) for i in range(1, len(roots) + 1)}


def lambda_ring_properties(key: str, table: CharacterTable, rng: np.random.Generator, report: Report) -> None:
    """Adams 運算的乘法性與 λ^2 的 Whitney 公式"""

    pairs = rng.integers(0, len(table), size=(SAMPLES, 2))
    adams_ok: bool = True
    whitney_ok: bool = True
    for i, j in pairs.tolist():
        x: VirtualRep = VirtualRep.basis(table, i)
        y: VirtualRep = VirtualRep.basis(table, j)
        for k in (2, 3):
            adams_ok &= (x * y).adams(k) == x.adams(k) * y.adams(k)
        whitney_ok &= exterior_power(x + y, 2) == exterior_power(x, 2) + x * y + exterior_power(y, 2)
    report.check(f"{key}.prop.adams", "Adams operations are multiplicative", adams_ok, True)
    report.check(f"{key}.prop.whitney", "lambda^2(x + y) = lambda^2 x + xy + lambda^2 y", whitney_ok, True)


def filtration_properties(
    key: str, table: CharacterTable, rng: np.random.Generator, config: PipelineConfig, report: Report
) -> None:
    """Γ^{n+1} ⊆ Γ^n、Γ^a·Γ^b ⊆ Γ^{a+b}、不變因子整除 |G|"""

    filtration: GammaFiltration = GammaFiltration(table, num_threads=config.num_threads)
    order: int = table.group.order

    report.check(
        f"{key}.prop.gamma_chain",
        f"Gamma^(n+1) lies in Gamma^n for n < {FILTRATION_DEPTH}",
        all(
            filtration.lattice(n).lattice.contains_lattice(filtration.lattice(n + 1).lattice)
            for n in range(FILTRATION_DEPTH)
        ),
        True,
    )

    products_ok: bool = True
    for a, b in ((1, 1), (1, 2)):
        left: List[List[int]] = filtration.lattice(a).basis
        right: List[List[int]] = filtration.lattice(b).basis
        for _ in range(SAMPLES):
            u: VirtualRep = VirtualRep(table, left[int(rng.integers(len(left)))])
            v: VirtualRep = VirtualRep(table, right[int(rng.integers(len(right)))])
            products_ok &= bool(filtration.in_gamma(u * v, a + b))
    report.check(f"{key}.prop.gamma_products", "Gamma^a Gamma^b lies in Gamma^(a+b)", products_ok, True)

    report.check(
        f"{key}.prop.invariant_factors",
        "invariant factors of gr^n divide |G|",
        all(
            order % f == 0
            for n in range(1, FILTRATION_DEPTH + 1)
            for f in filtration.graded_piece(n).invariant_factors
        ),
        True,
    )


def chern_properties(rng: np.random.Generator, report: Report) -> None:
    """萬用多項式在整數根上的取值等於根的基本對稱函數"""

    tensor_ok: bool = True
    for n, m in TENSOR_SHAPES:
        for _ in range(SAMPLES):
            alphas: List[int] = [int(v) for v in rng.integers(-4, 5, size=n)]
            betas: List[int] = [int(v) for v in rng.integers(-4, 5, size=m)]
            values = {**_chern_values("x", alphas), **_chern_values("y", betas)}
            roots: List[int] = [a + b for a in alphas for b in betas]
            tensor_ok &= all(
                chern_of_tensor(n, m, k).evaluate(values) == elementary_of_values(roots, k)
                for k in range(n * m + 1)
            )
    report.check("chern.prop.tensor", "c_k(x (x) y) specializes to e_k of the root sums", tensor_ok, True)

    exterior_ok: bool = True
    for n, l in EXTERIOR_SHAPES:
        for _ in range(SAMPLES):
            alphas = [int(v) for v in rng.integers(-4, 5, size=n)]
            roots = [sum(subset) for subset in combinations(alphas, l)]
            values = _chern_values("x", alphas)
            exterior_ok &= all(
                chern_of_exterior(n, l, k).evaluate(values) == elementary_of_values(roots, k)
                for k in range(len(roots) + 1)
            )
    report.check("chern.prop.exterior", "c_k(lambda^l x) specializes to e_k of the l-fold root sums", exterior_ok, True)


def algebra_properties(rng: np.random.Generator, config: PipelineConfig, report: Report) -> None:
    """正規形冪等；循環類映射的核確實被送到 0"""

    cohom: CohomData = load_cohom(config.cohom_source(GroupFamily.H))
    algebra: F2GradedAlgebra = cohom.algebra

    idempotent: bool = True
    for d in POLY_DEGREES:
        monomials = algebra.monomials(d)
        for _ in range(SAMPLES):
            mask = rng.integers(0, 2, size=len(monomials))
            poly: F2Poly = frozenset(m for m, bit in zip(monomials, mask.tolist()) if bit)
            once: F2Poly = algebra.normal_form(poly)
            idempotent &= algebra.normal_form(once) == once
    report.check("f2.prop.normal_form", "normal form is idempotent", idempotent, True)

    generators: List[str] = CHERN_GENERATORS[GroupFamily.H]
    table: CharacterTable = character_table(build_group("H"))
    candidate = solve_cycle_map(table, cohom, generators, num_threads=config.num_threads)[0]
    hom: AlgebraHom = cycle_class_hom(cohom, generators, candidate)
    report.check(
        "f2.prop.kernel_sound",
        "every computed kernel element maps to zero",
        all(not hom.apply(k) for d in range(1, config.degree_bound + 1) for k in hom_kernel(hom, d)),
        True,
    )


def property_stage(config: PipelineConfig, report: Report) -> None:
    rng: np.random.Generator = np.random.default_rng(config.seed)
    for key in PROPERTY_GROUPS:
        table: CharacterTable = character_table(build_group(key))
        lambda_ring_properties(key, table, rng, report)
        filtration_properties(key, table, rng, config, report)
    chern_properties(rng, report)
    algebra_properties(rng, config, report)
