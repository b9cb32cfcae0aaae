import itertools
from concurrent.futures import Future, ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from core.algebra import (
    AlgebraHom,
    F2Echelon,
    F2GradedAlgebra,
    F2Poly,
    Monomial,
    canonical_modulo,
    frobenius,
    poly_add,
    solve,
    subalgebra_relations,
    substitute,
)
from core.algebra.f2 import indices_of
from core.characters import CharacterTable
from core.cohomology.loader import CohomData, CohomSlot
from core.cohomology.restriction import RestrictionCatalog
from core.config import DEGREE_BOUND, NUM_THREADS
from core.gamma import ChernMonomial
from core.groups import FiniteMatrixGroup, elementary_abelian_subgroups, elementary_center
from core.utils import CohomDataError, CycleMapUnsolvableError, Grading, GroupFamily, log_thread

"""
循環類映射的候選解

Chern 類 c_i(ρ) 在 H^{2i}(BG, F_2) 的像 y 必須在每個基本交換 slot 上限制成
c_i(ρ)|_V 的平方。資料檔的 slot 座標是來源自己的，因此逐 slot 枚舉：
    (1) 同秩的矩陣子群 V；
    (2) V 的基底與 slot 座標之間的對應：預設只用置換（每個座標特徵標 X_i 對到單一個
        slot 座標，k 個座標的單項式對到 k 個座標的單項式），coordinate_only=False 時
        放寬到整個 GL(r, 2)；
只保留每個目標都落在 res_slot 像中的 (V, M)。再對 slot 到子群的單射做回溯，
每加入一個 slot 就解一次堆疊後的 F_2 線性系統，無解即剪枝。
"""


Rows = Tuple[F2Poly, ...]  # x_j ↦ slot 座標的線性式
Option = Tuple[int, Tuple[F2Poly, ...], List[Rows]]  # (子群 index, 目標, 座標對應)

CHERN_GENERATORS: Dict[GroupFamily, List[str]] = {
    GroupFamily.H: ["c1(f(1,0))", "c1(phi)", "c2(phi)"],
    GroupFamily.L: ["c1(A)", "c1(B)", "c1(C)", "c2(A)", "c2(B)", "c2(C)"],
    GroupFamily.G: [
        "c1(phi0)",
        "c1(phiinf)",
        "c1(psi)",
        "c2(phi0)",
        "c2(phiinf)",
        "c2(psi)",
        "c3(psi)",
        "c4(psi)",
    ],
}

BUILTIN_FOR_FAMILY: Dict[GroupFamily, str] = {
    GroupFamily.H: "8#3",
    GroupFamily.L: "32#27",
    GroupFamily.G: "64#138",
}

DEFAULT_CHOICES: Dict[GroupFamily, List[Tuple[str, str, str]]] = {
    # c_1(φ_0) 在第一個 slot 上與 b_{1,1}² 一致；消去 b_{1,1} ↔ b_{1,2} 的對稱
    GroupFamily.G: [("c1(phi0)", "b1_1^2", "1")],
}


@dataclass(frozen=True)
class ChernGenerator:
    label: str
    index: int

    @classmethod
    def parse(cls, text: str) -> "ChernGenerator":
        monomial: ChernMonomial = ChernMonomial.parse(text)
        if len(monomial.factors) != 1:
            raise ValueError(f"{text!r} is not a single Chern class")
        label, index = monomial.factors[0]
        return cls(label, index)

    @property
    def name(self) -> str:
        return f"c{self.index}({self.label})"


@dataclass
class SlotPairing:
    """slot 與矩陣子群的配對，以及 V 的基底 x_j 在 slot 座標下的像"""

    slot_id: str
    subgroup: str
    identification: List[str]
    alternatives: int


@dataclass
class CycleClassCandidate:
    """
    - images: 生成元 → H*(BG) 中的元素（對零空間取標準代表元）
    - kernels: 生成元 → 聯合限制的零空間基底；非空時候選是一個仿射族
    - pairing: 每個 slot 配到的子群與座標對應
    - certificate: slot → 重新限制後是否與平方的 Chern 限制一致
    - realizations: 給出同一組像的配對數
    """

    images: Dict[str, F2Poly]
    kernels: Dict[str, List[F2Poly]]
    pairing: List[SlotPairing]
    certificate: Dict[str, bool] = field(default_factory=dict)
    realizations: int = 1

    @property
    def is_sound(self) -> bool:
        return all(self.certificate.values())

    def formatted(self, algebra: F2GradedAlgebra) -> Dict[str, str]:
        return {g: algebra.format(y) for g, y in self.images.items()}

    def lines(self, algebra: F2GradedAlgebra) -> List[str]:
        out: List[str] = [f"{g} -> {text}" for g, text in self.formatted(algebra).items()]
        for g, kernel in self.kernels.items():
            if kernel:
                out.append(f"{g}: undetermined modulo {', '.join(algebra.format(k) for k in kernel)}")
        for p in self.pairing:
            out.append(f"slot {p.slot_id} <- {p.subgroup}: x -> ({', '.join(p.identification)})")
        return out


@dataclass
class _System:
    columns: Tuple[int, ...]
    target: int
    width: int


def _unit(r: int, k: int) -> Monomial:
    return tuple(1 if j == k else 0 for j in range(r))


def _linear_form(mask: int, r: int) -> F2Poly:
    return frozenset(_unit(r, k) for k in indices_of(mask))


@lru_cache(maxsize=None)
def general_linear_rows(r: int) -> Tuple[Rows, ...]:
    """GL(r, 2) 的所有元素，以各列（x_j 的像）表示，依位元遮罩字典序"""

    result: List[Rows] = []
    for masks in itertools.product(range(1, 1 << r), repeat=r):
        if F2Echelon.from_vectors(masks).rank == r:
            result.append(tuple(_linear_form(m, r) for m in masks))
    return tuple(result)


@lru_cache(maxsize=None)
def permutation_rows(r: int) -> Tuple[Rows, ...]:
    """座標置換：x_j ↦ 單一個 slot 座標"""

    return tuple(
        tuple(_linear_form(1 << k, r) for k in perm) for perm in itertools.permutations(range(r))
    )


class CycleMapSolver:
    """
    - Description:
        對給定的群與上同調資料求出所有相容的循環類映射候選
    - Parameters:
        - table: CharacterTable
            G 的特徵標表
        - cohom: CohomData
        - generators: Sequence[str]
            Chern 類生成元，例如 "c2(psi)"
        - num_threads: int
        - coordinate_only: bool
            只允許座標置換的對應；False 時枚舉整個 GL(r, 2)
    """

    def __init__(
        self,
        table: CharacterTable,
        cohom: CohomData,
        generators: Sequence[str],
        num_threads: int = NUM_THREADS,
        coordinate_only: bool = True,
    ):
        self.table: CharacterTable = table
        self.group: FiniteMatrixGroup = table.group
        self.cohom: CohomData = cohom
        self.generators: List[ChernGenerator] = [ChernGenerator.parse(g) for g in generators]
        self.num_threads: int = num_threads
        self.coordinate_only: bool = coordinate_only
        self.algebra: F2GradedAlgebra = cohom.algebra

        self.degrees: List[int] = sorted({2 * g.index for g in self.generators})
        self.algebra.seal(max(self.degrees), num_threads)
        self.basis: Dict[int, List[Monomial]] = {e: self.algebra.quotient_basis(e) for e in self.degrees}

        # slot → 次數 → res_slot(basis) 的座標與其張成空間
        self._columns: Dict[str, Dict[int, List[int]]] = {}
        self._images: Dict[str, Dict[int, F2Echelon]] = {}
        for slot in cohom.all_slots:
            self._columns[slot.slot_id] = {}
            self._images[slot.slot_id] = {}
            for e in self.degrees:
                slot.ring.monomials(e)
                cols: List[int] = [
                    slot.restriction.image_vector(frozenset({m}), e) for m in self.basis[e]
                ]
                self._columns[slot.slot_id][e] = cols
                self._images[slot.slot_id][e] = F2Echelon.from_vectors(cols)

        self.subgroups: List[FiniteMatrixGroup] = elementary_abelian_subgroups(self.group, maximal_only=True)
        self.center: Optional[FiniteMatrixGroup] = None
        if cohom.center is not None:
            self.center = elementary_center(self.group)
            if len(self.center.basis) != cohom.center.rank:
                raise CohomDataError(
                    f"{cohom.key}: center slot has rank {cohom.center.rank}, "
                    f"Z({self.group.name}) has rank {len(self.center.basis)}"
                )

    # === 單一 slot ===

    def _targets(self, catalog: RestrictionCatalog, rows: Rows, slot: CohomSlot) -> Optional[Tuple[F2Poly, ...]]:
        targets: List[Optional[F2Poly]] = [None] * len(self.generators)
        order: List[int] = sorted(range(len(self.generators)), key=lambda j: self.generators[j].index)
        for j in order:
            g: ChernGenerator = self.generators[j]
            e: int = 2 * g.index
            target: F2Poly = frobenius(substitute(catalog.chern(g.label, g.index), rows, slot.rank))
            if target and slot.ring.to_vector(target, e) not in self._images[slot.slot_id][e]:
                return None
            targets[j] = target
        return tuple(targets)

    @log_thread
    def _slot_classes(
        self, slot: CohomSlot, subgroup: FiniteMatrixGroup
    ) -> Dict[Tuple[F2Poly, ...], List[Rows]]:
        """(slot, V) 上可行的座標對應，依目標分組"""

        catalog: RestrictionCatalog = RestrictionCatalog(self.table, subgroup)
        classes: Dict[Tuple[F2Poly, ...], List[Rows]] = {}
        identifications = permutation_rows if self.coordinate_only else general_linear_rows
        for rows in identifications(slot.rank):
            targets = self._targets(catalog, rows, slot)
            if targets is not None:
                classes.setdefault(targets, []).append(rows)
        logger.debug(
            f"slot {slot.slot_id} vs {subgroup.name}: {sum(len(v) for v in classes.values())} "
            f"identifications in {len(classes)} target classes"
        )
        return classes

    def slot_options(self) -> Dict[str, List[Option]]:
        """
        - Description:
            每個 slot 的候選 (子群 index, 目標, 座標對應)；中心 slot 只配 Z(G)，index 為 -1
        - Return:
            - Dict[str, List[Option]]
        """

        tasks: List[Tuple[str, int]] = []
        futures: List[Future] = []
        with ThreadPoolExecutor(max_workers=self.num_threads) as executor:
            for slot in self.cohom.slots:
                for v, subgroup in enumerate(self.subgroups):
                    if len(subgroup.basis) == slot.rank:
                        tasks.append((slot.slot_id, v))
                        futures.append(executor.submit(self._slot_classes, slot, subgroup))
            if self.cohom.center is not None:
                tasks.append((self.cohom.center.slot_id, -1))
                futures.append(executor.submit(self._slot_classes, self.cohom.center, self.center))

        options: Dict[str, List[Option]] = {
            s.slot_id: [] for s in self.cohom.all_slots
        }
        for (slot_id, v), future in zip(tasks, futures):
            for targets, rows in future.result().items():
                options[slot_id].append((v, targets, rows))
        return options

    # === 聯合求解 ===

    def _extend(
        self, systems: List[_System], slot: CohomSlot, targets: Tuple[F2Poly, ...]
    ) -> Optional[List[_System]]:
        extended: List[_System] = []
        for g, system, target in zip(self.generators, systems, targets):
            e: int = 2 * g.index
            cols: List[int] = self._columns[slot.slot_id][e]
            width: int = len(slot.ring.monomials(e))
            new: _System = _System(
                tuple(c | (s << system.width) for c, s in zip(system.columns, cols)),
                system.target | (slot.ring.to_vector(target, e) << system.width),
                system.width + width,
            )
            if solve(new.columns, new.target) is None:
                return None
            extended.append(new)
        return extended

    def _search(
        self,
        order: List[CohomSlot],
        options: Dict[str, List[Option]],
        depth: int,
        used: Tuple[int, ...],
        chosen: List[Option],
        systems: List[_System],
        found: List[Tuple[List[_System], List[Option]]],
    ) -> None:
        if depth == len(order):
            found.append((systems, list(chosen)))
            return
        slot: CohomSlot = order[depth]
        for option in options[slot.slot_id]:
            v, targets, _ = option
            if v >= 0 and v in used:
                continue
            extended = self._extend(systems, slot, targets)
            if extended is None:
                continue
            chosen.append(option)
            self._search(order, options, depth + 1, used + (v,), chosen, extended, found)
            chosen.pop()

    @log_thread
    def _branch(
        self, order: List[CohomSlot], options: Dict[str, List[Option]], first: Option
    ) -> List[Tuple[List[_System], List[Option]]]:
        found: List[Tuple[List[_System], List[Option]]] = []
        empty: List[_System] = [
            _System(tuple(0 for _ in self.basis[2 * g.index]), 0, 0) for g in self.generators
        ]
        extended = self._extend(empty, order[0], first[1])
        if extended is not None:
            self._search(order, options, 1, (first[0],), [first], extended, found)
        return found

    def _candidate(
        self, order: List[CohomSlot], systems: List[_System], chosen: List[Option]
    ) -> CycleClassCandidate:
        images: Dict[str, F2Poly] = {}
        kernels: Dict[str, List[F2Poly]] = {}
        for g, system in zip(self.generators, systems):
            basis: List[Monomial] = self.basis[2 * g.index]
            particular, kernel = solve(system.columns, system.target)
            canonical: int = canonical_modulo(particular, kernel)
            images[g.name] = frozenset(basis[k] for k in indices_of(canonical))
            kernels[g.name] = [frozenset(basis[k] for k in indices_of(t)) for t in kernel]

        pairing: List[SlotPairing] = []
        for slot, (v, _, rows_list) in zip(order, chosen):
            subgroup: FiniteMatrixGroup = self.center if v < 0 else self.subgroups[v]
            rows: Rows = rows_list[0]
            pairing.append(
                SlotPairing(
                    slot.slot_id,
                    subgroup.name,
                    [slot.ring.format(r) for r in rows],
                    len(rows_list),
                )
            )
        candidate: CycleClassCandidate = CycleClassCandidate(images, kernels, pairing)
        candidate.certificate = self.certify(candidate, order, chosen)
        return candidate

    def certify(
        self,
        candidate: CycleClassCandidate,
        order: List[CohomSlot],
        chosen: List[Option],
    ) -> Dict[str, bool]:
        """重新把每個像限制到每個 slot，比對平方後的 Chern 限制"""

        certificate: Dict[str, bool] = {}
        for slot, (_, targets, _) in zip(order, chosen):
            certificate[slot.slot_id] = all(
                slot.restriction.apply(candidate.images[g.name]) == target
                for g, target in zip(self.generators, targets)
            )
        return certificate

    def residuals(self, options: Dict[str, List[Option]]) -> Dict[str, int]:
        """slot → 可行的 (子群, 目標) 類別數；0 代表該 slot 單獨就無解"""

        return {slot_id: len(opts) for slot_id, opts in options.items()}

    def solve(self, choices: Sequence[Tuple[str, str, str]] = ()) -> List[CycleClassCandidate]:
        """
        - Description:
            枚舉所有 slot 配對與座標對應，回傳相容的候選（依像的字典序排序並去重）
        - Parameters:
            - choices: Sequence[Tuple[str, str, str]]
                (生成元, H*(BG) 中的元素, slot id)：只保留像與該元素在此 slot 上可一致者
        - Return:
            - List[CycleClassCandidate]
        - Raises:
            - CycleMapUnsolvableError
                沒有任何配對可解
        """

        options = self.slot_options()
        order: List[CohomSlot] = sorted(self.cohom.slots, key=lambda s: -s.rank)
        if self.cohom.center is not None:
            order.append(self.cohom.center)

        futures: List[Future] = []
        with ThreadPoolExecutor(max_workers=self.num_threads) as executor:
            for first in options[order[0].slot_id]:
                futures.append(executor.submit(self._branch, order, options, first))
        solutions: List[Tuple[List[_System], List[Option]]] = [s for future in futures for s in future.result()]

        if not solutions:
            residuals: Dict[str, int] = self.residuals(options)
            raise CycleMapUnsolvableError(
                f"{self.group.name} vs {self.cohom.key}: no consistent pairing; "
                f"feasible classes per slot: {residuals}"
            )

        merged: Dict[Tuple[Tuple[Monomial, ...], ...], CycleClassCandidate] = {}
        for systems, chosen in solutions:
            candidate: CycleClassCandidate = self._candidate(order, systems, chosen)
            key = tuple(tuple(sorted(candidate.images[g.name])) for g in self.generators)
            if key in merged:
                merged[key].realizations += 1
            else:
                merged[key] = candidate

        candidates: List[CycleClassCandidate] = [merged[k] for k in sorted(merged)]
        candidates = [c for c in candidates if all(self.satisfies(c, choice) for choice in choices)]
        logger.info(
            f"{self.group.name} vs {self.cohom.key}: {len(solutions)} pairing solutions, "
            f"{len(candidates)} candidate(s) after {len(choices)} choice(s)"
        )
        return candidates

    def satisfies(self, candidate: CycleClassCandidate, choice: Tuple[str, str, str]) -> bool:
        """候選族中是否有成員使 res_slot(y_g − element) = 0"""

        generator, element, slot_id = choice
        slot: CohomSlot = self.cohom.slot(slot_id)
        e: int = 2 * ChernGenerator.parse(generator).index
        difference: F2Poly = poly_add(candidate.images[generator], self.algebra.parse(element))
        restricted: int = slot.restriction.image_vector(difference, e)
        family: F2Echelon = F2Echelon.from_vectors(
            slot.restriction.image_vector(k, e) for k in candidate.kernels[generator]
        )
        return restricted in family


def solve_cycle_map(
    table: CharacterTable,
    cohom: CohomData,
    generators: Sequence[str],
    choices: Sequence[Tuple[str, str, str]] = (),
    num_threads: int = NUM_THREADS,
    coordinate_only: bool = True,
) -> List[CycleClassCandidate]:
    """
    - Description:
        列出所有與自然性相容的循環類映射候選
    - Parameters:
        - table: CharacterTable
        - cohom: CohomData
        - generators: Sequence[str]
        - choices: Sequence[Tuple[str, str, str]]
            用來消去上同調表示對稱的選擇
        - num_threads: int
        - coordinate_only: bool
    - Return:
        - List[CycleClassCandidate]
    """

    return CycleMapSolver(table, cohom, generators, num_threads, coordinate_only).solve(choices)


def chern_source_algebra(generators: Sequence[str], name: str = "Chern") -> F2GradedAlgebra:
    """以 Chern 類為生成元的自由代數（Chow 分次，deg c_i = i）"""

    parsed: List[ChernGenerator] = [ChernGenerator.parse(g) for g in generators]
    return F2GradedAlgebra([(g.name, g.index) for g in parsed], grading=Grading.CHOW, name=name)


def cycle_class_hom(
    cohom: CohomData, generators: Sequence[str], candidate: CycleClassCandidate
) -> AlgebraHom:
    source: F2GradedAlgebra = chern_source_algebra(generators, name=f"Chern({cohom.key})")
    return AlgebraHom(source, cohom.algebra, candidate.images, name=f"cl[{cohom.key}]")


def kernel_mod2(
    cohom: CohomData,
    generators: Sequence[str],
    candidate: CycleClassCandidate,
    bound: int = DEGREE_BOUND,
    num_threads: int = NUM_THREADS,
) -> Tuple[AlgebraHom, Dict[int, List[F2Poly]]]:
    """
    - Description:
        Chern 子環的表示：自由代數經候選映射的核，逐次數給出關係生成元
    - Parameters:
        - cohom: CohomData
        - generators: Sequence[str]
        - candidate: CycleClassCandidate
        - bound: int
            最高 Chow 次數
        - num_threads: int
    - Return:
        - Tuple[AlgebraHom, Dict[int, List[F2Poly]]]
            (循環類映射, 次數 → 關係)
    """

    hom: AlgebraHom = cycle_class_hom(cohom, generators, candidate)
    relations: Dict[int, List[F2Poly]] = subalgebra_relations(hom, bound, num_threads)
    total: int = sum(len(v) for v in relations.values())
    logger.info(f"{hom.name}: {total} relation(s) through degree {bound}")
    return hom, relations
