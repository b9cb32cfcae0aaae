from concurrent.futures import Future, ThreadPoolExecutor
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from loguru import logger

from core.algebra.f2 import (
    ZERO,
    F2Echelon,
    F2Poly,
    Monomial,
    bits_of,
    indices_of,
    monomial_mul,
    monomials_of_degree,
    nullspace,
    one,
    poly_add,
    poly_mul,
    substitute,
    weighted_degree,
)
from core.config import NUM_THREADS
from core.utils import Grading, RelationViolationError, log_thread

"""
F_2 上的分次交換代數 F_2[g_1, ..., g_n]/(relations)

每個次數 d 的理想分量由「所有 單項式·關係」展開後做列消去（spinning）得到；
單項式依字典序給位元位置，字典序最大的單項式在最高位，因此 pivot 即首項。
特徵 2 下分次交換即交換，不需處理符號。
"""


# -----------------------------------------------------------------------------
# 文字格式
# -----------------------------------------------------------------------------


def _split_top(text: str, sep: str) -> List[str]:
    # 只在括號外切開
    parts: List[str] = []
    depth: int = 0
    start: int = 0
    for pos, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:pos])
            start = pos + 1
    parts.append(text[start:])
    return parts


def parse_polynomial(text: str, names: Sequence[str]) -> F2Poly:
    """
    - Description:
        `b1_0^2 + b1_1*c2_2 + 1` 形式，係數取模 2
    - Parameters:
        - text: str
        - names: Sequence[str]
            變數名稱，依序對應指數向量的座標
    - Return:
        - F2Poly
    """

    index: Dict[str, int] = {name: i for i, name in enumerate(names)}
    n: int = len(names)
    body: str = text.replace(" ", "")
    if body in ("", "0"):
        return ZERO
    result: F2Poly = ZERO
    for term in _split_top(body, "+"):
        if not term:
            raise ValueError(f"empty term in {text!r}")
        coeff: int = 1
        exps: List[int] = [0] * n
        for factor in _split_top(term, "*"):
            base, power = factor, 1
            head, sep, tail = factor.rpartition("^")
            if sep and tail.isdigit() and head.count("(") == head.count(")"):
                base, power = head, int(tail)
            if base.isdigit():
                coeff *= int(base) ** power
            elif base in index:
                exps[index[base]] += power
            else:
                raise ValueError(f"unknown variable {base!r} in {text!r}")
        if coeff % 2:
            result = poly_add(result, frozenset({tuple(exps)}))
    return result


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts: List[str] = [name + (f"^{e}" if e > 1 else "") for name, e in zip(names, m) if e]
    return "*".join(parts) if parts else "1"


def format_polynomial(poly: F2Poly, names: Sequence[str], weights: Optional[Sequence[int]] = None) -> str:
    if not poly:
        return "0"
    weights = weights or [1] * len(names)
    ordered: List[Monomial] = sorted(poly, key=lambda m: (weighted_degree(m, weights), m), reverse=True)
    return " + ".join(format_monomial(m, names) for m in ordered)


# -----------------------------------------------------------------------------
# 分次代數
# -----------------------------------------------------------------------------


class F2GradedAlgebra:
    """
    F_2 上由加權生成元與齊次關係給出的分次代數

    理想分量 ideal(d) 在第一次用到時計算並快取；seal(bound) 可用執行緒池一次算完。
    """

    def __init__(
        self,
        generators: Sequence[Tuple[str, int]],
        relations: Sequence[Union[str, F2Poly]] = (),
        grading: Grading = Grading.COHOMOLOGY,
        name: str = "A",
    ):
        self.name: str = name
        self.grading: Grading = grading
        self.names: List[str] = [g for g, _ in generators]
        self.degrees: List[int] = [int(d) for _, d in generators]
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"{name}: generator names must be distinct")
        if any(d < 1 for d in self.degrees):
            raise ValueError(f"{name}: generator degrees must be >= 1")
        self._index: Dict[str, int] = {g: i for i, g in enumerate(self.names)}

        self.relations: List[F2Poly] = []
        for rel in relations:
            poly: F2Poly = self.parse(rel) if isinstance(rel, str) else rel
            if not poly:
                raise ValueError(f"{name}: zero relation")
            self.degree_of(poly)
            self.relations.append(poly)

        self._monomials: Dict[int, List[Monomial]] = {}
        self._positions: Dict[int, Dict[Monomial, int]] = {}
        self._ideals: Dict[int, F2Echelon] = {}

    def __repr__(self) -> str:
        return f"F2GradedAlgebra({self.name}, {len(self.names)} generators, {len(self.relations)} relations)"

    @property
    def ngens(self) -> int:
        return len(self.names)

    @property
    def is_free(self) -> bool:
        return not self.relations

    # === 元素 ===

    def parse(self, text: str) -> F2Poly:
        return parse_polynomial(text, self.names)

    def format(self, poly: F2Poly) -> str:
        return format_polynomial(poly, self.names, self.degrees)

    def generator(self, name: str) -> F2Poly:
        if name not in self._index:
            raise KeyError(f"{self.name} has no generator {name!r}")
        return frozenset({tuple(int(i == self._index[name]) for i in range(self.ngens))})

    def one(self) -> F2Poly:
        return one(self.ngens)

    def degree_of(self, poly: F2Poly) -> Optional[int]:
        """齊次元素的次數；零元素為 None"""

        degrees = {weighted_degree(m, self.degrees) for m in poly}
        if len(degrees) > 1:
            raise ValueError(f"{self.name}: {self.format(poly)} is not homogeneous")
        return degrees.pop() if degrees else None

    def homogeneous_parts(self, poly: F2Poly) -> Dict[int, F2Poly]:
        parts: Dict[int, set] = {}
        for m in poly:
            parts.setdefault(weighted_degree(m, self.degrees), set()).add(m)
        return {d: frozenset(ms) for d, ms in parts.items()}

    # === 每個次數的座標 ===

    def monomials(self, d: int) -> List[Monomial]:
        if d not in self._monomials:
            mons: List[Monomial] = monomials_of_degree(self.degrees, d)
            self._positions[d] = {m: i for i, m in enumerate(mons)}
            self._monomials[d] = mons
        return self._monomials[d]

    def to_vector(self, poly: F2Poly, d: int) -> int:
        self.monomials(d)
        positions: Dict[Monomial, int] = self._positions[d]
        try:
            return bits_of(positions[m] for m in poly)
        except KeyError as exc:
            raise ValueError(f"{self.name}: {self.format(poly)} has a term outside degree {d}") from exc

    def from_vector(self, v: int, d: int) -> F2Poly:
        mons: List[Monomial] = self.monomials(d)
        return frozenset(mons[i] for i in indices_of(v))

    # === 理想與商 ===

    def _spin(self, d: int) -> F2Echelon:
        echelon: F2Echelon = F2Echelon()
        for rel in self.relations:
            e: int = weighted_degree(next(iter(rel)), self.degrees)
            if e > d:
                continue
            for m in self.monomials(d - e):
                echelon.insert(self.to_vector(frozenset(monomial_mul(m, r) for r in rel), d))
        return echelon

    def ideal(self, d: int) -> F2Echelon:
        """關係理想的次數 d 分量"""

        if d not in self._ideals:
            self.monomials(d)
            self._ideals[d] = self._spin(d)
        return self._ideals[d]

    @log_thread
    def _spin_task(self, d: int) -> Tuple[int, F2Echelon]:
        self.monomials(d)
        return d, self._spin(d)

    def seal(self, bound: int, num_threads: int = NUM_THREADS) -> None:
        """預先算好 0..bound 的理想分量"""

        missing: List[int] = [d for d in range(bound + 1) if d not in self._ideals]
        for d in missing:
            self.monomials(d)
        futures: List[Future] = []
        with ThreadPoolExecutor(max_workers=num_threads) as executor:
            for d in missing:
                futures.append(executor.submit(self._spin_task, d))
        for future in futures:
            d, echelon = future.result()
            self._ideals[d] = echelon
        logger.info(f"{self.name}: sealed degrees 0..{bound}")

    def quotient_basis(self, d: int) -> List[Monomial]:
        """
        - Description:
            次數 d 商空間的單項式基底（非 pivot 的單項式），首項在前
        - Parameters:
            - d: int
        - Return:
            - List[Monomial]
        """

        mons: List[Monomial] = self.monomials(d)
        pivots = set(self.ideal(d).pivots)
        return [mons[i] for i in range(len(mons) - 1, -1, -1) if i not in pivots]

    def dimension(self, d: int) -> int:
        return len(self.monomials(d)) - self.ideal(d).rank

    def reduce_vector(self, v: int, d: int) -> int:
        return self.ideal(d).reduce(v)

    def normal_form(self, poly: F2Poly) -> F2Poly:
        result: F2Poly = ZERO
        for d, part in self.homogeneous_parts(poly).items():
            result = poly_add(result, self.from_vector(self.reduce_vector(self.to_vector(part, d), d), d))
        return result

    def is_zero(self, poly: F2Poly) -> bool:
        return not self.normal_form(poly)

    def multiply(self, a: F2Poly, b: F2Poly) -> F2Poly:
        return self.normal_form(poly_mul(a, b))

    def element(self, text: str) -> F2Poly:
        return self.normal_form(self.parse(text))


# -----------------------------------------------------------------------------
# 同態
# -----------------------------------------------------------------------------


def _scale(source: F2GradedAlgebra, target: F2GradedAlgebra) -> int:
    # Chow 次數 d 對應上同調次數 2d
    return 2 if source.grading == Grading.CHOW and target.grading == Grading.COHOMOLOGY else 1


class AlgebraHom:
    """
    由生成元的像決定的代數同態；建構時檢查來源的每條關係都被送到 0
    """

    def __init__(
        self,
        source: F2GradedAlgebra,
        target: F2GradedAlgebra,
        images: Mapping[str, Union[str, F2Poly]],
        name: str = "f",
    ):
        self.source: F2GradedAlgebra = source
        self.target: F2GradedAlgebra = target
        self.name: str = name
        self.scale: int = _scale(source, target)

        missing: List[str] = [g for g in source.names if g not in images]
        if missing:
            raise ValueError(f"{name}: no image given for {', '.join(missing)}")
        unknown: List[str] = [g for g in images if g not in source.names]
        if unknown:
            raise ValueError(f"{name}: {', '.join(unknown)} are not generators of {source.name}")

        self.images: List[F2Poly] = []
        for g, deg in zip(source.names, source.degrees):
            raw = images[g]
            image: F2Poly = target.normal_form(target.parse(raw) if isinstance(raw, str) else raw)
            image_degree: Optional[int] = target.degree_of(image)
            if image_degree is not None and image_degree != self.scale * deg:
                raise ValueError(
                    f"{name}: image of {g} has degree {image_degree}, expected {self.scale * deg}"
                )
            self.images.append(image)

        for rel in source.relations:
            image = self.apply(rel)
            if image:
                raise RelationViolationError(name, source.format(rel), target.format(image))

    def image_of(self, generator: str) -> F2Poly:
        return self.images[self.source.names.index(generator)]

    def apply(self, poly: F2Poly) -> F2Poly:
        return self.target.normal_form(substitute(poly, self.images, self.target.ngens))

    def image_vector(self, poly: F2Poly, d: int) -> int:
        """poly（來源次數 d）之像在目標次數 scale·d 的約化座標"""

        e: int = self.scale * d
        raw: F2Poly = substitute(poly, self.images, self.target.ngens)
        return self.target.reduce_vector(self.target.to_vector(raw, e), e)


def hom_kernel(f: AlgebraHom, d: int) -> List[F2Poly]:
    """
    - Description:
        f 在來源次數 d 的核（以來源商基底表示）
    - Parameters:
        - f: AlgebraHom
        - d: int
    - Return:
        - List[F2Poly]
            核的一組基底
    """

    basis: List[Monomial] = f.source.quotient_basis(d)
    columns: List[int] = [f.image_vector(frozenset({m}), d) for m in basis]
    return [frozenset(basis[k] for k in indices_of(tag)) for tag in nullspace(columns)]


def restrict_ideal_membership(f: AlgebraHom, poly: F2Poly) -> bool:
    """poly 是否落在 f 的核（零理想的原像）中"""

    return not f.apply(poly)


def ideal_span(algebra: F2GradedAlgebra, relations: Sequence[F2Poly], d: int) -> F2Echelon:
    """由 relations 生成的理想在次數 d 的分量（在 algebra 的單項式座標中）"""

    echelon: F2Echelon = F2Echelon()
    for rel in relations:
        e: Optional[int] = algebra.degree_of(rel)
        if e is None or e > d:
            continue
        for m in algebra.monomials(d - e):
            shifted: F2Poly = frozenset(monomial_mul(m, r) for r in rel)
            echelon.insert(algebra.reduce_vector(algebra.to_vector(shifted, d), d))
    return echelon


def subalgebra_relations(
    f: AlgebraHom, bound: int, num_threads: int = NUM_THREADS
) -> Dict[int, List[F2Poly]]:
    """
    - Description:
        自由代數 A 經 f 的核，逐次數列出新的關係生成元
    - Parameters:
        - f: AlgebraHom
            來源必須是自由代數
        - bound: int
            最高來源次數
        - num_threads: int
    - Return:
        - Dict[int, List[F2Poly]]
            次數 → 新生成元（已對較低次關係生成的部分取餘）
    """

    if not f.source.is_free:
        raise ValueError(f"{f.source.name} is not free; subalgebra relations need a free source")

    f.target.seal(f.scale * bound, num_threads)
    futures: List[Future] = []
    with ThreadPoolExecutor(max_workers=num_threads) as executor:
        for d in range(1, bound + 1):
            futures.append(executor.submit(log_thread(hom_kernel), f, d))
    kernels: List[List[F2Poly]] = [future.result() for future in futures]

    source: F2GradedAlgebra = f.source
    found: Dict[int, List[F2Poly]] = {}
    accumulated: List[F2Poly] = []
    for d, kernel in zip(range(1, bound + 1), kernels):
        spun: F2Echelon = ideal_span(source, accumulated, d)
        new: List[F2Poly] = []
        for element in kernel:
            remainder: int = spun.reduce(source.to_vector(element, d))
            if remainder:
                spun.insert(remainder)
                new.append(source.from_vector(remainder, d))
        found[d] = new
        accumulated.extend(new)
        logger.info(f"{f.name}: degree {d} kernel dim {len(kernel)}, {len(new)} new relation(s)")
    return found


def chow_ring_of_elementary_abelian(rank: int, grading: Grading = Grading.CHOW) -> F2GradedAlgebra:
    """
    - Description:
        CH*(BC_2^n)/2 = F_2[x_1, ..., x_n]（Chow 分次），或 H*(BC_2^n, F_2) = F_2[c1_0, ..., c1_{n-1}]
    """

    if rank < 0:
        raise ValueError(f"rank must be >= 0, got {rank}")
    if grading == Grading.CHOW:
        generators = [(f"x{i + 1}", 1) for i in range(rank)]
        name = f"CH*(BC2^{rank})/2"
    else:
        generators = [(f"c1_{i}", 1) for i in range(rank)]
        name = f"H*(BC2^{rank},F2)"
    return F2GradedAlgebra(generators, grading=grading, name=name)


def apply_automorphism(algebra: F2GradedAlgebra, mapping: Mapping[str, str]) -> AlgebraHom:
    """
    - Description:
        以生成元的代換定義 algebra → algebra；檢查關係被保持、且在生成元次數內為雙射
    - Parameters:
        - algebra: F2GradedAlgebra
        - mapping: Mapping[str, str]
            未列出的生成元保持不動
    - Return:
        - AlgebraHom
    """

    images: Dict[str, str] = {g: mapping.get(g, g) for g in algebra.names}
    hom: AlgebraHom = AlgebraHom(algebra, algebra, images, name=f"{algebra.name} automorphism")
    for d in sorted(set(algebra.degrees)):
        columns: List[int] = [hom.image_vector(frozenset({m}), d) for m in algebra.quotient_basis(d)]
        if F2Echelon.from_vectors(columns).rank != len(columns):
            raise ValueError(f"{algebra.name}: substitution is not bijective in degree {d}")
    return hom
