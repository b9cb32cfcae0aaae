import re
from concurrent.futures import Future, ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from core.characters import CharacterTable, VirtualRep, exterior_power
from core.config import GAMMA_BUDGET, NUM_THREADS
from core.gamma.lattice import IntegerLattice, QuotientGroup, integer_kernel
from core.utils import FiltrationInclusionError, GammaBudgetError, GammaStrategy, log_thread

"""
γ 濾鏈：γ 運算、Γ^n ⊆ R(G) 的整數格、分次片段 Γ^n/Γ^{n+1} 與其中的 Chern 類

R(G) 以不可約特徵標為基底視為 ℤ^r；Γ^n 是理想，作為阿貝爾群由
{χ · g : χ ∈ Irr(G)，g 為理想生成元} 生成。
"""


# -----------------------------------------------------------------------------
# γ 運算
# -----------------------------------------------------------------------------


def gamma_op(x: VirtualRep, i: int) -> VirtualRep:
    """γ^i(x) = λ^i(x + i − 1)"""

    if i < 0:
        raise ValueError(f"gamma operation needs i >= 0, got {i}")
    if i == 0:
        return x.table.one()
    return exterior_power(x + (i - 1), i)


def big_C(x: VirtualRep, i: int) -> VirtualRep:
    """C_i(x) = γ^i(x − deg x)，i > deg x 時為 0"""

    return gamma_op(x.augmented(), i)


def chern_class(x: VirtualRep, i: int) -> VirtualRep:
    """c_i(x) 在 Γ^i 中的代表元"""

    return big_C(x, i)


_FACTOR_PATTERN = re.compile(r"c(\d+)\((.+)\)(?:\^(\d+))?")
# 標籤本身可含 `*`（例如 f(1,0)*phi(1)），只在下一個因子 c<i>( 之前切開
_FACTOR_SPLIT = re.compile(r"\*(?=c\d+\()")


@dataclass(frozen=True)
class ChernMonomial:
    """
    Π c_{i}(ρ) 的形式乘積

    factors 依 (label, i) 排序後保存，因此相同的乘積有相同的 key。
    """

    factors: Tuple[Tuple[str, int], ...] = ()

    @classmethod
    def of(cls, *factors: Tuple[str, int]) -> "ChernMonomial":
        for label, i in factors:
            if i < 1:
                raise ValueError(f"Chern class index must be >= 1, got c{i}({label})")
        return cls(tuple(sorted(factors)))

    @classmethod
    def parse(cls, text: str) -> "ChernMonomial":
        """`c1(phi0)^2*c2(psi)`；空字串或 `1` 為空乘積"""

        body: str = text.replace(" ", "")
        if body in ("", "1"):
            return cls()
        factors: List[Tuple[str, int]] = []
        for part in _FACTOR_SPLIT.split(body):
            match = _FACTOR_PATTERN.fullmatch(part)
            if match is None:
                raise ValueError(f"cannot parse Chern monomial factor {part!r}")
            index, label, power = match.groups()
            factors.extend([(label, int(index))] * (int(power) if power else 1))
        return cls.of(*factors)

    @property
    def degree(self) -> int:
        return sum(i for _, i in self.factors)

    def __mul__(self, other: "ChernMonomial") -> "ChernMonomial":
        return ChernMonomial.of(*(self.factors + other.factors))

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        counts: Dict[Tuple[str, int], int] = {}
        for factor in self.factors:
            counts[factor] = counts.get(factor, 0) + 1
        parts: List[str] = []
        for (label, i), power in counts.items():
            parts.append(f"c{i}({label})" + (f"^{power}" if power > 1 else ""))
        return "*".join(parts)


def chern_lift(table: CharacterTable, monomial: ChernMonomial) -> VirtualRep:
    """Π C_i(ρ) ∈ Γ^{deg}"""

    result: VirtualRep = table.one()
    for label, i in monomial.factors:
        result = result * big_C(table.rep(label), i)
    return result


def chern_monomials(table: CharacterTable, generators: Sequence[str], degree: int) -> List[ChernMonomial]:
    """
    - Description:
        生成元上所有總次數為 degree 的 Chern 單項式（c_i(ρ) 只取 i ≤ deg ρ）
    - Parameters:
        - table: CharacterTable
        - generators: Sequence[str]
            表示的標籤或別名
        - degree: int
    - Return:
        - List[ChernMonomial]
            依生成元次序、類別指標遞增的字典序
    """

    factors: List[Tuple[str, int]] = [
        (label, i) for label in generators for i in range(1, table[label].degree + 1)
    ]
    result: List[ChernMonomial] = []

    def search(start: int, remaining: int, chosen: List[Tuple[str, int]]) -> None:
        if remaining == 0:
            result.append(ChernMonomial.of(*chosen))
            return
        for idx in range(start, len(factors)):
            if factors[idx][1] <= remaining:
                search(idx, remaining - factors[idx][1], chosen + [factors[idx]])

    search(0, degree, [])
    return result


# -----------------------------------------------------------------------------
# R(G) 上的整數乘法
# -----------------------------------------------------------------------------


def _product(u: Sequence[int], v: Sequence[int], consts: np.ndarray) -> List[int]:
    # Σ u_i v_j N[i, j, :]；係數大時改用 Python int 以免溢位
    size: int = consts.shape[0]
    bound: int = max((abs(x) for x in u), default=0) * max((abs(x) for x in v), default=0)
    if bound * int(consts.max(initial=0)) * size * size < 2**62:
        outer: np.ndarray = np.outer(np.asarray(u, dtype=np.int64), np.asarray(v, dtype=np.int64))
        return [int(c) for c in np.tensordot(outer, consts, axes=([0, 1], [0, 1]))]
    outer_obj: np.ndarray = np.outer(np.asarray(u, dtype=object), np.asarray(v, dtype=object))
    flat: np.ndarray = consts.reshape(size * size, size).astype(object)
    return [int(c) for c in outer_obj.reshape(-1).dot(flat)]


# -----------------------------------------------------------------------------
# 濾鏈
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class GammaAtom:
    """C_i(ρ)，權重為 i"""

    label: str
    index: int
    vector: Tuple[int, ...]

    @property
    def weight(self) -> int:
        return self.index

    @property
    def name(self) -> str:
        return f"C{self.index}({self.label})"


@dataclass
class GammaLattice:
    """Γ^n 的 HNF 基底與生成紀錄"""

    degree: int
    lattice: IntegerLattice
    generator_log: List[str] = field(default_factory=list)

    @property
    def basis(self) -> List[List[int]]:
        return self.lattice.basis

    def __contains__(self, vector: Sequence[int]) -> bool:
        return vector in self.lattice


@dataclass
class GradedPiece:
    """gr^n = Γ^n/Γ^{n+1}"""

    degree: int
    quotient: QuotientGroup
    table: CharacterTable

    @property
    def invariant_factors(self) -> List[int]:
        return self.quotient.invariant_factors

    @property
    def free_rank(self) -> int:
        return self.quotient.free_rank

    @property
    def order(self) -> int:
        return self.quotient.order

    @property
    def moduli(self) -> List[int]:
        return self.quotient.moduli

    def coordinates(self, x: VirtualRep) -> List[int]:
        coords: Optional[List[int]] = self.quotient.coordinates(x.coords.tolist())
        if coords is None:
            raise ValueError(f"element is not in Γ^{self.degree}")
        return coords

    def order_of(self, x: VirtualRep) -> int:
        return self.quotient.element_order(x.coords.tolist())

    def monomial_coordinates(self, monomials: Sequence[ChernMonomial]) -> Dict[str, List[int]]:
        return {str(m): self.coordinates(chern_lift(self.table, m)) for m in monomials}


@dataclass
class Membership:
    """x ∈ Γ^n 的判定；certificate 為 Γ^n 的 HNF 基底係數"""

    degree: int
    member: bool
    certificate: Optional[List[int]] = None

    def __bool__(self) -> bool:
        return self.member


@dataclass
class RelationBasis:
    """次數 degree 的 Chern 單項式在 gr^degree 中的關係（整數或 mod m）"""

    degree: int
    monomials: List[ChernMonomial]
    rows: List[List[int]]
    modulus: Optional[int] = None

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def contains(self, vector: Sequence[int]) -> bool:
        """vector 是否落在關係所張的子群中"""

        size: int = len(self.monomials)
        lattice: IntegerLattice = IntegerLattice.from_rows(size, self.rows)
        if self.modulus:
            for k in range(size):
                lattice.add_vector([self.modulus if j == k else 0 for j in range(size)])
        return list(vector) in lattice

    def format_rows(self) -> List[str]:
        lines: List[str] = []
        for row in self.rows:
            terms: List[str] = []
            for c, m in zip(row, self.monomials):
                if c:
                    terms.append(str(m) if c == 1 else f"{c}*{m}")
            lines.append(" + ".join(terms) if terms else "0")
        return lines


class GammaFiltration:
    """
    一個特徵標表上的 γ 濾鏈

    各次 Γ^n 依需求計算並快取；完成的格不再變動，可跨執行緒共用。
    """

    def __init__(
        self,
        table: CharacterTable,
        strategy: GammaStrategy = GammaStrategy.RECURSIVE,
        budget: int = GAMMA_BUDGET,
        num_threads: int = NUM_THREADS,
    ):
        self.table: CharacterTable = table
        self.strategy: GammaStrategy = GammaStrategy(strategy)
        self.budget: int = budget
        self.num_threads: int = max(1, num_threads)
        self.rank: int = len(table)
        self._consts: np.ndarray = table.structure_constants
        self._lattices: Dict[int, GammaLattice] = {}
        self._pieces: Dict[int, GradedPiece] = {}
        self.atoms: List[GammaAtom] = self._build_atoms()
        self.max_degree: int = max(table.degrees)

    def _build_atoms(self) -> List[GammaAtom]:
        atoms: List[GammaAtom] = []
        for idx in range(1, self.rank):
            label: str = self.table.labels[idx]
            rho: VirtualRep = VirtualRep.basis(self.table, idx)
            for i in range(1, self.table.degrees[idx] + 1):
                vector: Tuple[int, ...] = tuple(int(c) for c in big_C(rho, i).coords.tolist())
                if any(vector):
                    atoms.append(GammaAtom(label, i, vector))
        logger.debug(f"{self.table.group.name}: {len(atoms)} gamma atoms")
        return atoms

    # === Γ^n ===

    def lattice(self, n: int) -> GammaLattice:
        """
        - Description:
            Γ^n 的 HNF 基底；建立後檢查 Γ^n ⊆ Γ^{n-1}
        - Parameters:
            - n: int
                次數（≥ 0）
        - Return:
            - GammaLattice
        """

        if n < 0:
            raise ValueError(f"gamma degree must be >= 0, got {n}")
        if n in self._lattices:
            return self._lattices[n]
        if n == 0:
            built: GammaLattice = GammaLattice(0, IntegerLattice.full(self.rank), ["R(G)"])
        else:
            previous: GammaLattice = self.lattice(n - 1)
            if self.strategy == GammaStrategy.RECURSIVE:
                built = self._recursive(n)
            else:
                built = self._window(n)
            if not previous.lattice.contains_lattice(built.lattice):
                raise FiltrationInclusionError(f"{self.table.group.name}: Γ^{n} is not contained in Γ^{n - 1}")
        self._lattices[n] = built
        logger.info(
            f"{self.table.group.name}: Γ^{n} sealed (rank {built.lattice.rank}, "
            f"{len(built.generator_log)} generator groups, {self.strategy.value})"
        )
        return built

    @log_thread
    def _atom_products(self, atom: GammaAtom, basis: List[List[int]]) -> List[List[int]]:
        return [_product(atom.vector, row, self._consts) for row in basis]

    def _recursive(self, n: int) -> GammaLattice:
        # Γ^n = Σ_a C_a · Γ^{max(n − w(a), 0)}
        tasks: List[Tuple[GammaAtom, List[List[int]]]] = [
            (atom, self.lattice(max(n - atom.weight, 0)).basis) for atom in self.atoms
        ]
        futures: List[Future] = []
        results: List[List[List[int]]] = []
        with ThreadPoolExecutor(max_workers=self.num_threads) as executor:
            for atom, basis in tasks:
                futures.append(executor.submit(self._atom_products, atom, basis))
            for future in futures:
                results.append(future.result())

        lattice: IntegerLattice = IntegerLattice(self.rank)
        log: List[str] = []
        for (atom, _), products in zip(tasks, results):
            for vector in products:
                lattice.add_vector(vector)
            log.append(f"{atom.name}·Γ^{max(n - atom.weight, 0)}")
        return GammaLattice(n, lattice, log)

    def _products_in_window(self, n: int) -> Iterator[Tuple[List[GammaAtom], List[int]]]:
        # 權重落在 [n, n+m) 的原子多重集合，深度優先並依權重剪枝
        upper: int = n + self.max_degree
        one: List[int] = self.table.one().coords.tolist()

        def search(start: int, weight: int, chosen: List[GammaAtom], value: List[int]):
            if weight >= n:
                yield chosen, value
                return
            for idx in range(start, len(self.atoms)):
                atom: GammaAtom = self.atoms[idx]
                if weight + atom.weight < upper:
                    yield from search(
                        idx, weight + atom.weight, chosen + [atom], _product(value, atom.vector, self._consts)
                    )

        yield from search(0, 0, [], one)

    def _window(self, n: int) -> GammaLattice:
        lattice: IntegerLattice = IntegerLattice(self.rank)
        log: List[str] = []
        count: int = 0
        for chosen, value in self._products_in_window(n):
            count += 1
            if count > self.budget:
                raise GammaBudgetError(
                    f"{self.table.group.name}: more than {self.budget} generator products for Γ^{n}"
                )
            if not any(value):
                continue
            log.append("·".join(atom.name for atom in chosen))
            for idx in range(self.rank):
                chi: List[int] = [int(i == idx) for i in range(self.rank)]
                lattice.add_vector(_product(chi, value, self._consts))
        return GammaLattice(n, lattice, log)

    # === 查詢 ===

    def graded_piece(self, n: int) -> GradedPiece:
        """gr^n 的不變因子：Γ^{n+1} 的基底以 Γ^n 的基底表示後取 Smith 標準形"""

        if n in self._pieces:
            return self._pieces[n]
        outer: GammaLattice = self.lattice(n)
        inner: GammaLattice = self.lattice(n + 1)
        try:
            quotient: QuotientGroup = QuotientGroup.build(outer.lattice, inner.lattice)
        except ValueError as e:
            raise FiltrationInclusionError(f"{self.table.group.name}: {e}") from e
        piece: GradedPiece = GradedPiece(n, quotient, self.table)
        self._pieces[n] = piece
        logger.info(f"{self.table.group.name}: gr^{n} invariant factors {piece.invariant_factors}")
        return piece

    def in_gamma(self, x: VirtualRep, n: int) -> Membership:
        certificate: Optional[List[int]] = self.lattice(n).lattice.solve(x.coords.tolist())
        return Membership(n, certificate is not None, certificate)

    def chern_order(self, monomial: ChernMonomial) -> int:
        """單項式在 gr^{deg} 中的階；次數 0 時為無限階，回傳 0"""

        piece: GradedPiece = self.graded_piece(monomial.degree)
        return piece.order_of(chern_lift(self.table, monomial))

    def chern_relations(
        self,
        degree: int,
        generators: Sequence[str] = (),
        modulus: Optional[int] = None,
        monomials: Optional[Sequence[ChernMonomial]] = None,
    ) -> RelationBasis:
        """
        - Description:
            單項式組合在 gr^degree 中為零者所成的子群
            - modulus 為 None：整數關係的 HNF 基底
            - modulus = m：整數關係在 (ℤ/m)^K 中的像（HNF 模 m；m 為質數時即 RREF）
        - Parameters:
            - degree: int
            - generators: Sequence[str]
                未給 monomials 時，用來枚舉所有次數 degree 的單項式
            - modulus: Optional[int]
            - monomials: Optional[Sequence[ChernMonomial]]
                固定的單項式基底（次序即輸出的行次序）
        - Return:
            - RelationBasis
        """

        basis: List[ChernMonomial] = (
            list(monomials) if monomials is not None else chern_monomials(self.table, generators, degree)
        )
        for m in basis:
            if m.degree != degree:
                raise ValueError(f"monomial {m} has degree {m.degree}, expected {degree}")
        piece: GradedPiece = self.graded_piece(degree)
        columns: List[List[int]] = [piece.coordinates(chern_lift(self.table, m)) for m in basis]
        rows: List[List[int]] = integer_kernel(columns, piece.moduli)
        if modulus:
            lattice: IntegerLattice = IntegerLattice.from_rows(len(basis), rows)
            for k in range(len(basis)):
                lattice.add_vector([modulus if j == k else 0 for j in range(len(basis))])
            rows = [[c % modulus for c in row] for row in lattice.basis]
            rows = [row for row in rows if any(row)]
        logger.debug(f"{self.table.group.name}: {len(rows)} relations among {len(basis)} degree-{degree} monomials")
        return RelationBasis(degree, basis, rows, modulus)
