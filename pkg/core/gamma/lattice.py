from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

"""
整數格：ℤ^N 中子格的增量 Hermite 標準形、成員判定、Smith 標準形與整數核

全部以 Python int 運算，不會溢位。HNF 為列式：每列的首項（pivot）為正，
pivot 上方同一行的元素化簡到 [0, pivot)；因此兩個格相等若且唯若基底相同。
"""


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """x·a + y·b = g，g = gcd(a, b) ≥ 0"""

    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def _leading(vec: Sequence[int], start: int = 0) -> Optional[int]:
    for j in range(start, len(vec)):
        if vec[j]:
            return j
    return None


class IntegerLattice:
    """
    ℤ^N 的子格，以 HNF 基底保存

    add_vector 逐一併入生成元；pivot 衝突時以擴展歐幾里得把兩列換成
    (gcd 列, 消去後的向量)，這是一個么模變換，不改變所生成的格。
    """

    def __init__(self, dimension: int):
        if dimension < 0:
            raise ValueError(f"dimension must be >= 0, got {dimension}")
        self.dimension: int = dimension
        self._rows: Dict[int, List[int]] = {}  # pivot column → row

    @classmethod
    def from_rows(cls, dimension: int, rows: Iterable[Sequence[int]]) -> "IntegerLattice":
        lattice: IntegerLattice = cls(dimension)
        for row in rows:
            lattice.add_vector(row)
        return lattice

    @classmethod
    def full(cls, dimension: int) -> "IntegerLattice":
        return cls.from_rows(dimension, ([int(i == j) for j in range(dimension)] for i in range(dimension)))

    # === 建構 ===

    def add_vector(self, vector: Sequence[int]) -> bool:
        """
        - Description:
            把 vector 併入格
        - Parameters:
            - vector: Sequence[int]
                長度為 N 的整數向量
        - Return:
            - bool
                格是否因此變大
        """

        if len(vector) != self.dimension:
            raise ValueError(f"vector has length {len(vector)}, lattice dimension is {self.dimension}")
        vec: List[int] = [int(v) for v in vector]
        changed: bool = False
        j: Optional[int] = _leading(vec)
        while j is not None:
            row: Optional[List[int]] = self._rows.get(j)
            if row is None:
                if vec[j] < 0:
                    vec = [-v for v in vec]
                self._rows[j] = vec
                changed = True
                break
            a, b = row[j], vec[j]
            if b % a == 0:
                q: int = b // a
                for jj in range(j, self.dimension):
                    vec[jj] -= q * row[jj]
            else:
                x, y, g = xgcd(a, b)
                ag, bg = a // g, b // g
                merged: List[int] = [0] * self.dimension
                for jj in range(j, self.dimension):
                    merged[jj] = x * row[jj] + y * vec[jj]
                    vec[jj] = -bg * row[jj] + ag * vec[jj]
                self._rows[j] = merged
                changed = True
            j = _leading(vec, j + 1)
        if changed:
            self._reduce_above()
        return changed

    def _reduce_above(self) -> None:
        pivots: List[int] = sorted(self._rows)
        for idx, j in enumerate(pivots):
            row: List[int] = self._rows[j]
            for upper in pivots[:idx]:
                target: List[int] = self._rows[upper]
                q: int = target[j] // row[j]
                if q:
                    for jj in range(j, self.dimension):
                        target[jj] -= q * row[jj]

    # === 查詢 ===

    @property
    def pivots(self) -> List[int]:
        return sorted(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def basis(self) -> List[List[int]]:
        return [list(self._rows[j]) for j in self.pivots]

    def solve(self, vector: Sequence[int]) -> Optional[List[int]]:
        """
        - Description:
            以 HNF 回代求 vector = Σ c_i · basis[i]
        - Return:
            - Optional[List[int]]
                證書係數（依 basis 次序）；不在格中時為 None
        """

        if len(vector) != self.dimension:
            raise ValueError(f"vector has length {len(vector)}, lattice dimension is {self.dimension}")
        vec: List[int] = [int(v) for v in vector]
        coefficients: List[int] = []
        for j in self.pivots:
            lead: Optional[int] = _leading(vec)
            if lead is not None and lead < j:
                return None
            row: List[int] = self._rows[j]
            q, r = divmod(vec[j], row[j])
            if r:
                return None
            if q:
                for jj in range(j, self.dimension):
                    vec[jj] -= q * row[jj]
            coefficients.append(q)
        if _leading(vec) is not None:
            return None
        return coefficients

    def __contains__(self, vector: Sequence[int]) -> bool:
        return self.solve(vector) is not None

    def contains_lattice(self, other: "IntegerLattice") -> bool:
        return all(row in self for row in other.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntegerLattice):
            return NotImplemented
        return self.dimension == other.dimension and self.basis == other.basis

    def __hash__(self) -> int:
        return hash(tuple(tuple(row) for row in self.basis))

    def __repr__(self) -> str:
        return f"IntegerLattice(dimension={self.dimension}, rank={self.rank})"


# -----------------------------------------------------------------------------
# Smith 標準形
# -----------------------------------------------------------------------------


def _swap_columns(matrix: List[List[int]], a: int, b: int) -> None:
    for row in matrix:
        row[a], row[b] = row[b], row[a]


def _add_column(matrix: List[List[int]], target: int, source: int, factor: int) -> None:
    # col_target -= factor · col_source
    for row in matrix:
        row[target] -= factor * row[source]


def smith_form(matrix: Sequence[Sequence[int]], cols: int) -> Tuple[List[int], List[List[int]]]:
    """
    - Description:
        U·M·V = diag(d_1, ..., d_s)，d_i | d_{i+1}，d_i > 0；只追蹤行變換 V
    - Parameters:
        - matrix: Sequence[Sequence[int]]
            m × cols 整數矩陣（可為空）
        - cols: int
            行數
    - Return:
        - Tuple[List[int], List[List[int]]]
            (非零對角元, V)，V 為 cols × cols 么模矩陣
    """

    a: List[List[int]] = [[int(v) for v in row] for row in matrix]
    v: List[List[int]] = [[int(i == j) for j in range(cols)] for i in range(cols)]
    m: int = len(a)
    diagonal: List[int] = []

    s: int = 0
    while s < min(m, cols):
        candidates = [(abs(a[i][j]), i, j) for i in range(s, m) for j in range(s, cols) if a[i][j]]
        if not candidates:
            break
        _, i0, j0 = min(candidates)
        a[s], a[i0] = a[i0], a[s]
        _swap_columns(a, s, j0)
        _swap_columns(v, s, j0)

        while True:
            # 用 a[s][s] 消去第 s 行與第 s 列
            pivot: int = a[s][s]
            for i in range(s + 1, m):
                q: int = a[i][s] // pivot
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[s])]
            for j in range(s + 1, cols):
                q = a[s][j] // pivot
                if q:
                    _add_column(a, j, s, q)
                    _add_column(v, j, s, q)

            edge = [(abs(a[i][s]), i, s) for i in range(s + 1, m) if a[i][s]]
            edge += [(abs(a[s][j]), s, j) for j in range(s + 1, cols) if a[s][j]]
            if edge:
                _, i1, j1 = min(edge)
                if j1 == s:
                    a[s], a[i1] = a[i1], a[s]
                else:
                    _swap_columns(a, s, j1)
                    _swap_columns(v, s, j1)
                continue

            # 對角元須整除右下子矩陣
            bad: Optional[int] = next(
                (i for i in range(s + 1, m) for j in range(s + 1, cols) if a[i][j] % pivot),
                None,
            )
            if bad is None:
                break
            a[s] = [x + y for x, y in zip(a[s], a[bad])]

        if a[s][s] < 0:
            a[s] = [-x for x in a[s]]
        diagonal.append(a[s][s])
        s += 1
    return diagonal, v


@dataclass
class QuotientGroup:
    """
    有限生成阿貝爾群 A/B（B ⊆ A 為 ℤ^N 中的子格）

    coordinates(x) 把 x ∈ A 送到 ⊕ ℤ/d_i ⊕ ℤ^free 的座標。
    """

    outer: IntegerLattice
    inner: IntegerLattice
    diagonal: List[int] = field(default_factory=list)
    transform: List[List[int]] = field(default_factory=list)

    @classmethod
    def build(cls, outer: IntegerLattice, inner: IntegerLattice) -> "QuotientGroup":
        relations: List[List[int]] = []
        for row in inner.basis:
            coeffs: Optional[List[int]] = outer.solve(row)
            if coeffs is None:
                raise ValueError("inner lattice is not contained in outer lattice")
            relations.append(coeffs)
        diagonal, transform = smith_form(relations, outer.rank)
        return cls(outer, inner, diagonal, transform)

    @property
    def invariant_factors(self) -> List[int]:
        return [d for d in self.diagonal if d > 1]

    @property
    def free_rank(self) -> int:
        return self.outer.rank - len(self.diagonal)

    @property
    def order(self) -> int:
        """有限時為群階，有自由部分時為 0"""

        if self.free_rank:
            return 0
        total: int = 1
        for d in self.diagonal:
            total *= d
        return total

    def _kept(self) -> List[Tuple[int, int]]:
        # (transform 中的行, 模數；0 表示自由)
        kept: List[Tuple[int, int]] = [(j, d) for j, d in enumerate(self.diagonal) if d > 1]
        kept += [(j, 0) for j in range(len(self.diagonal), self.outer.rank)]
        return kept

    @property
    def moduli(self) -> List[int]:
        return [d for _, d in self._kept()]

    def coordinates(self, vector: Sequence[int]) -> Optional[List[int]]:
        coeffs: Optional[List[int]] = self.outer.solve(vector)
        if coeffs is None:
            return None
        result: List[int] = []
        for j, d in self._kept():
            value: int = sum(c * self.transform[i][j] for i, c in enumerate(coeffs))
            result.append(value % d if d else value)
        return result

    def element_order(self, vector: Sequence[int]) -> int:
        """元素在 A/B 中的階；無限階回傳 0"""

        coords: Optional[List[int]] = self.coordinates(vector)
        if coords is None:
            raise ValueError("vector does not lie in the outer lattice")
        order: int = 1
        for value, d in zip(coords, self.moduli):
            if d == 0:
                if value:
                    return 0
                continue
            order = lcm(order, d // gcd(value, d))
        return order


def integer_kernel(columns: Sequence[Sequence[int]], moduli: Sequence[int]) -> List[List[int]]:
    """
    - Description:
        {a ∈ ℤ^K : Σ_k a_k · columns[k] ≡ 0}，第 j 個座標取模 moduli[j]（0 表示在 ℤ 中為零）
    - Parameters:
        - columns: Sequence[Sequence[int]]
            K 個座標向量，每個長度為 t
        - moduli: Sequence[int]
            長度 t
    - Return:
        - List[List[int]]
            核的 HNF 基底
    """

    t: int = len(moduli)
    k: int = len(columns)
    lattice: IntegerLattice = IntegerLattice(t + k)
    for idx, coords in enumerate(columns):
        lattice.add_vector(list(coords) + [int(i == idx) for i in range(k)])
    for j, d in enumerate(moduli):
        if d:
            lattice.add_vector([d if i == j else 0 for i in range(t)] + [0] * k)
    return [row[t:] for row in lattice.basis if all(x == 0 for x in row[:t])]
