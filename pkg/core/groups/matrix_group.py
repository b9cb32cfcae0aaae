import itertools
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from sympy import isprime

from core.config import ENUMERATION_BUDGET
from core.utils import (
    EnumerationBudgetError,
    FusionError,
    GroupFamily,
)

"""
FiniteMatrixGroup：F_p 上單位上三角矩陣群的完整枚舉

元素以 (N, n, n) 的 uint8 陣列儲存，依「嚴格上三角元素的 mixed-radix 編碼」排序，
因此單位元永遠是 index 0，共軛類代表元在每次執行都相同。
"""


# 未給生成元時，貪婪挑選會建乘法表；超過此階數即拒絕
GREEDY_GENERATOR_LIMIT: int = 4096


class FiniteMatrixGroup:
    """
    以元素枚舉表示的有限矩陣群

    所有子群、直積都嵌在某個 U(n,p) 裡，所以只需嚴格上三角的位置即可唯一編碼元素。
    建構後不可變；乘法表與反元素表為惰性計算的快取。
    """

    def __init__(
        self,
        p: int,
        n: int,
        elements: np.ndarray,
        name: str,
        generators: Optional[List[int]] = None,
        family: GroupFamily = GroupFamily.OTHER,
        params: Optional[Dict[str, int]] = None,
        basis: Optional[List[int]] = None,
    ):
        self.p: int = p
        self.n: int = n
        self.name: str = name
        self.family: GroupFamily = family
        self.params: Dict[str, int] = dict(params or {})

        keys: np.ndarray = encode_matrices(elements, p)
        order: np.ndarray = np.argsort(keys, kind="stable")
        self.elements: np.ndarray = np.ascontiguousarray(elements[order] % p).astype(
            np.uint8
        )
        self.keys: np.ndarray = keys[order]

        if len(np.unique(self.keys)) != len(self.keys):
            raise ValueError(f"{name}: duplicate elements in element list")
        if self.keys[0] != 0:
            raise ValueError(f"{name}: identity missing from element list")

        # generators / basis 以排序後的 index 表示
        self.generators: List[int] = (
            list(generators) if generators is not None else self._greedy_generators()
        )
        self.basis: Optional[List[int]] = list(basis) if basis is not None else None

    # === 基本資訊 ===

    @property
    def order(self) -> int:
        return len(self.keys)

    @property
    def identity(self) -> int:
        return 0

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteMatrixGroup({self.name}, order={self.order}, p={self.p}, n={self.n})"

    def matrix(self, index: int) -> np.ndarray:
        return self.elements[index]

    # === 乘法結構 ===

    @cached_property
    def table(self) -> np.ndarray:
        """
        - Description:
            乘法表 table[i, j] = index(g_i · g_j)
        - Return:
            - np.ndarray
                (N, N) 的 int32 陣列
        """

        size: int = self.order
        table: np.ndarray = np.empty((size, size), dtype=np.int32)
        mats: np.ndarray = self.elements.astype(np.int64)
        for i in range(size):
            products: np.ndarray = np.einsum("ab,kbc->kac", mats[i], mats) % self.p
            table[i] = self.index_of_keys(encode_matrices(products, self.p))
        logger.debug(f"{self.name}: multiplication table built ({size}x{size})")
        return table

    @cached_property
    def inverses(self) -> np.ndarray:
        return np.argmax(self.table == 0, axis=1).astype(np.int32)

    def multiply(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def power(self, i: int, k: int) -> int:
        """g_i^k（k 可為負數）"""

        if k < 0:
            return self.power(int(self.inverses[i]), -k)
        result: int = self.identity
        for _ in range(k % self.exponent if self.exponent else k):
            result = int(self.table[result, i])
        return result

    @cached_property
    def power_table(self) -> np.ndarray:
        """power_table[k, i] = index(g_i^k)，k = 0..exponent-1"""

        size: int = self.order
        powers: List[np.ndarray] = [np.zeros(size, dtype=np.int32)]
        current: np.ndarray = np.zeros(size, dtype=np.int32)
        arange: np.ndarray = np.arange(size)
        while True:
            current = self.table[current, arange]
            if np.all(current == 0):
                break
            powers.append(current.copy())
        return np.stack(powers)

    @property
    def exponent(self) -> int:
        return int(self.power_table.shape[0])

    @cached_property
    def element_orders(self) -> np.ndarray:
        """每個元素的階"""

        orders: np.ndarray = np.full(self.order, self.exponent, dtype=np.int32)
        for k in range(self.exponent - 1, 0, -1):
            orders[self.power_table[k] == 0] = k
        orders[0] = 1
        return orders

    def element_order(self, index: int) -> int:
        return int(self.element_orders[index])

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    # === 元素查找 ===

    def index_of_keys(self, keys: np.ndarray) -> np.ndarray:
        """
        - Description:
            以編碼查元素 index，找不到時丟出 FusionError
        """

        keys = np.asarray(keys, dtype=np.int64)
        positions: np.ndarray = np.searchsorted(self.keys, keys)
        positions = np.clip(positions, 0, self.order - 1)
        if not np.array_equal(self.keys[positions], keys):
            raise FusionError(f"element not found in {self.name}")
        return positions.astype(np.int32)

    def index_of(self, matrix: np.ndarray) -> int:
        matrix = np.asarray(matrix, dtype=np.int64)
        return int(self.index_of_keys(encode_matrices(matrix[None, :, :], self.p))[0])

    def fusion_into(self, parent: "FiniteMatrixGroup") -> np.ndarray:
        """本群每個元素在母群中的 index"""

        if parent.n != self.n or parent.p != self.p:
            raise FusionError(
                f"{self.name} is not embedded in the same matrix space as {parent.name}"
            )
        return parent.index_of_keys(self.keys)

    # === 子群 ===

    def closure(self, indices: Iterable[int]) -> np.ndarray:
        """由給定元素生成的子群（排序後的 index 陣列）"""

        gens: List[int] = sorted(set(int(i) for i in indices))
        members: set = {self.identity}
        frontier: List[int] = [self.identity]
        while frontier:
            nxt: List[int] = []
            for x in frontier:
                for g in gens:
                    y: int = int(self.table[x, g])
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        return np.array(sorted(members), dtype=np.int32)

    def subgroup(
        self,
        indices: Sequence[int],
        name: str,
        generators: Optional[Sequence[int]] = None,
        family: GroupFamily = GroupFamily.OTHER,
        params: Optional[Dict[str, int]] = None,
        basis: Optional[Sequence[int]] = None,
    ) -> "FiniteMatrixGroup":
        """
        - Description:
            由母群 index 建立子群物件；generators / basis 也以母群 index 給定
        - Parameters:
            - indices: Sequence[int]
                子群元素（必須對乘法封閉）
            - generators: Optional[Sequence[int]]
                生成元，省略時由子群自行挑選
            - basis: Optional[Sequence[int]]
                基本交換子群的有序基底
        - Return:
            - FiniteMatrixGroup
        """

        members: np.ndarray = np.array(sorted(set(int(i) for i in indices)), dtype=np.int32)
        sub_table: np.ndarray = self.table[np.ix_(members, members)]
        if not np.all(np.isin(sub_table, members)):
            raise ValueError(f"{name}: element set is not closed under multiplication")

        group: FiniteMatrixGroup = FiniteMatrixGroup(
            self.p,
            self.n,
            self.elements[members],
            name,
            generators=[] if generators is not None else None,
            family=family,
            params=params,
        )

        def local(parent_indices: Optional[Sequence[int]]) -> Optional[List[int]]:
            if parent_indices is None:
                return None
            return [
                int(v)
                for v in group.index_of_keys(self.keys[np.asarray(parent_indices, dtype=np.int64)])
            ]

        if generators is not None:
            group.generators = local(generators)
        group.basis = local(basis)
        return group

    @cached_property
    def center_indices(self) -> np.ndarray:
        central: np.ndarray = np.all(self.table == self.table.T, axis=1)
        return np.nonzero(central)[0].astype(np.int32)

    def _greedy_generators(self) -> List[int]:
        # 依 index 逐一加入不在目前子群中的元素
        if self.order == 1:
            return []
        if self.order > GREEDY_GENERATOR_LIMIT:
            raise EnumerationBudgetError(
                f"{self.name}: {self.order} elements without generators, "
                f"greedy search stops at {GREEDY_GENERATOR_LIMIT}"
            )
        chosen: List[int] = []
        current: set = {0}
        for i in range(1, self.order):
            if i not in current:
                chosen.append(i)
                current = set(self.closure(chosen).tolist())
                if len(current) == self.order:
                    break
        return chosen

    # === 基本交換子群座標 ===

    @cached_property
    def basis_coordinates(self) -> np.ndarray:
        """
        - Description:
            若群為基本交換且有基底，回傳每個元素的指數向量 (N, r)
        - Return:
            - np.ndarray
                coords[i] = a 使得 g_i = Π basis_j^{a_j}
        """

        if self.basis is None:
            raise ValueError(f"{self.name} has no recorded basis")
        rank: int = len(self.basis)
        coords: np.ndarray = np.full((self.order, rank), -1, dtype=np.int64)
        ranges: List[range] = [range(self.element_order(b)) for b in self.basis]
        for exps in itertools.product(*ranges):
            element: int = self.identity
            for b, e in zip(self.basis, exps):
                for _ in range(e):
                    element = int(self.table[element, b])
            coords[element] = exps
        if np.any(coords < 0):
            raise ValueError(f"{self.name}: basis does not span the group")
        return coords


# -----------------------------------------------------------------------------
# 編碼與構造
# -----------------------------------------------------------------------------


def upper_positions(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def encode_matrices(mats: np.ndarray, p: int) -> np.ndarray:
    """
    - Description:
        嚴格上三角元素依列優先讀出，第一個位置為最高位的 p 進位數
    - Parameters:
        - mats: np.ndarray
            (N, n, n) 矩陣
        - p: int
            質數
    - Return:
        - np.ndarray
            (N,) 的 int64 編碼
    """

    mats = np.asarray(mats, dtype=np.int64) % p
    n: int = mats.shape[-1]
    rows, cols = np.triu_indices(n, k=1)
    entries: np.ndarray = mats[:, rows, cols]
    weights: np.ndarray = p ** np.arange(len(rows) - 1, -1, -1, dtype=np.int64)
    return entries @ weights


def elementary_matrix(n: int, i: int, j: int, value: int = 1) -> np.ndarray:
    """E_{i,j}（1-based）：單位矩陣在 (i,j) 位置放 value"""

    mat: np.ndarray = np.eye(n, dtype=np.int64)
    mat[i - 1, j - 1] = value
    return mat


def matrix_from_entries(n: int, entries: Dict[Tuple[int, int], int]) -> np.ndarray:
    """以 {(i,j): value}（1-based）建構單位上三角矩陣"""

    mat: np.ndarray = np.eye(n, dtype=np.int64)
    for (i, j), value in entries.items():
        if i >= j:
            raise ValueError(f"entry ({i},{j}) is not strictly upper triangular")
        mat[i - 1, j - 1] = value
    return mat


def check_prime(p: int) -> None:
    if not isprime(p):
        raise ValueError(f"p={p} is not a prime")


def unitriangular_group(
    n: int, p: int, budget: Optional[int] = None
) -> FiniteMatrixGroup:
    """
    - Description:
        枚舉 U(n,p)：對角線為 1 的上三角矩陣
    - Parameters:
        - n: int
            矩陣維度（≥ 1）
        - p: int
            質數
        - budget: Optional[int]
            元素數上限，預設為 ENUMERATION_BUDGET
    - Return:
        - FiniteMatrixGroup
            生成元為 E_{i,j}（i<j）
    """

    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    check_prime(p)
    budget = ENUMERATION_BUDGET if budget is None else budget

    positions: List[Tuple[int, int]] = upper_positions(n)
    size: int = p ** len(positions)
    if size > budget:
        raise EnumerationBudgetError(
            f"U({n},{p}) has {size} elements, exceeding the budget {budget}"
        )

    digits: np.ndarray = np.array(
        list(itertools.product(range(p), repeat=len(positions))), dtype=np.int64
    ).reshape(size, len(positions))
    elements: np.ndarray = np.tile(np.eye(n, dtype=np.int64), (size, 1, 1))
    for col, (i, j) in enumerate(positions):
        elements[:, i, j] = digits[:, col]

    family: GroupFamily = {3: GroupFamily.H, 4: GroupFamily.G}.get(n, GroupFamily.OTHER)
    group: FiniteMatrixGroup = FiniteMatrixGroup(
        p, n, elements, f"U({n},{p})", generators=[], family=family, params={"p": p}
    )
    group.generators = [
        group.index_of(elementary_matrix(n, i + 1, j + 1)) for i, j in positions
    ]
    logger.info(f"Built {group.name} with {group.order} elements")
    return group


def generated_group(
    p: int,
    n: int,
    generators: Sequence[np.ndarray],
    name: str,
    budget: Optional[int] = None,
    family: GroupFamily = GroupFamily.OTHER,
) -> FiniteMatrixGroup:
    """
    - Description:
        由生成矩陣以 BFS 求閉包，不需事先枚舉母群
    - Parameters:
        - generators: Sequence[np.ndarray]
            單位上三角的 n×n 矩陣
    - Return:
        - FiniteMatrixGroup
    """

    check_prime(p)
    budget = ENUMERATION_BUDGET if budget is None else budget
    gens: List[np.ndarray] = [np.asarray(g, dtype=np.int64) % p for g in generators]
    for g in gens:
        if g.shape != (n, n) or np.any(np.tril(g, -1)) or np.any(np.diag(g) != 1):
            raise ValueError(f"{name}: generator is not unitriangular of size {n}")

    identity: np.ndarray = np.eye(n, dtype=np.int64)
    seen: Dict[int, np.ndarray] = {0: identity}
    frontier: List[np.ndarray] = [identity]
    while frontier:
        nxt: List[np.ndarray] = []
        for x in frontier:
            for g in gens:
                y: np.ndarray = (x @ g) % p
                key: int = int(encode_matrices(y[None], p)[0])
                if key not in seen:
                    seen[key] = y
                    nxt.append(y)
                    if len(seen) > budget:
                        raise EnumerationBudgetError(
                            f"{name} exceeds the enumeration budget {budget}"
                        )
        frontier = nxt

    elements: np.ndarray = np.stack(list(seen.values()))
    group: FiniteMatrixGroup = FiniteMatrixGroup(
        p, n, elements, name, generators=[], family=family
    )
    group.generators = [group.index_of(g) for g in gens if np.any(g != identity)]
    return group


def direct_product(a: FiniteMatrixGroup, b: FiniteMatrixGroup, name: Optional[str] = None) -> FiniteMatrixGroup:
    """
    - Description:
        區塊對角嵌入 A × B ⊆ U(n_a + n_b, p)
    """

    if a.p != b.p:
        raise ValueError("direct product needs a common prime")
    n: int = a.n + b.n
    size: int = a.order * b.order
    elements: np.ndarray = np.tile(np.eye(n, dtype=np.int64), (size, 1, 1))
    left: np.ndarray = np.repeat(a.elements.astype(np.int64), b.order, axis=0)
    right: np.ndarray = np.tile(b.elements.astype(np.int64), (a.order, 1, 1))
    elements[:, : a.n, : a.n] = left
    elements[:, a.n :, a.n :] = right
    return FiniteMatrixGroup(a.p, n, elements, name or f"{a.name}x{b.name}")


def parse_group_text(text: str, name: str = "file") -> FiniteMatrixGroup:
    """
    - Description:
        解析文字群格式：首行 `p n`，之後每行一個生成元（n·n 個數字，列優先）
    - Parameters:
        - text: str
            檔案內容；空白行與 # 開頭的行會被忽略
    - Return:
        - FiniteMatrixGroup
    """

    lines: List[str] = [
        ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty group text")
    header: List[str] = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad header line: {lines[0]!r}")
    p, n = int(header[0]), int(header[1])

    gens: List[np.ndarray] = []
    for line in lines[1:]:
        digits: str = "".join(line.split())
        if len(digits) != n * n or not digits.isdigit():
            raise ValueError(f"generator line must have {n * n} digits: {line!r}")
        gens.append(np.array([int(ch) for ch in digits], dtype=np.int64).reshape(n, n))
    return generated_group(p, n, gens, name)


def format_group_text(group: FiniteMatrixGroup) -> str:
    """parse_group_text 的反向：輸出目前的生成元"""

    lines: List[str] = [f"{group.p} {group.n}"]
    for g in group.generators:
        lines.append("".join(str(int(v)) for v in group.elements[g].reshape(-1)))
    return "\n".join(lines) + "\n"
