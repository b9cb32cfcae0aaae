from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

"""
F_2 上的多項式與線性代數

多項式以「出現的單項式集合」表示（係數只有 0、1），加法即對稱差。
向量以 Python int 的位元表示，第 k 個位元對應第 k 個座標；消去時以最高位為 pivot。
"""


Monomial = Tuple[int, ...]
F2Poly = FrozenSet[Monomial]

ZERO: F2Poly = frozenset()


# -----------------------------------------------------------------------------
# 多項式
# -----------------------------------------------------------------------------


def one(n: int) -> F2Poly:
    return frozenset({(0,) * n})


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def poly_add(a: F2Poly, b: F2Poly) -> F2Poly:
    return a ^ b


def poly_sum(polys: Iterable[F2Poly]) -> F2Poly:
    total: set = set()
    for p in polys:
        total ^= p
    return frozenset(total)


def poly_mul(a: F2Poly, b: F2Poly) -> F2Poly:
    result: set = set()
    for m1 in a:
        for m2 in b:
            m: Monomial = monomial_mul(m1, m2)
            if m in result:
                result.remove(m)
            else:
                result.add(m)
    return frozenset(result)


def poly_pow(a: F2Poly, k: int, n: int) -> F2Poly:
    if k < 0:
        raise ValueError("negative powers are not defined")
    result: F2Poly = one(n)
    base: F2Poly = a
    while k:
        if k & 1:
            result = poly_mul(result, base)
        base = poly_mul(base, base)
        k >>= 1
    return result


def frobenius(a: F2Poly) -> F2Poly:
    """a² = Σ m²（特徵 2）"""

    return frozenset(tuple(2 * e for e in m) for m in a)


def substitute(a: F2Poly, images: Sequence[F2Poly], n_target: int) -> F2Poly:
    """
    - Description:
        把第 i 個變數換成 images[i]
    - Parameters:
        - a: F2Poly
        - images: Sequence[F2Poly]
            每個來源變數的像
        - n_target: int
            目標多項式環的變數個數
    - Return:
        - F2Poly
    """

    cache: Dict[Tuple[int, int], F2Poly] = {}

    def power(i: int, e: int) -> F2Poly:
        key = (i, e)
        if key not in cache:
            cache[key] = poly_pow(images[i], e, n_target)
        return cache[key]

    result: set = set()
    for m in a:
        term: F2Poly = one(n_target)
        for i, e in enumerate(m):
            if e:
                term = poly_mul(term, power(i, e))
                if not term:
                    break
        result ^= term
    return frozenset(result)


def weighted_degree(m: Monomial, weights: Sequence[int]) -> int:
    return sum(e * w for e, w in zip(m, weights))


def monomials_of_degree(weights: Sequence[int], degree: int) -> List[Monomial]:
    """所有加權次數為 degree 的單項式，依字典序遞增"""

    n: int = len(weights)
    found: List[Monomial] = []

    def search(i: int, remaining: int, prefix: List[int]) -> None:
        if i == n:
            if remaining == 0:
                found.append(tuple(prefix))
            return
        w: int = weights[i]
        top: int = remaining // w if w else 0
        for e in range(top + 1):
            prefix.append(e)
            search(i + 1, remaining - e * w, prefix)
            prefix.pop()

    if degree >= 0:
        search(0, degree, [])
    found.sort()
    return found


# -----------------------------------------------------------------------------
# 以位元表示的向量
# -----------------------------------------------------------------------------


def bits_of(indices: Iterable[int]) -> int:
    v: int = 0
    for i in indices:
        v ^= 1 << i
    return v


def indices_of(v: int) -> List[int]:
    out: List[int] = []
    while v:
        low: int = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out


class F2Echelon:
    """
    F_2 向量的列梯形（pivot 為每列的最高位）

    每列附帶一個 tag（同為位元向量），記錄此列是由哪些輸入組合而成，
    供解方程與求零空間時回推係數。
    """

    def __init__(self):
        self._rows: Dict[int, int] = {}
        self._tags: Dict[int, int] = {}

    @classmethod
    def from_vectors(cls, vectors: Iterable[int]) -> "F2Echelon":
        echelon: F2Echelon = cls()
        for v in vectors:
            echelon.insert(v)
        return echelon

    def copy(self) -> "F2Echelon":
        other: F2Echelon = F2Echelon()
        other._rows = dict(self._rows)
        other._tags = dict(self._tags)
        return other

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self._rows, reverse=True)

    @property
    def rows(self) -> List[int]:
        return [self._rows[p] for p in self.pivots]

    def insert(self, v: int, tag: int = 0) -> Tuple[bool, int]:
        """
        - Description:
            併入 v
        - Return:
            - Tuple[bool, int]
                (是否增加秩, 若未增加則為 v 化為 0 時累積的 tag)
        """

        while v:
            top: int = v.bit_length() - 1
            row: Optional[int] = self._rows.get(top)
            if row is None:
                self._rows[top] = v
                self._tags[top] = tag
                return True, 0
            v ^= row
            tag ^= self._tags[top]
        return False, tag

    def reduce(self, v: int) -> int:
        """清除 v 的所有 pivot 位元；結果與列的選法無關"""

        remainder: int = 0
        while v:
            top: int = v.bit_length() - 1
            row: Optional[int] = self._rows.get(top)
            if row is None:
                remainder |= 1 << top
                v ^= 1 << top
            else:
                v ^= row
        return remainder

    def express(self, v: int) -> Optional[int]:
        """v 在列空間中時回傳組合它的 tag，否則 None"""

        tag: int = 0
        while v:
            top: int = v.bit_length() - 1
            row: Optional[int] = self._rows.get(top)
            if row is None:
                return None
            v ^= row
            tag ^= self._tags[top]
        return tag

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def contains_all(self, vectors: Iterable[int]) -> bool:
        return all(v in self for v in vectors)


def nullspace(columns: Sequence[int]) -> List[int]:
    """{a : Σ a_k · columns[k] = 0}，以 tag 位元回傳一組基底"""

    echelon: F2Echelon = F2Echelon()
    kernel: List[int] = []
    for k, col in enumerate(columns):
        added, tag = echelon.insert(col, 1 << k)
        if not added:
            kernel.append(tag)
    return kernel


def solve(columns: Sequence[int], target: int) -> Optional[Tuple[int, List[int]]]:
    """
    - Description:
        解 Σ a_k · columns[k] = target
    - Return:
        - Optional[Tuple[int, List[int]]]
            (一組特解, 零空間基底)；無解時為 None
    """

    echelon: F2Echelon = F2Echelon()
    kernel: List[int] = []
    for k, col in enumerate(columns):
        added, tag = echelon.insert(col, 1 << k)
        if not added:
            kernel.append(tag)
    particular: Optional[int] = echelon.express(target)
    if particular is None:
        return None
    return particular, kernel


def canonical_modulo(v: int, kernel: Sequence[int]) -> int:
    """v 在 v + span(kernel) 中的代表元（清除 kernel 梯形的 pivot 位元）"""

    return F2Echelon.from_vectors(kernel).reduce(v)


def row_space_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    ea: F2Echelon = F2Echelon.from_vectors(a)
    eb: F2Echelon = F2Echelon.from_vectors(b)
    return ea.rank == eb.rank and ea.contains_all(b)
