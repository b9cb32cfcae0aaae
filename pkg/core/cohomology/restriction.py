import re
from functools import reduce
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Poly, symbols

from core.algebra import F2Poly, poly_mul
from core.algebra.f2 import one
from core.characters import CharacterTable, VirtualRep, abelian_table, restrict
from core.gamma import ChernMonomial
from core.groups import FiniteMatrixGroup

"""
Chern 類限制到基本交換子群

V 為基本交換 2-群、基底 v_1..v_r 時，CH*(BV)/2 = F_2[x_1..x_r]，x_i = c_1(σ_i)。
表示限制到 V 後分裂成一次特徵標 σ^a，其 c_1 為 Σ a_i x_i；c_k 是這些線性式的
第 k 個基本對稱多項式。結果以 Chow 分次的 F2Poly（變數 x1..xr）表示。
"""


_SIGMA = re.compile(r"^sigma\(([\d,]*)\)$")


def _sigma_exponents(label: str) -> Tuple[int, ...]:
    match = _SIGMA.match(label)
    if match is None:
        raise ValueError(f"{label!r} is not a sigma(...) label")
    body: str = match.group(1)
    return tuple(int(a) for a in body.split(",")) if body else ()


def line_decomposition(
    table: CharacterTable,
    label: str,
    subgroup: FiniteMatrixGroup,
    sub_table: Optional[CharacterTable] = None,
) -> List[Tuple[Tuple[int, ...], int]]:
    """
    - Description:
        Res^G_V(ρ) 的一次特徵標分解
    - Parameters:
        - table: CharacterTable
            G 的特徵標表
        - label: str
            ρ 的標籤或別名
        - subgroup: FiniteMatrixGroup
            帶有有序基底的基本交換 2-子群
        - sub_table: Optional[CharacterTable]
            abelian_table(subgroup)，重複呼叫時可傳入以省去重建
    - Return:
        - List[Tuple[Tuple[int, ...], int]]
            (σ 的指數向量, 重數)
    """

    if subgroup.p != 2:
        raise ValueError(f"{subgroup.name}: Chern restrictions are computed mod 2 only")
    sub_table = sub_table if sub_table is not None else abelian_table(subgroup)
    restricted: VirtualRep = restrict(table.rep(label), subgroup, sub_table)
    lines: List[Tuple[Tuple[int, ...], int]] = []
    for i, mult in enumerate(restricted.coords):
        if mult:
            lines.append((_sigma_exponents(sub_table.labels[i]), int(mult)))
    return lines


def chern_restriction(
    table: CharacterTable,
    label: str,
    subgroup: FiniteMatrixGroup,
    k: int,
    sub_table: Optional[CharacterTable] = None,
) -> F2Poly:
    """
    - Description:
        c_k(ρ)|_V ∈ CH^k(BV)/2，即各線性式 Σ a_i x_i 的 e_k
    - Parameters:
        - table: CharacterTable
        - label: str
        - subgroup: FiniteMatrixGroup
        - k: int
        - sub_table: Optional[CharacterTable]
    - Return:
        - F2Poly
            變數依 subgroup.basis 的順序
    """

    if k < 0:
        raise ValueError(f"class index must be >= 0, got {k}")
    rank: int = len(subgroup.basis or [])
    if k == 0:
        return one(rank)

    lines = line_decomposition(table, label, subgroup, sub_table)
    if any(mult < 0 for _, mult in lines):
        raise ValueError(f"{label} does not restrict to a genuine representation of {subgroup.name}")
    if rank == 0:
        return frozenset()

    xs = symbols(f"x1:{rank + 1}")
    factors: List[Poly] = [
        Poly(1 + sum(a * x for a, x in zip(exps, xs)), *xs, modulus=2) ** mult for exps, mult in lines
    ]
    total: Poly = reduce(lambda a, b: a * b, factors, Poly(1, *xs, modulus=2))
    return frozenset(
        monomial for monomial, coeff in total.terms() if sum(monomial) == k and int(coeff) % 2
    )


class RestrictionCatalog:
    """
    同一個子群上的 Chern 類限制，快取 abelian_table 與已算過的 c_k
    """

    def __init__(self, table: CharacterTable, subgroup: FiniteMatrixGroup):
        self.table: CharacterTable = table
        self.subgroup: FiniteMatrixGroup = subgroup
        self.sub_table: CharacterTable = abelian_table(subgroup)
        self.rank: int = len(subgroup.basis or [])
        self._cache: Dict[Tuple[str, int], F2Poly] = {}

    def chern(self, label: str, k: int) -> F2Poly:
        key: Tuple[str, int] = (label, k)
        if key not in self._cache:
            self._cache[key] = chern_restriction(self.table, label, self.subgroup, k, self.sub_table)
        return self._cache[key]

    def monomial(self, monomial: ChernMonomial) -> F2Poly:
        """Π c_i(ρ)|_V"""

        result: F2Poly = one(self.rank)
        for label, i in monomial.factors:
            result = poly_mul(result, self.chern(label, i))
        return result

    def monomials(self, monomials: Sequence[ChernMonomial]) -> List[F2Poly]:
        return [self.monomial(m) for m in monomials]
