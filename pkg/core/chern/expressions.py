from abc import ABC, abstractmethod
from dataclasses import dataclass
from math import comb
from typing import List, Tuple, Union

from core.characters import CharacterTable, VirtualRep, exterior_power
from core.chern.polynomial import ChernPolynomial, atom_series, series_mul, series_pow
from core.chern.symmetric import chern_of_exterior, chern_of_tensor
from core.gamma import chern_lift
from core.utils import IdentityMismatchError

"""
表示式：由帶標籤的不可約表示以和、張量、外冪、整數倍組成

evaluate 給出 R(G) 中的元素；total_chern 用萬用多項式給出以各原子 c_i 表示的
total Chern 級數。兩個表示式在 R(G) 中相等時，其 Chern 類之差是一條關係。
"""


class ChernExpression(ABC):
    @abstractmethod
    def evaluate(self, table: CharacterTable) -> VirtualRep:
        ...

    @abstractmethod
    def total_chern(self, table: CharacterTable, top: int) -> List[ChernPolynomial]:
        """c_0 .. c_top"""

    @abstractmethod
    def is_effective(self) -> bool:
        """是否為真表示（無負係數）；萬用多項式只對這類元素使用"""

    def degree(self, table: CharacterTable) -> int:
        return self.evaluate(table).degree

    def chern(self, table: CharacterTable, k: int) -> ChernPolynomial:
        return self.total_chern(table, k)[k]

    def __add__(self, other: "ChernExpression") -> "Sum":
        return Sum((self, other))

    def __mul__(self, other: Union["ChernExpression", int]) -> "ChernExpression":
        if isinstance(other, int):
            return Multiple(other, self)
        return Tensor(self, other)

    def __rmul__(self, other: int) -> "Multiple":
        return Multiple(other, self)


def _effective_degree(expr: ChernExpression, table: CharacterTable) -> int:
    if not expr.is_effective():
        raise ValueError(f"universal polynomials need an effective representation, got {expr}")
    return expr.degree(table)


@dataclass(frozen=True)
class Atom(ChernExpression):
    label: str

    def evaluate(self, table: CharacterTable) -> VirtualRep:
        return table.rep(self.label)

    def total_chern(self, table: CharacterTable, top: int) -> List[ChernPolynomial]:
        return atom_series(self.label, table[self.label].degree, top)

    def is_effective(self) -> bool:
        return True

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Sum(ChernExpression):
    terms: Tuple[ChernExpression, ...]

    def evaluate(self, table: CharacterTable) -> VirtualRep:
        total: VirtualRep = VirtualRep.zero(table)
        for term in self.terms:
            total = total + term.evaluate(table)
        return total

    def total_chern(self, table: CharacterTable, top: int) -> List[ChernPolynomial]:
        series: List[ChernPolynomial] = [ChernPolynomial.one()] + [ChernPolynomial() for _ in range(top)]
        for term in self.terms:
            series = series_mul(series, term.total_chern(table, top), top)
        return series

    def is_effective(self) -> bool:
        return all(term.is_effective() for term in self.terms)

    def __str__(self) -> str:
        return " + ".join(str(t) for t in self.terms) if self.terms else "0"


@dataclass(frozen=True)
class Multiple(ChernExpression):
    factor: int
    inner: ChernExpression

    def evaluate(self, table: CharacterTable) -> VirtualRep:
        return self.inner.evaluate(table) * self.factor

    def total_chern(self, table: CharacterTable, top: int) -> List[ChernPolynomial]:
        return series_pow(self.inner.total_chern(table, top), self.factor, top)

    def is_effective(self) -> bool:
        return self.factor >= 0 and self.inner.is_effective()

    def __str__(self) -> str:
        return f"{self.factor}*({self.inner})"


@dataclass(frozen=True)
class Tensor(ChernExpression):
    left: ChernExpression
    right: ChernExpression

    def evaluate(self, table: CharacterTable) -> VirtualRep:
        return self.left.evaluate(table) * self.right.evaluate(table)

    def total_chern(self, table: CharacterTable, top: int) -> List[ChernPolynomial]:
        n: int = _effective_degree(self.left, table)
        m: int = _effective_degree(self.right, table)
        left: List[ChernPolynomial] = self.left.total_chern(table, n)
        right: List[ChernPolynomial] = self.right.total_chern(table, m)
        mapping = {("x", i): left[i] for i in range(1, n + 1)}
        mapping.update({("y", j): right[j] for j in range(1, m + 1)})
        return [
            chern_of_tensor(n, m, k).substitute(mapping) if k <= n * m else ChernPolynomial()
            for k in range(top + 1)
        ]

    def is_effective(self) -> bool:
        return self.left.is_effective() and self.right.is_effective()

    def __str__(self) -> str:
        return f"({self.left})⊗({self.right})"


@dataclass(frozen=True)
class Lambda(ChernExpression):
    power: int
    inner: ChernExpression

    def evaluate(self, table: CharacterTable) -> VirtualRep:
        return exterior_power(self.inner.evaluate(table), self.power)

    def total_chern(self, table: CharacterTable, top: int) -> List[ChernPolynomial]:
        n: int = _effective_degree(self.inner, table)
        inner: List[ChernPolynomial] = self.inner.total_chern(table, n)
        mapping = {("x", i): inner[i] for i in range(1, n + 1)}
        size: int = comb(n, self.power)
        return [
            chern_of_exterior(n, self.power, k).substitute(mapping) if k <= size else ChernPolynomial()
            for k in range(top + 1)
        ]

    def is_effective(self) -> bool:
        return self.power >= 0 and self.inner.is_effective()

    def __str__(self) -> str:
        return f"λ^{self.power}({self.inner})"


def relation_from_identity(
    lhs: ChernExpression, rhs: ChernExpression, k: int, table: CharacterTable
) -> ChernPolynomial:
    """
    - Description:
        lhs = rhs 在 R(G) 中成立時，c_k(lhs) − c_k(rhs) 是 Chern 類之間的一條關係
    - Parameters:
        - lhs: ChernExpression
        - rhs: ChernExpression
        - k: int
        - table: CharacterTable
    - Return:
        - ChernPolynomial
    """

    left: VirtualRep = lhs.evaluate(table)
    right: VirtualRep = rhs.evaluate(table)
    if left != right:
        raise IdentityMismatchError(f"{lhs} and {rhs} differ as virtual characters on {table.group.name}")
    return lhs.chern(table, k) - rhs.chern(table, k)


def lift_polynomial(table: CharacterTable, poly: ChernPolynomial) -> VirtualRep:
    """Σ a_m · C(m)：把 Chern 多項式以 γ 運算的 Chern 類送回 R(G)"""

    total: VirtualRep = VirtualRep.zero(table)
    for monomial, coeff in poly.terms.items():
        total = total + chern_lift(table, monomial) * coeff
    return total
