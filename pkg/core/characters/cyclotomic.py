import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Tuple, Union

from sympy import ImmutableMatrix, Poly, cyclotomic_poly, symbols, totient

from core.utils import CyclotomicError

"""
Cyclotomic：Z[ζ_N] 中的精確運算

係數以 Python int 的 tuple 儲存，基底為 1, ζ, ..., ζ^{φ(N)-1}，
並以 Φ_N 化簡到唯一的標準形；兩數相等若且唯若係數相同。
"""


_X = symbols("x")
_TERM_PATTERN = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(z(?:\^(\d+))?)?")


@lru_cache(maxsize=None)
def cyclotomic_coefficients(modulus: int) -> Tuple[int, ...]:
    """Φ_N 的係數（由低次到高次，首項係數為 1）"""

    if modulus < 1:
        raise CyclotomicError(f"modulus must be positive, got {modulus}")
    coeffs = Poly(cyclotomic_poly(modulus, _X), _X).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


@lru_cache(maxsize=None)
def field_degree(modulus: int) -> int:
    return int(totient(modulus))


def _reduce(vector: List[int], modulus: int) -> Tuple[int, ...]:
    phi: Tuple[int, ...] = cyclotomic_coefficients(modulus)
    d: int = len(phi) - 1
    vec: List[int] = list(vector) + [0] * max(0, d - len(vector))
    for i in range(len(vec) - 1, d - 1, -1):
        c: int = vec[i]
        if c:
            vec[i] = 0
            for j in range(d):
                vec[i - d + j] -= c * phi[j]
    return tuple(vec[:d])


@lru_cache(maxsize=None)
def _zeta_power(modulus: int, k: int) -> Tuple[int, ...]:
    vec: List[int] = [0] * (k % modulus + 1)
    vec[k % modulus] = 1
    return _reduce(vec, modulus)


@lru_cache(maxsize=None)
def _subfield_basis(modulus: int, ambient: int) -> ImmutableMatrix:
    # 行為 ζ_m^i（i < φ(m)）在 ζ_N 冪基底下的座標
    step: int = ambient // modulus
    columns: List[List[int]] = []
    for i in range(field_degree(modulus)):
        vec: List[int] = [0] * (i * step + 1)
        vec[i * step] = 1
        columns.append(list(_reduce(vec, ambient)))
    return ImmutableMatrix(columns).T


class Cyclotomic:
    """
    Z[ζ_N] 的元素

    不同模數的運算會先把兩邊提升到 lcm 模數。
    """

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs: Iterable[int]):
        self.modulus: int = modulus
        self.coeffs: Tuple[int, ...] = _reduce([int(c) for c in coeffs], modulus)

    # === 建構 ===

    @classmethod
    def from_int(cls, value: int, modulus: int = 1) -> "Cyclotomic":
        return cls(modulus, [value])

    @classmethod
    def zeta(cls, modulus: int, k: int = 1) -> "Cyclotomic":
        """ζ_N^k"""

        return cls(modulus, _zeta_power(modulus, int(k) % modulus))

    @classmethod
    def from_exponents(cls, modulus: int, exponents: Iterable[int]) -> "Cyclotomic":
        """Σ ζ_N^{k}，k 可重複"""

        vec: List[int] = [0] * modulus
        for k in exponents:
            vec[k % modulus] += 1
        return cls.from_power_vector(modulus, vec)

    @classmethod
    def from_power_vector(cls, modulus: int, counts: Iterable[int]) -> "Cyclotomic":
        """Σ counts[k] · ζ_N^k"""

        return cls(modulus, list(counts))

    # === 模數轉換 ===

    def lift(self, modulus: int) -> "Cyclotomic":
        """把 ζ_N 寫成 ζ_M^{M/N}（M 必須是 N 的倍數）"""

        if modulus == self.modulus:
            return self
        if modulus % self.modulus:
            raise CyclotomicError(f"cannot lift modulus {self.modulus} to {modulus}")
        step: int = modulus // self.modulus
        vec: List[int] = [0] * (step * len(self.coeffs) + 1)
        for i, c in enumerate(self.coeffs):
            vec[i * step] += c
        return Cyclotomic(modulus, vec)

    def _coerce(self, other: Union["Cyclotomic", int]) -> Tuple["Cyclotomic", "Cyclotomic"]:
        if isinstance(other, int):
            return self, Cyclotomic.from_int(other, self.modulus)
        if not isinstance(other, Cyclotomic):
            raise TypeError(f"cannot combine Cyclotomic with {type(other).__name__}")
        if other.modulus == self.modulus:
            return self, other
        common: int = math.lcm(self.modulus, other.modulus)
        return self.lift(common), other.lift(common)

    # === 環運算 ===

    def __add__(self, other: Union["Cyclotomic", int]) -> "Cyclotomic":
        a, b = self._coerce(other)
        return Cyclotomic(a.modulus, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.modulus, [-x for x in self.coeffs])

    def __sub__(self, other: Union["Cyclotomic", int]) -> "Cyclotomic":
        a, b = self._coerce(other)
        return Cyclotomic(a.modulus, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other: int) -> "Cyclotomic":
        return (-self) + other

    def __mul__(self, other: Union["Cyclotomic", int]) -> "Cyclotomic":
        if isinstance(other, int):
            return Cyclotomic(self.modulus, [x * other for x in self.coeffs])
        a, b = self._coerce(other)
        vec: List[int] = [0] * (len(a.coeffs) + len(b.coeffs))
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    vec[i + j] += x * y
        return Cyclotomic(a.modulus, vec)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Cyclotomic":
        if k < 0:
            raise CyclotomicError("negative powers are not supported")
        result: Cyclotomic = Cyclotomic.from_int(1, self.modulus)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Cyclotomic.from_int(other, self.modulus)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._coerce(other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        # 最小模數的形式與寫法無關
        return hash(self.normalized().coeffs)

    # === Galois 作用 ===

    def galois_power(self, k: int) -> "Cyclotomic":
        """ζ_N ↦ ζ_N^k；gcd(k,N)=1 時為 Galois 自同構"""

        result: List[int] = [0] * field_degree(self.modulus)
        for i, c in enumerate(self.coeffs):
            if c:
                image: Tuple[int, ...] = _zeta_power(self.modulus, i * k)
                for j, v in enumerate(image):
                    result[j] += c * v
        return Cyclotomic(self.modulus, result)

    def conj(self) -> "Cyclotomic":
        return self.galois_power(self.modulus - 1)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_trace(self) -> Fraction:
        """
        - Description:
            Tr(a)/φ(N)：有理數時即為其本身
        - Return:
            - Fraction
        """

        total: Cyclotomic = Cyclotomic.from_int(0, self.modulus)
        units: List[int] = [k for k in range(1, self.modulus + 1) if math.gcd(k, self.modulus) == 1]
        for k in units:
            total = total + self.galois_power(k)
        if not total.is_rational():
            raise CyclotomicError(f"trace of {self} is not rational")
        return Fraction(total.coeffs[0], len(units))

    def to_int(self) -> int:
        if not self.is_rational():
            raise CyclotomicError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def normalized(self) -> "Cyclotomic":
        """以能表示此數的最小模數重寫（同一個數不論原本的模數，結果唯一）"""

        target: ImmutableMatrix = ImmutableMatrix(self.coeffs)
        for m in sorted(d for d in range(1, self.modulus + 1) if self.modulus % d == 0):
            try:
                solution, _ = _subfield_basis(m, self.modulus).gauss_jordan_solve(target)
            except ValueError:
                continue
            return Cyclotomic(m, [int(c) for c in solution])
        return self

    def __complex__(self) -> complex:
        return sum(
            c * complex(math.cos(2 * math.pi * i / self.modulus), math.sin(2 * math.pi * i / self.modulus))
            for i, c in enumerate(self.coeffs)
        )

    # === 文字格式 ===

    def __str__(self) -> str:
        terms: List[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            base: str = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not base:
                body = str(abs(c))
            elif abs(c) == 1:
                body = base
            else:
                body = f"{abs(c)}*{base}"
            sign: str = "-" if c < 0 else "+"
            terms.append(f"{sign} {body}")
        if not terms:
            return "0"
        text: str = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"Cyclotomic({self.modulus}, {list(self.coeffs)})"


def parse_cyclotomic(text: str, modulus: int) -> Cyclotomic:
    """
    - Description:
        解析 `a0 + a1*z + a2*z^2` 形式（z = ζ_N），為 __str__ 的反向
    """

    body: str = text.replace(" ", "")
    if not body:
        raise CyclotomicError("empty cyclotomic string")
    vec: List[int] = [0] * modulus
    pos: int = 0
    while pos < len(body):
        match = _TERM_PATTERN.match(body, pos)
        if match is None or match.end() == pos:
            raise CyclotomicError(f"cannot parse {text!r} at position {pos}")
        sign, digits, zpart, exp = match.groups()
        if not digits and not zpart:
            raise CyclotomicError(f"cannot parse {text!r} at position {pos}")
        coeff: int = int(digits) if digits else 1
        power: int = (int(exp) if exp else 1) if zpart else 0
        vec[power % modulus] += -coeff if sign == "-" else coeff
        pos = match.end()
    return Cyclotomic(modulus, vec)


def cyc_add(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a + b


def cyc_mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a * b


def cyc_neg(a: Cyclotomic) -> Cyclotomic:
    return -a
