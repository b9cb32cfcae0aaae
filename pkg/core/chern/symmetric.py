from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, List, Sequence, Tuple

from loguru import logger
from sympy import ZZ, Poly, Symbol, symbols

from core.chern.polynomial import ChernPolynomial, atom_series, series_mul, series_pow
from core.gamma import ChernMonomial
from core.utils import MAX_CHERN_ROOTS, ChernBudgetError

"""
分裂原理下的萬用多項式

把 x、y 寫成形式 Chern 根 α_1..α_n、β_1..β_m 的線元素和，展開目標表示的根的
基本對稱多項式，再以「減去首項對應的基本對稱多項式乘積」反覆化簡，
改寫成 c_i(x) = e_i(α)、c_j(y) = e_j(β) 的整係數多項式。
"""


Group = Tuple[str, List[int]]


def _root_symbols(prefix: str, n: int) -> List[Symbol]:
    return list(symbols(f"{prefix}1:{n + 1}")) if n else []


def _elementary_of(roots: Sequence[Poly], k: int, gens: Sequence[Symbol]) -> Poly:
    # E[j] ← E[j] + r·E[j−1]，只保留到 e_k
    series: List[Poly] = [Poly(1, *gens, domain=ZZ)] + [Poly(0, *gens, domain=ZZ) for _ in range(k)]
    for root in roots:
        for j in range(k, 0, -1):
            series[j] = series[j] + root * series[j - 1]
    return series[k]


def symmetric_reduce(poly: Poly, groups: Sequence[Group]) -> ChernPolynomial:
    """
    - Description:
        對每組根分別對稱的多項式，改寫為各組基本對稱多項式的多項式
    - Parameters:
        - poly: Poly
            以全部根為生成元的整係數多項式
        - groups: Sequence[Tuple[str, List[int]]]
            (標籤, 該組根在 poly.gens 中的位置)
    - Return:
        - ChernPolynomial
            c_i(標籤) 代表該組的 e_i
    """

    gens: Tuple[Symbol, ...] = poly.gens
    elementary: Dict[Tuple[str, int], Poly] = {}
    for label, positions in groups:
        group_roots: List[Poly] = [Poly(gens[j], *gens, domain=ZZ) for j in positions]
        for i in range(1, len(positions) + 1):
            elementary[(label, i)] = _elementary_of(group_roots, i, gens)

    result: Dict[ChernMonomial, int] = {}
    current: Poly = poly
    while not current.is_zero:
        terms = current.as_dict()
        lead: Tuple[int, ...] = max(terms)
        coeff: int = int(terms[lead])
        factors: List[Tuple[str, int]] = []
        product: Poly = Poly(1, *gens, domain=ZZ)
        for label, positions in groups:
            exps: List[int] = [lead[j] for j in positions] + [0]
            for i in range(len(positions)):
                power: int = exps[i] - exps[i + 1]
                if power < 0:
                    raise ValueError(f"polynomial is not symmetric in the {label} roots")
                if power:
                    factors.extend([(label, i + 1)] * power)
                    product = product * elementary[(label, i + 1)] ** power
        monomial: ChernMonomial = ChernMonomial.of(*factors)
        result[monomial] = result.get(monomial, 0) + coeff
        current = current - product.mul_ground(coeff)
    return ChernPolynomial(result)


@lru_cache(maxsize=None)
def chern_of_tensor(n: int, m: int, k: int) -> ChernPolynomial:
    """
    - Description:
        c_k(x ⊗ y)，deg x = n、deg y = m，以 c_i(x)、c_j(y) 表示
    - Parameters:
        - n: int
        - m: int
        - k: int
            0 ≤ k ≤ n·m
    - Return:
        - ChernPolynomial
            變數標籤為 "x" 與 "y"
    """

    if n < 0 or m < 0 or not 0 <= k <= n * m:
        raise ValueError(f"need 0 <= k <= n*m, got n={n}, m={m}, k={k}")
    if n * m > MAX_CHERN_ROOTS:
        raise ChernBudgetError(f"x ⊗ y has {n * m} Chern roots, budget is {MAX_CHERN_ROOTS}")
    if k == 0:
        return ChernPolynomial.one()

    alphas: List[Symbol] = _root_symbols("a", n)
    betas: List[Symbol] = _root_symbols("b", m)
    gens: List[Symbol] = alphas + betas
    roots: List[Poly] = [Poly(a + b, *gens, domain=ZZ) for a in alphas for b in betas]
    expanded: Poly = _elementary_of(roots, k, gens)
    groups: List[Group] = [("x", list(range(n))), ("y", list(range(n, n + m)))]
    result: ChernPolynomial = symmetric_reduce(expanded, groups)
    logger.debug(f"c_{k}(x⊗y), deg x={n}, deg y={m}: {len(result.terms)} terms")
    return result


@lru_cache(maxsize=None)
def chern_of_exterior(n: int, l: int, k: int) -> ChernPolynomial:
    """
    - Description:
        c_k(λ^l x)，deg x = n；λ^l x 的根為 l 個相異 α 之和
    - Parameters:
        - n: int
        - l: int
        - k: int
            0 ≤ k ≤ C(n, l)
    - Return:
        - ChernPolynomial
            變數標籤為 "x"
    """

    size: int = comb(n, l) if n >= 0 and l >= 0 else -1
    if size < 0 or not 0 <= k <= size:
        raise ValueError(f"need 0 <= k <= C(n,l), got n={n}, l={l}, k={k}")
    if size > MAX_CHERN_ROOTS:
        raise ChernBudgetError(f"λ^{l} of a degree-{n} element has {size} Chern roots, budget is {MAX_CHERN_ROOTS}")
    if k == 0:
        return ChernPolynomial.one()
    if l == 0:
        return ChernPolynomial()  # λ^0 = 1

    alphas: List[Symbol] = _root_symbols("a", n)
    roots: List[Poly] = [Poly(sum(subset), *alphas, domain=ZZ) for subset in combinations(alphas, l)]
    expanded: Poly = _elementary_of(roots, k, alphas)
    return symmetric_reduce(expanded, [("x", list(range(n)))])


def whitney_total(parts: Sequence[Tuple[int, str]], degree: int) -> List[ChernPolynomial]:
    """
    - Description:
        c_T(Σ x_j) = Π c_T(x_j)，截斷到 T^degree
    - Parameters:
        - parts: Sequence[Tuple[int, str]]
            (deg x_j, 標籤)
        - degree: int
    - Return:
        - List[ChernPolynomial]
            第 i 項為 c_i
    """

    total: List[ChernPolynomial] = [ChernPolynomial.one()] + [ChernPolynomial() for _ in range(degree)]
    for part_degree, label in parts:
        total = series_mul(total, atom_series(label, part_degree, degree), degree)
    return total


def chern_of_multiple(n: int, k: int, m: int) -> ChernPolynomial:
    """c_k(m·x)，deg x = n；m < 0 時用 c_T(x) 的逆級數"""

    if k < 0:
        raise ValueError(f"class index must be >= 0, got {k}")
    return series_pow(atom_series("x", n, k), m, k)[k]


def elementary_of_values(values: Sequence[int], k: int) -> int:
    """e_k(values)，用於以整數代入根的檢查"""

    series: List[int] = [1] + [0] * k
    for v in values:
        for j in range(k, 0, -1):
            series[j] += v * series[j - 1]
    return series[k]
