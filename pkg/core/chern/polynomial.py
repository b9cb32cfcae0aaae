from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from core.gamma import ChernMonomial

"""
ChernPolynomial：以 Chern 單項式為基底的整係數多項式（deg c_i = i）

total Chern 級數以 List[ChernPolynomial] 表示，第 i 項為 c_i，截斷在指定次數。
"""


Factor = Tuple[str, int]


class ChernPolynomial:
    """Σ a_m · m，m 為 ChernMonomial；建立後不再修改"""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[ChernMonomial, int]] = None):
        self.terms: Dict[ChernMonomial, int] = {m: int(c) for m, c in (terms or {}).items() if c}

    # === 建構 ===

    @classmethod
    def zero(cls) -> "ChernPolynomial":
        return cls()

    @classmethod
    def constant(cls, value: int) -> "ChernPolynomial":
        return cls({ChernMonomial(): value})

    @classmethod
    def one(cls) -> "ChernPolynomial":
        return cls.constant(1)

    @classmethod
    def variable(cls, label: str, i: int) -> "ChernPolynomial":
        """c_i(label)；i = 0 時為 1"""

        if i == 0:
            return cls.one()
        return cls({ChernMonomial.of((label, i)): 1})

    @classmethod
    def parse(cls, text: str) -> "ChernPolynomial":
        """`c1(x)^2 + 2*c1(x)*c1(y) - c2(x)` 形式"""

        body: str = text.replace(" ", "")
        if not body or body == "0":
            return cls()
        result: Dict[ChernMonomial, int] = {}
        for sign, term in _split_terms(body):
            coeff_text, _, rest = term.partition("*") if term[:1].isdigit() else ("", "", term)
            if coeff_text and not rest:
                coeff, monomial = int(coeff_text), ChernMonomial()
            else:
                coeff = int(coeff_text) if coeff_text else 1
                monomial = ChernMonomial.parse(rest)
            result[monomial] = result.get(monomial, 0) + sign * coeff
        return cls(result)

    # === 環運算 ===

    def __add__(self, other: Union["ChernPolynomial", int]) -> "ChernPolynomial":
        other = _coerce(other)
        terms: Dict[ChernMonomial, int] = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return ChernPolynomial(terms)

    __radd__ = __add__

    def __neg__(self) -> "ChernPolynomial":
        return ChernPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Union["ChernPolynomial", int]) -> "ChernPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "ChernPolynomial":
        return _coerce(other) - self

    def __mul__(self, other: Union["ChernPolynomial", int]) -> "ChernPolynomial":
        if isinstance(other, int):
            return ChernPolynomial({m: c * other for m, c in self.terms.items()})
        terms: Dict[ChernMonomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m: ChernMonomial = m1 * m2
                terms[m] = terms.get(m, 0) + c1 * c2
        return ChernPolynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ChernPolynomial":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result: ChernPolynomial = ChernPolynomial.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = ChernPolynomial.constant(other)
        if not isinstance(other, ChernPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # === 分級 ===

    @property
    def degrees(self) -> List[int]:
        return sorted({m.degree for m in self.terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees) <= 1

    def homogeneous_part(self, k: int) -> "ChernPolynomial":
        return ChernPolynomial({m: c for m, c in self.terms.items() if m.degree == k})

    # === 代換 ===

    def substitute(self, mapping: Mapping[Factor, "ChernPolynomial"]) -> "ChernPolynomial":
        """同時代換：mapping 中的 c_i(label) 換成對應多項式，其餘保留"""

        result: ChernPolynomial = ChernPolynomial()
        for monomial, coeff in self.terms.items():
            term: ChernPolynomial = ChernPolynomial.constant(coeff)
            for factor in monomial.factors:
                image: ChernPolynomial = (
                    mapping[factor] if factor in mapping else ChernPolynomial.variable(*factor)
                )
                term = term * image
            result = result + term
        return result

    def relabel(self, mapping: Mapping[str, str]) -> "ChernPolynomial":
        return ChernPolynomial(
            _sum_terms(
                (ChernMonomial.of(*((mapping.get(label, label), i) for label, i in m.factors)), c)
                for m, c in self.terms.items()
            )
        )

    def evaluate(self, values: Mapping[Factor, int]) -> int:
        total: int = 0
        for monomial, coeff in self.terms.items():
            term: int = coeff
            for factor in monomial.factors:
                term *= values[factor]
            total += term
        return total

    def reduce_mod(self, modulus: int) -> "ChernPolynomial":
        return ChernPolynomial({m: c % modulus for m, c in self.terms.items()})

    # === 文字格式 ===

    def sorted_terms(self) -> List[Tuple[ChernMonomial, int]]:
        return sorted(self.terms.items(), key=lambda mc: (-mc[0].degree, mc[0].factors))

    def term_lines(self) -> List[str]:
        """機器可讀的 `coeff:monomial` 列"""

        return [f"{c}:{m}" for m, c in self.sorted_terms()]

    def __str__(self) -> str:
        pieces: List[str] = []
        for monomial, coeff in self.sorted_terms():
            if not monomial.factors:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = str(monomial)
            else:
                body = f"{abs(coeff)}*{monomial}"
            pieces.append(("- " if coeff < 0 else "+ ") + body)
        if not pieces:
            return "0"
        text: str = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"ChernPolynomial({self})"


def _coerce(value: Union[ChernPolynomial, int]) -> ChernPolynomial:
    return ChernPolynomial.constant(value) if isinstance(value, int) else value


def _sum_terms(items: Iterable[Tuple[ChernMonomial, int]]) -> Dict[ChernMonomial, int]:
    terms: Dict[ChernMonomial, int] = {}
    for m, c in items:
        terms[m] = terms.get(m, 0) + c
    return terms


def _split_terms(body: str) -> List[Tuple[int, str]]:
    # 在括號外的 + / − 處切開
    terms: List[Tuple[int, str]] = []
    depth: int = 0
    sign: int = 1
    start: int = 0
    for pos, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and pos > start:
            terms.append((sign, body[start:pos]))
            sign, start = (1 if ch == "+" else -1), pos + 1
        elif ch in "+-" and depth == 0:
            sign, start = (1 if ch == "+" else -1) * sign, pos + 1
    if start >= len(body):
        raise ValueError(f"dangling operator in {body!r}")
    terms.append((sign, body[start:]))
    return terms


# -----------------------------------------------------------------------------
# total Chern 級數
# -----------------------------------------------------------------------------


def atom_series(label: str, degree: int, top: int) -> List[ChernPolynomial]:
    """c_T(x) = 1 + c_1(x)T + ... + c_deg(x)T^deg，截斷到 T^top"""

    return [
        ChernPolynomial.variable(label, i) if i <= degree else ChernPolynomial()
        for i in range(top + 1)
    ]


def series_mul(a: List[ChernPolynomial], b: List[ChernPolynomial], top: int) -> List[ChernPolynomial]:
    result: List[ChernPolynomial] = [ChernPolynomial() for _ in range(top + 1)]
    for i, ai in enumerate(a[: top + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[: top + 1 - i]):
            if bj:
                result[i + j] = result[i + j] + ai * bj
    return result


def series_inverse(a: List[ChernPolynomial], top: int) -> List[ChernPolynomial]:
    """首項為 1 的級數之逆"""

    if a[0] != ChernPolynomial.one():
        raise ValueError("series must start with 1")
    inverse: List[ChernPolynomial] = [ChernPolynomial.one()]
    for n in range(1, top + 1):
        total: ChernPolynomial = ChernPolynomial()
        for i in range(1, min(n, len(a) - 1) + 1):
            total = total + a[i] * inverse[n - i]
        inverse.append(-total)
    return inverse


def series_pow(a: List[ChernPolynomial], m: int, top: int) -> List[ChernPolynomial]:
    base: List[ChernPolynomial] = a if m >= 0 else series_inverse(a, top)
    result: List[ChernPolynomial] = [ChernPolynomial.one()] + [ChernPolynomial() for _ in range(top)]
    for _ in range(abs(m)):
        result = series_mul(result, base, top)
    return result
