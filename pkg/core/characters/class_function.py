from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Union

import numpy as np
from loguru import logger

from core.characters.cyclotomic import Cyclotomic, parse_cyclotomic
from core.groups import ConjugacyData, FiniteMatrixGroup, conjugacy_classes
from core.utils import CharacterTableError, CyclotomicError, NotAVirtualCharacterError

"""
類函數、特徵標表與虛擬表示

- ClassFunction：每個共軛類一個 Cyclotomic 值
- CharacterTable：不可約特徵標（依次數、再依係數編碼遞減排序，平凡表示永遠在第 0 列）
- VirtualRep：R(G) 中的整數座標向量，乘法透過結構常數
"""


def _to_modulus(value: Cyclotomic, modulus: int) -> Cyclotomic:
    # 母群的值可能帶較大的模數，先化到最小模數再提升
    if modulus % value.modulus:
        value = value.normalized()
    return value.lift(modulus)


class ClassFunction:
    """群上的類函數，值為 Z[ζ_N] 中的精確數"""

    def __init__(self, group: FiniteMatrixGroup, values: Sequence[Cyclotomic]):
        self.group: FiniteMatrixGroup = group
        self.conjugacy: ConjugacyData = conjugacy_classes(group)
        if len(values) != self.conjugacy.num_classes:
            raise ValueError(
                f"class function on {group.name} needs {self.conjugacy.num_classes} values, got {len(values)}"
            )
        modulus: int = group.exponent
        self.values: List[Cyclotomic] = [
            _to_modulus(v, modulus) if isinstance(v, Cyclotomic) else Cyclotomic.from_int(int(v), modulus)
            for v in values
        ]

    @classmethod
    def from_element_function(cls, group: FiniteMatrixGroup, func) -> "ClassFunction":
        """以代表元上的函數值建立類函數"""

        data: ConjugacyData = conjugacy_classes(group)
        return cls(group, [func(rep) for rep in data.representatives])

    @classmethod
    def constant(cls, group: FiniteMatrixGroup, value: int) -> "ClassFunction":
        data: ConjugacyData = conjugacy_classes(group)
        return cls(group, [Cyclotomic.from_int(value)] * data.num_classes)

    @property
    def degree(self) -> int:
        return self.values[0].to_int()

    def value_at(self, element: int) -> Cyclotomic:
        return self.values[int(self.conjugacy.class_of[element])]

    # === 運算 ===

    def _check(self, other: "ClassFunction") -> None:
        if other.group is not self.group:
            raise ValueError("class functions live on different groups")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self) -> "ClassFunction":
        return ClassFunction(self.group, [-a for a in self.values])

    def __mul__(self, other: Union["ClassFunction", int]) -> "ClassFunction":
        if isinstance(other, int):
            return ClassFunction(self.group, [a * other for a in self.values])
        self._check(other)
        return ClassFunction(self.group, [a * b for a, b in zip(self.values, other.values)])

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return other.group is self.group and self.values == other.values

    def __hash__(self) -> int:
        return hash(tuple(v.coeffs for v in self.values))

    def conj(self) -> "ClassFunction":
        return ClassFunction(self.group, [v.conj() for v in self.values])

    def adams(self, k: int) -> "ClassFunction":
        """(ψ^k χ)(g) = χ(g^k)"""

        if k < 0:
            raise ValueError(f"adams operation needs k >= 0, got {k}")
        return ClassFunction(
            self.group,
            [self.values[self.conjugacy.power_class(c, k)] for c in range(len(self.values))],
        )

    def inner(self, other: "ClassFunction") -> Fraction:
        """⟨χ, χ'⟩ = (1/|G|) Σ χ(g) · conj(χ'(g))"""

        self._check(other)
        total: Cyclotomic = Cyclotomic.from_int(0, self.group.exponent)
        for size, a, b in zip(self.conjugacy.sizes.tolist(), self.values, other.values):
            total = total + a * b.conj() * int(size)
        if not total.is_rational():
            raise CyclotomicError("inner product did not reduce to a rational number")
        return Fraction(total.coeffs[0], self.group.order)

    def encoding(self) -> tuple:
        return tuple(c for v in self.values for c in v.coeffs)

    def __repr__(self) -> str:
        return f"ClassFunction({self.group.name}: {', '.join(str(v) for v in self.values)})"


class CharacterTable:
    """
    特徵標表

    建構時排序並檢查正交性；labels 與 characters 一一對應。
    """

    def __init__(
        self,
        group: FiniteMatrixGroup,
        characters: Sequence[ClassFunction],
        labels: Optional[Sequence[str]] = None,
        source: str = "explicit",
        check: bool = True,
        aliases: Optional[Dict[str, str]] = None,
    ):
        self.group: FiniteMatrixGroup = group
        self.conjugacy: ConjugacyData = conjugacy_classes(group)
        self.source: str = source
        numbered: bool = labels is None
        labels = list(labels) if labels is not None else [""] * len(characters)
        if len(labels) != len(characters):
            raise CharacterTableError("labels and characters differ in length")

        pairs = sorted(
            zip(characters, labels),
            key=lambda cl: (cl[0].degree, tuple(-c for c in cl[0].encoding())),
        )
        self.characters: List[ClassFunction] = [c for c, _ in pairs]
        self.labels: List[str] = [
            f"chi{i}" if numbered else label for i, (_, label) in enumerate(pairs)
        ]
        self._label_index: Dict[str, int] = {label: i for i, label in enumerate(self.labels)}
        self.aliases: Dict[str, str] = dict(aliases or {})
        for alias, target in self.aliases.items():
            if target not in self._label_index:
                raise CharacterTableError(f"alias {alias!r} points to unknown label {target!r}")
            self._label_index[alias] = self._label_index[target]
        if check:
            self.check()
        logger.debug(f"{group.name}: {source} character table with {len(self.characters)} irreducibles")

    # === 基本資訊 ===

    def __len__(self) -> int:
        return len(self.characters)

    @property
    def degrees(self) -> List[int]:
        return [c.degree for c in self.characters]

    @property
    def modulus(self) -> int:
        return self.group.exponent

    def index(self, label: str) -> int:
        if label not in self._label_index:
            raise CharacterTableError(f"no irreducible labelled {label!r} in table of {self.group.name}")
        return self._label_index[label]

    def __getitem__(self, key: Union[int, str]) -> ClassFunction:
        return self.characters[self.index(key) if isinstance(key, str) else key]

    def kernel_classes(self, i: int) -> frozenset:
        chi: ClassFunction = self.characters[i]
        first: Cyclotomic = chi.values[0]
        return frozenset(c for c, v in enumerate(chi.values) if v == first)

    # === 驗證 ===

    def check(self) -> None:
        """
        - Description:
            列正交歸一、Σ deg² = |G|、個數等於類數
        """

        size: int = len(self.characters)
        if size != self.conjugacy.num_classes:
            raise CharacterTableError(
                f"{self.group.name}: {size} irreducibles but {self.conjugacy.num_classes} classes"
            )
        if sum(d * d for d in self.degrees) != self.group.order:
            raise CharacterTableError(f"{self.group.name}: sum of squared degrees is not |G|")
        for i in range(size):
            for j in range(i, size):
                value: Fraction = self.characters[i].inner(self.characters[j])
                if value != (1 if i == j else 0):
                    raise CharacterTableError(
                        f"{self.group.name}: <{self.labels[i]}, {self.labels[j]}> = {value}"
                    )

    # === R(G) 結構 ===

    @cached_property
    def conj_values(self) -> List[List[Cyclotomic]]:
        return [[v.conj() for v in chi.values] for chi in self.characters]

    def decompose_values(self, chi: ClassFunction) -> np.ndarray:
        """
        - Description:
            coords_i = ⟨χ, χ_i⟩；非整數時表示輸入不是虛擬特徵標
        - Return:
            - np.ndarray
                int64 座標
        """

        if chi.group is not self.group:
            raise ValueError("class function belongs to another group")
        sizes: List[int] = self.conjugacy.sizes.tolist()
        coords: List[int] = []
        for label, conj_row in zip(self.labels, self.conj_values):
            total: Cyclotomic = Cyclotomic.from_int(0, self.modulus)
            for size, a, b in zip(sizes, chi.values, conj_row):
                total = total + a * b * size
            if not total.is_rational() or total.coeffs[0] % self.group.order:
                raise NotAVirtualCharacterError(
                    f"multiplicity of {label} is not an integer: {total} / {self.group.order}"
                )
            coords.append(total.coeffs[0] // self.group.order)
        return np.array(coords, dtype=np.int64)

    @cached_property
    def structure_constants(self) -> np.ndarray:
        """N[i, j, k] = ⟨χ_i χ_j, χ_k⟩"""

        size: int = len(self.characters)
        consts: np.ndarray = np.zeros((size, size, size), dtype=np.int64)
        for i in range(size):
            for j in range(i, size):
                coords: np.ndarray = self.decompose_values(self.characters[i] * self.characters[j])
                consts[i, j] = coords
                consts[j, i] = coords
        return consts

    @cached_property
    def adams_matrices(self) -> Dict[int, np.ndarray]:
        """ψ^k 在不可約基底下的矩陣（k 對 exponent 取模）"""

        result: Dict[int, np.ndarray] = {}
        for k in range(self.modulus):
            result[k] = np.stack(
                [self.decompose_values(chi.adams(k)) for chi in self.characters]
            )
        return result

    def one(self) -> "VirtualRep":
        return VirtualRep.basis(self, 0)

    def rep(self, label: str) -> "VirtualRep":
        return VirtualRep.basis(self, self.index(label))

    # === 文字格式 ===

    def dump(self) -> List[str]:
        """每列 `label | degree | v_1, ..., v_r`"""

        return [
            f"{label} | {chi.degree} | {', '.join(str(v) for v in chi.values)}"
            for label, chi in zip(self.labels, self.characters)
        ]

    @classmethod
    def from_dump(cls, group: FiniteMatrixGroup, lines: Iterable[str]) -> "CharacterTable":
        """dump() 的反向"""

        characters: List[ClassFunction] = []
        labels: List[str] = []
        for line in lines:
            if not line.strip():
                continue
            label, _, values = [part.strip() for part in line.split("|")]
            characters.append(
                ClassFunction(group, [parse_cyclotomic(v, group.exponent) for v in values.split(",")])
            )
            labels.append(label)
        return cls(group, characters, labels, source="dump")


class VirtualRep:
    """R(G) 的元素：以不可約特徵標為基底的整數座標"""

    __slots__ = ("table", "coords")

    def __init__(self, table: CharacterTable, coords: Iterable[int]):
        self.table: CharacterTable = table
        self.coords: np.ndarray = np.asarray(list(coords), dtype=np.int64)
        if self.coords.shape != (len(table),):
            raise ValueError(f"coords must have length {len(table)}")

    @classmethod
    def zero(cls, table: CharacterTable) -> "VirtualRep":
        return cls(table, [0] * len(table))

    @classmethod
    def basis(cls, table: CharacterTable, index: int) -> "VirtualRep":
        coords: List[int] = [0] * len(table)
        coords[index] = 1
        return cls(table, coords)

    @classmethod
    def from_class_function(cls, table: CharacterTable, chi: ClassFunction) -> "VirtualRep":
        return cls(table, table.decompose_values(chi))

    @property
    def degree(self) -> int:
        return int(self.coords @ np.asarray(self.table.degrees, dtype=np.int64))

    def character(self) -> ClassFunction:
        result: ClassFunction = ClassFunction.constant(self.table.group, 0)
        for c, chi in zip(self.coords.tolist(), self.table.characters):
            if c:
                result = result + chi * c
        return result

    def is_genuine(self) -> bool:
        return bool(np.all(self.coords >= 0))

    def augmented(self) -> "VirtualRep":
        """x − deg(x)"""

        return self - self.degree

    def _coerce(self, other: Union["VirtualRep", int]) -> "VirtualRep":
        if isinstance(other, (int, np.integer)):
            return self.table.one() * int(other)
        if other.table is not self.table:
            raise ValueError("virtual representations of different tables")
        return other

    def __add__(self, other: Union["VirtualRep", int]) -> "VirtualRep":
        return VirtualRep(self.table, self.coords + self._coerce(other).coords)

    __radd__ = __add__

    def __sub__(self, other: Union["VirtualRep", int]) -> "VirtualRep":
        return VirtualRep(self.table, self.coords - self._coerce(other).coords)

    def __rsub__(self, other: int) -> "VirtualRep":
        return (-self) + other

    def __neg__(self) -> "VirtualRep":
        return VirtualRep(self.table, -self.coords)

    def __mul__(self, other: Union["VirtualRep", int]) -> "VirtualRep":
        if isinstance(other, (int, np.integer)):
            return VirtualRep(self.table, self.coords * int(other))
        other = self._coerce(other)
        product: np.ndarray = np.einsum(
            "i,j,ijk->k", self.coords, other.coords, self.table.structure_constants
        )
        return VirtualRep(self.table, product)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "VirtualRep":
        result: VirtualRep = self.table.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, np.integer)):
            other = self._coerce(int(other))
        if not isinstance(other, VirtualRep):
            return NotImplemented
        return other.table is self.table and bool(np.array_equal(self.coords, other.coords))

    def __hash__(self) -> int:
        return hash(tuple(self.coords.tolist()))

    def adams(self, k: int) -> "VirtualRep":
        if k < 0:
            raise ValueError(f"adams operation needs k >= 0, got {k}")
        matrix: np.ndarray = self.table.adams_matrices[k % self.table.modulus]
        return VirtualRep(self.table, self.coords @ matrix)

    def __repr__(self) -> str:
        return f"VirtualRep({format_virtual(self)})"


def format_virtual(x: VirtualRep) -> str:
    """以標籤寫出，例如 `3*psi + f010` """

    terms: List[str] = []
    for c, label in zip(x.coords.tolist(), x.table.labels):
        if c == 0:
            continue
        body: str = label if abs(c) == 1 else f"{abs(c)}*{label}"
        terms.append(("- " if c < 0 else "+ ") + body)
    if not terms:
        return "0"
    text: str = " ".join(terms)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]
