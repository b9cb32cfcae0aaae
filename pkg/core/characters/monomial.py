from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from core.characters.cyclotomic import Cyclotomic
from core.groups import FiniteMatrixGroup, elementary_matrix
from core.utils import CharacterTableError

"""
單項矩陣模型（置換 + 相位）

M[i, perm[i]] = ζ_N^{phase[i]}。φ_k（U(3,p)）與 ψ_k（U(4,p)）都是這種形式，
外冪的跡由循環分解直接得出：每個長度 ℓ、總相位 θ 的循環貢獻因子 1 − (−t)^ℓ ζ^θ。
"""


@dataclass(frozen=True)
class MonomialMatrix:
    perm: Tuple[int, ...]
    phase: Tuple[int, ...]
    modulus: int

    @classmethod
    def identity(cls, size: int, modulus: int) -> "MonomialMatrix":
        return cls(tuple(range(size)), (0,) * size, modulus)

    @property
    def size(self) -> int:
        return len(self.perm)

    def __matmul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        # (AB)[i, π_B(π_A(i))] = ζ^{a_i + b_{π_A(i)}}
        perm = tuple(other.perm[self.perm[i]] for i in range(self.size))
        phase = tuple(
            (self.phase[i] + other.phase[self.perm[i]]) % self.modulus for i in range(self.size)
        )
        return MonomialMatrix(perm, phase, self.modulus)

    def trace(self) -> Cyclotomic:
        return Cyclotomic.from_exponents(
            self.modulus, [self.phase[i] for i in range(self.size) if self.perm[i] == i]
        )

    def cycles(self) -> List[Tuple[int, int]]:
        """(循環長度, 相位總和) 的列表"""

        seen: List[bool] = [False] * self.size
        result: List[Tuple[int, int]] = []
        for start in range(self.size):
            if seen[start]:
                continue
            length, total, i = 0, 0, start
            while not seen[i]:
                seen[i] = True
                total += self.phase[i]
                length += 1
                i = self.perm[i]
            result.append((length, total % self.modulus))
        return result

    def exterior_traces(self) -> List[Cyclotomic]:
        """
        - Description:
            tr Λ^k M，k = 0..size，由 det(I + tM) = Π (1 − (−t)^ℓ ζ^θ) 展開
        - Return:
            - List[Cyclotomic]
        """

        poly: List[Cyclotomic] = [Cyclotomic.from_int(1, self.modulus)]
        for length, total in self.cycles():
            factor: Cyclotomic = Cyclotomic.zeta(self.modulus, total) * (-((-1) ** length))
            nxt: List[Cyclotomic] = poly + [Cyclotomic.from_int(0, self.modulus)] * length
            for i, c in enumerate(poly):
                nxt[i + length] = nxt[i + length] + c * factor
            poly = nxt
        return poly

    def to_dense(self) -> np.ndarray:
        """複數矩陣，只供除錯"""

        mat: np.ndarray = np.zeros((self.size, self.size), dtype=complex)
        for i in range(self.size):
            mat[i, self.perm[i]] = np.exp(2j * np.pi * self.phase[i] / self.modulus)
        return mat


def shift_matrix(size: int, modulus: int) -> MonomialMatrix:
    """σ：第 0 列在最後一行，其餘列向下平移（[[0, 1], [I, 0]]）"""

    return MonomialMatrix(tuple((i - 1) % size for i in range(size)), (0,) * size, modulus)


def diagonal_matrix(phases: Sequence[int], modulus: int) -> MonomialMatrix:
    return MonomialMatrix(tuple(range(len(phases))), tuple(p % modulus for p in phases), modulus)


def block_diagonal(blocks: Sequence[MonomialMatrix]) -> MonomialMatrix:
    perm: List[int] = []
    phase: List[int] = []
    offset: int = 0
    for block in blocks:
        perm.extend(offset + j for j in block.perm)
        phase.extend(block.phase)
        offset += block.size
    return MonomialMatrix(tuple(perm), tuple(phase), blocks[0].modulus)


def extend_representation(
    group: FiniteMatrixGroup,
    images: Dict[int, MonomialMatrix],
) -> Dict[int, MonomialMatrix]:
    """
    - Description:
        由生成元的像沿乘法表延伸到整個群，並檢查每一條 x·g 的邊都一致
    - Parameters:
        - group: FiniteMatrixGroup
            生成元必須能生成整個群
        - images: Dict[int, MonomialMatrix]
            生成元 index → 單項矩陣
    - Return:
        - Dict[int, MonomialMatrix]
            每個元素的像
    """

    size: int = next(iter(images.values())).size
    modulus: int = next(iter(images.values())).modulus
    mapping: Dict[int, MonomialMatrix] = {group.identity: MonomialMatrix.identity(size, modulus)}
    frontier: List[int] = [group.identity]
    while frontier:
        nxt: List[int] = []
        for x in frontier:
            for g, image in images.items():
                y: int = group.multiply(x, g)
                value: MonomialMatrix = mapping[x] @ image
                known = mapping.get(y)
                if known is None:
                    mapping[y] = value
                    nxt.append(y)
                elif known != value:
                    raise CharacterTableError(
                        f"generator images do not define a homomorphism on {group.name}"
                    )
        frontier = nxt
    if len(mapping) != group.order:
        raise CharacterTableError(f"generators do not generate {group.name}")
    return mapping


def heisenberg_model(group: FiniteMatrixGroup, k: int) -> Dict[int, MonomialMatrix]:
    """
    - Description:
        φ_k：E12 ↦ σ_p，E23 ↦ diag(ζ_p^{ik})（U(3,p)）
    """

    p: int = group.p
    images: Dict[int, MonomialMatrix] = {
        group.index_of(elementary_matrix(3, 1, 2)): shift_matrix(p, p),
        group.index_of(elementary_matrix(3, 2, 3)): diagonal_matrix([i * k for i in range(p)], p),
    }
    return extend_representation(group, images)


def psi_model(group: FiniteMatrixGroup, k: int) -> Dict[int, MonomialMatrix]:
    """
    - Description:
        ψ_k：E12 ↦ diag(σ_p, ..., σ_p)，E23 ↦ diag(ζ_p^{ijk})（(i,j) 字典序），
        E34 ↦ [[0, I_p], [I_{p²−p}, 0]]（U(4,p)）
    """

    p: int = group.p
    size: int = p * p
    e12: MonomialMatrix = block_diagonal([shift_matrix(p, p)] * p)
    e23: MonomialMatrix = diagonal_matrix([i * j * k for i in range(p) for j in range(p)], p)
    # 第 r 列的非零元素在第 (r − p) mod p² 行
    e34: MonomialMatrix = MonomialMatrix(
        tuple((r - p) % size for r in range(size)), (0,) * size, p
    )
    images: Dict[int, MonomialMatrix] = {
        group.index_of(elementary_matrix(4, 1, 2)): e12,
        group.index_of(elementary_matrix(4, 2, 3)): e23,
        group.index_of(elementary_matrix(4, 3, 4)): e34,
    }
    return extend_representation(group, images)
