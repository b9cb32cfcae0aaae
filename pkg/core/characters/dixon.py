import math
from typing import List, Optional

import numpy as np
from loguru import logger
from sympy import nextprime, primitive_root

from core.characters.class_function import CharacterTable, ClassFunction
from core.characters.cyclotomic import Cyclotomic
from core.groups import ConjugacyData, FiniteMatrixGroup, conjugacy_classes
from core.utils import MAX_GENERIC_TABLE_ORDER, CharacterTableError

"""
Dixon–Schneider：由類和矩陣在 F_q 上同時對角化得到中心特徵標，再以離散 Fourier 反演還原精確值

q 取 ≡ 1 (mod exp(G)) 且 > 2√|G| 的質數；若同時特徵空間無法分裂成一維，換下一個質數重試。
"""


MAX_PRIME_ATTEMPTS: int = 20


def class_matrices(group: FiniteMatrixGroup, data: ConjugacyData) -> np.ndarray:
    """
    - Description:
        c[j, r, s] = #{(x, y) : x ∈ C_j, y ∈ C_r, xy = z_s}，z_s 為第 s 類的代表元
    - Return:
        - np.ndarray
            (h, h, h) 的 int64 陣列
    """

    h: int = data.num_classes
    counts: np.ndarray = np.zeros((h, h, h), dtype=np.int64)
    everything: np.ndarray = np.arange(group.order)
    inverses: np.ndarray = group.inverses[everything]
    for s, z in enumerate(data.representatives):
        partners: np.ndarray = group.table[inverses, z]
        np.add.at(counts, (data.class_of[everything], data.class_of[partners], s), 1)
    return counts


def nullspace_mod(matrix: np.ndarray, q: int) -> np.ndarray:
    """F_q 上的零空間，回傳 (cols, k) 的基底（以行向量排列）"""

    a: np.ndarray = np.array(matrix, dtype=np.int64) % q
    rows, cols = a.shape
    pivots: List[int] = []
    r: int = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero: np.ndarray = np.nonzero(a[r:, c])[0]
        if len(nonzero) == 0:
            continue
        pivot: int = r + int(nonzero[0])
        a[[r, pivot]] = a[[pivot, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, q)) % q
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % q
        pivots.append(c)
        r += 1

    free: List[int] = [c for c in range(cols) if c not in pivots]
    basis: np.ndarray = np.zeros((cols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = (-a[i, f]) % q
    return basis


def choose_prime(order: int, exponent: int, start: Optional[int] = None) -> int:
    """大於 max(2√|G|, start) 且 ≡ 1 (mod exponent) 的最小質數"""

    q: int = max(math.isqrt(4 * order) + 1, 2) if start is None else start
    q = int(nextprime(q - 1))
    while (q - 1) % exponent:
        q = int(nextprime(q))
    return q


def _split_eigenspaces(counts: np.ndarray, q: int) -> Optional[List[np.ndarray]]:
    h: int = counts.shape[0]
    spaces: List[np.ndarray] = [np.eye(h, dtype=np.int64)]
    for j in range(1, h):
        if all(space.shape[1] == 1 for space in spaces):
            break
        action: np.ndarray = counts[j] % q
        refined: List[np.ndarray] = []
        for space in spaces:
            if space.shape[1] == 1:
                refined.append(space)
                continue
            image: np.ndarray = (action @ space) % q
            pieces: List[np.ndarray] = []
            for eigenvalue in range(q):
                kernel: np.ndarray = nullspace_mod((image - eigenvalue * space) % q, q)
                if kernel.shape[1]:
                    pieces.append((space @ kernel) % q)
            if sum(piece.shape[1] for piece in pieces) != space.shape[1]:
                return None
            refined.extend(pieces)
        spaces = refined
    if any(space.shape[1] != 1 for space in spaces):
        return None
    return [space[:, 0] for space in spaces]


def _degree_mod(omega: np.ndarray, data: ConjugacyData, order: int, q: int) -> Optional[int]:
    # |G| = χ(1)² Σ_r ω_r ω_{r*} / |C_r|
    total: int = 0
    for r, size in enumerate(data.sizes.tolist()):
        total += int(omega[r]) * int(omega[int(data.inverse_class[r])]) * pow(int(size), -1, q)
    total %= q
    if total == 0:
        return None
    square: int = order * pow(total, -1, q) % q
    for d in range(1, q // 2 + 1):
        if d * d % q == square:
            return d
    return None


def _lift(
    values: List[int], data: ConjugacyData, exponent: int, q: int, z: int, degree: int
) -> Optional[List[Cyclotomic]]:
    # χ(g) = Σ_k m_k ζ^k，m_k = e^{-1} Σ_l χ(g^l) z^{-kl}
    inv_e: int = pow(exponent, -1, q)
    inv_z: int = pow(z, -1, q)
    lifted: List[Cyclotomic] = []
    for c in range(data.num_classes):
        powers: List[int] = [values[data.power_class(c, l)] for l in range(exponent)]
        multiplicities: List[int] = []
        for k in range(exponent):
            step: int = pow(inv_z, k, q)
            acc: int = 0
            factor: int = 1
            for value in powers:
                acc += value * factor
                factor = factor * step % q
            multiplicities.append(acc * inv_e % q)
        if sum(multiplicities) != degree:
            return None
        lifted.append(Cyclotomic.from_power_vector(exponent, multiplicities))
    return lifted


def _attempt(group: FiniteMatrixGroup, data: ConjugacyData, counts: np.ndarray, q: int) -> Optional[List[ClassFunction]]:
    exponent: int = group.exponent
    z: int = pow(int(primitive_root(q)), (q - 1) // exponent, q)
    vectors: Optional[List[np.ndarray]] = _split_eigenspaces(counts, q)
    if vectors is None:
        return None

    characters: List[ClassFunction] = []
    sizes: List[int] = data.sizes.tolist()
    for vector in vectors:
        if vector[0] % q == 0:
            return None
        omega: np.ndarray = vector * pow(int(vector[0]), -1, q) % q
        degree: Optional[int] = _degree_mod(omega, data, group.order, q)
        if degree is None:
            return None
        values: List[int] = [
            degree * int(omega[r]) * pow(size, -1, q) % q for r, size in enumerate(sizes)
        ]
        lifted: Optional[List[Cyclotomic]] = _lift(values, data, exponent, q, z, degree)
        if lifted is None:
            return None
        characters.append(ClassFunction(group, lifted))
    return characters


def table_generic(group: FiniteMatrixGroup) -> CharacterTable:
    """
    - Description:
        任意 |G| ≤ MAX_GENERIC_TABLE_ORDER 的群的特徵標表
    - Parameters:
        - group: FiniteMatrixGroup
    - Return:
        - CharacterTable
            標籤為 chi0, chi1, ...（排序後）
    """

    if group.order > MAX_GENERIC_TABLE_ORDER:
        raise CharacterTableError(
            f"{group.name} has {group.order} elements, generic tables stop at {MAX_GENERIC_TABLE_ORDER}"
        )
    data: ConjugacyData = conjugacy_classes(group)
    counts: np.ndarray = class_matrices(group, data)

    q: int = choose_prime(group.order, group.exponent)
    for _ in range(MAX_PRIME_ATTEMPTS):
        characters: Optional[List[ClassFunction]] = _attempt(group, data, counts, q)
        if characters is not None:
            logger.info(f"{group.name}: Dixon table over F_{q} ({len(characters)} irreducibles)")
            return CharacterTable(group, characters, source="dixon")
        logger.debug(f"{group.name}: prime {q} did not split the class algebra, trying the next one")
        q = choose_prime(group.order, group.exponent, start=q + 1)
    raise CharacterTableError(f"{group.name}: no suitable prime found after {MAX_PRIME_ATTEMPTS} attempts")
