import pytest

from core.algebra import ZERO, F2Poly, frobenius, parse_polynomial, poly_mul
from core.characters import CharacterTable, character_table
from core.cohomology import RestrictionCatalog, chern_restriction, line_decomposition
from core.gamma import ChernMonomial
from core.groups import (
    FiniteMatrixGroup,
    elementary_abelian_subgroups,
    elementary_center,
    named_subgroup,
    unitriangular_group,
)

"""Chern 類限制到基本交換子群：分裂成一次特徵標後取基本對稱多項式"""


@pytest.fixture(scope="module")
def h_table(h_group: FiniteMatrixGroup) -> CharacterTable:
    return character_table(h_group)


@pytest.fixture(scope="module")
def g_table(g_group: FiniteMatrixGroup) -> CharacterTable:
    return character_table(g_group)


def x(text: str, rank: int) -> F2Poly:
    return parse_polynomial(text, [f"x{i + 1}" for i in range(rank)])


# === U(4,2) ===


def test_psi_on_c2_3g(g_group: FiniteMatrixGroup, g_table: CharacterTable):
    V = named_subgroup(g_group, "C2_3G")  # 基底 E12, E34, E14

    assert sorted(line_decomposition(g_table, "psi", V)) == [((0, 0, 1), 1), ((0, 1, 1), 1), ((1, 0, 1), 1), ((1, 1, 1), 1)]
    assert chern_restriction(g_table, "psi", V, 1) == ZERO  # 四條線之和
    assert chern_restriction(g_table, "psi", V, 2) == x("x1^2 + x1*x2 + x2^2", 3)
    assert chern_restriction(g_table, "psi", V, 3) == x("x1^2*x2 + x1*x2^2", 3)


def test_phi0_on_c2_4g(g_group: FiniteMatrixGroup, g_table: CharacterTable):
    V = named_subgroup(g_group, "C2_4G")

    assert chern_restriction(g_table, "phi0", V, 1) == x("x1", 4)


def test_trivial_and_out_of_range(g_group: FiniteMatrixGroup, g_table: CharacterTable):
    V = named_subgroup(g_group, "C2_3G")

    assert chern_restriction(g_table, "f(0,0,0)", V, 1) == ZERO
    assert chern_restriction(g_table, "psi", V, 0) == x("1", 3)
    assert chern_restriction(g_table, "psi", V, 5) == ZERO  # 超過維數
    with pytest.raises(ValueError):
        chern_restriction(g_table, "psi", V, -1)


# === U(3,2) ===


def test_phi_on_center(h_group: FiniteMatrixGroup, h_table: CharacterTable):
    Z = elementary_center(h_group)

    assert line_decomposition(h_table, "phi", Z) == [((1,), 2)]
    assert chern_restriction(h_table, "phi", Z, 1) == ZERO
    assert chern_restriction(h_table, "phi", Z, 2) == x("x1^2", 1)


def test_catalog_monomials(h_group: FiniteMatrixGroup, h_table: CharacterTable):
    V = elementary_abelian_subgroups(h_group, maximal_only=True)[0]
    catalog = RestrictionCatalog(h_table, V)
    c1 = catalog.chern("phi", 1)
    c2 = catalog.chern("phi", 2)

    assert catalog.rank == 2
    assert c1 and c2  # φ 在 C_2^2 上分成兩條相異的線
    assert catalog.monomial(ChernMonomial.parse("c1(phi)*c2(phi)")) == poly_mul(c1, c2)
    assert catalog.monomial(ChernMonomial.parse("c2(phi)^2")) == frobenius(c2)
    assert catalog.monomials([ChernMonomial()]) == [x("1", 2)]


def test_determinant_matches_first_chern_class(h_group: FiniteMatrixGroup, h_table: CharacterTable):
    # c_1(φ) = c_1(det φ) = c_1(f(1,1))
    for V in elementary_abelian_subgroups(h_group):
        assert chern_restriction(h_table, "phi", V, 1) == chern_restriction(h_table, "f(1,1)", V, 1)


def test_odd_prime_is_rejected():
    group = unitriangular_group(3, 3)
    table = character_table(group)

    with pytest.raises(ValueError, match="mod 2"):
        chern_restriction(table, "phi(1)", elementary_center(group), 1)
