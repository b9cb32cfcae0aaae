import pytest

from core.characters import CharacterTable, character_table
from core.chern import (
    Atom,
    ChernPolynomial,
    Lambda,
    Multiple,
    Sum,
    Tensor,
    lift_polynomial,
    relation_from_identity,
)
from core.gamma import GammaFiltration
from core.groups import FiniteMatrixGroup
from core.utils import IdentityMismatchError

"""表示式的 Chern 類與由表示恆等式導出的關係"""


@pytest.fixture(scope="module")
def h_table(h_group: FiniteMatrixGroup) -> CharacterTable:
    return character_table(h_group)


@pytest.fixture(scope="module")
def g_table(g_group: FiniteMatrixGroup) -> CharacterTable:
    return character_table(g_group)


def c(label: str, i: int) -> ChernPolynomial:
    return ChernPolynomial.variable(label, i)


# === 表示式 ===


def test_atom_series(h_table: CharacterTable):
    phi = Atom("phi")

    assert phi.degree(h_table) == 2
    assert phi.chern(h_table, 2) == c("phi", 2)
    assert phi.chern(h_table, 3) == 0  # 超過維數


def test_operators_build_nodes():
    x, y = Atom("x"), Atom("y")

    assert isinstance(x + y, Sum)
    assert isinstance(x * y, Tensor)
    assert x * 2 == Multiple(2, x)
    assert 3 * x == Multiple(3, x)


def test_exterior_square_of_three_lines(h_table: CharacterTable):
    lines = Sum((Atom("f(1,0)"), Atom("f(0,1)"), Atom("f(1,1)")))
    expr = Lambda(2, lines)
    s1 = c("f(1,0)", 1) + c("f(0,1)", 1) + c("f(1,1)", 1)
    s2 = c("f(1,0)", 1) * c("f(0,1)", 1) + c("f(1,0)", 1) * c("f(1,1)", 1) + c("f(0,1)", 1) * c("f(1,1)", 1)
    s3 = c("f(1,0)", 1) * c("f(0,1)", 1) * c("f(1,1)", 1)

    assert expr.degree(h_table) == 3
    assert expr.chern(h_table, 1) == 2 * s1
    assert expr.chern(h_table, 3) == s1 * s2 - s3  # 根為 α_i + α_j


def test_negative_multiple_is_not_effective(h_table: CharacterTable):
    expr = Tensor(Multiple(-1, Atom("phi")), Atom("f(1,0)"))

    assert not expr.is_effective()
    with pytest.raises(ValueError):
        expr.chern(h_table, 1)


def test_multiple_uses_inverse_series(h_table: CharacterTable):
    expr = Multiple(-1, Atom("f(1,0)"))

    assert expr.chern(h_table, 2) == c("f(1,0)", 1) ** 2


# === 由恆等式導出的關係 ===


def test_line_twist_of_phi(h_table: CharacterTable):
    phi, f = Atom("phi"), Atom("f(1,0)")
    relation = relation_from_identity(phi * f, phi, 2, h_table)

    assert relation == c("phi", 1) * c("f(1,0)", 1) + c("f(1,0)", 1) ** 2


def test_exterior_cube_of_psi(g_table: CharacterTable):
    psi, f = Atom("psi"), Atom("f(0,1,0)")
    relation = relation_from_identity(Lambda(3, psi), f * psi, 3, g_table)
    expected = ChernPolynomial.parse(
        "c1(psi)^3 + 2*c1(psi)*c2(psi) - 2*c3(psi)"
        " - 2*c1(f(0,1,0))*c2(psi) - 3*c1(f(0,1,0))^2*c1(psi) - 4*c1(f(0,1,0))^3"
    )

    assert relation == expected


def test_identity_mismatch(h_table: CharacterTable):
    with pytest.raises(IdentityMismatchError):
        relation_from_identity(Atom("f(1,0)"), Atom("f(0,1)"), 1, h_table)


def test_relation_vanishes_in_graded_piece(h_table: CharacterTable):
    relation = relation_from_identity(Atom("phi") * Atom("f(1,0)"), Atom("phi"), 2, h_table)
    lifted = lift_polynomial(h_table, relation)

    assert GammaFiltration(h_table).in_gamma(lifted, 3)  # 在 gr^2 中為零


def test_lift_of_constant(h_table: CharacterTable):
    assert lift_polynomial(h_table, ChernPolynomial.constant(3)) == h_table.one() * 3
