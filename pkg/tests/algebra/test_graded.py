import random
from typing import List, Tuple

import pytest

from core.algebra import (
    AlgebraHom,
    F2GradedAlgebra,
    apply_automorphism,
    chow_ring_of_elementary_abelian,
    format_polynomial,
    hom_kernel,
    parse_polynomial,
    restrict_ideal_membership,
    subalgebra_relations,
)
from core.utils import Grading, RelationViolationError

"""F_2 分次代數：商基底、正規形、同態核與子代數關係"""


H_GENERATORS: List[Tuple[str, int]] = [("b1_0", 1), ("b1_1", 1), ("c2_2", 2)]

L_GENERATORS: List[Tuple[str, int]] = [
    ("b1_0", 1), ("b1_1", 1), ("b1_2", 1), ("b2_4", 2), ("c2_5", 2), ("c2_6", 2),
]
L_RELATIONS: List[str] = [
    "b1_0*b1_1",
    "b1_0*b1_2",
    "b1_0*b2_4",
    "b2_4*b1_1*b1_2 + b2_4^2 + c2_6*b1_1^2 + c2_5*b1_2^2",
]


@pytest.fixture
def h_cohomology() -> F2GradedAlgebra:
    return F2GradedAlgebra(H_GENERATORS, ["b1_0*b1_1"], name="H*(BH)")


@pytest.fixture
def h_chern_source() -> F2GradedAlgebra:
    return F2GradedAlgebra([("c1(f)", 1), ("c1(phi)", 1), ("c2(phi)", 2)], grading=Grading.CHOW, name="A(H)")


# === 文字格式 ===


def test_parse_reduces_coefficients():
    names = ["x", "y"]

    assert parse_polynomial("x^2*y + y + y", names) == frozenset({(2, 1)})
    assert parse_polynomial("3*x + 2*y", names) == frozenset({(1, 0)})
    assert parse_polynomial("0", names) == frozenset()
    assert parse_polynomial("1", names) == frozenset({(0, 0)})


def test_parse_names_with_parentheses():
    names = ["c1(f(1,0))", "c2(phi)"]
    poly = parse_polynomial("c1(f(1,0))^2*c2(phi) + c2(phi)^2", names)

    assert poly == frozenset({(2, 1), (0, 2)})
    assert parse_polynomial(format_polynomial(poly, names, [1, 2]), names) == poly


def test_parse_unknown_variable():
    with pytest.raises(ValueError):
        parse_polynomial("x + z", ["x", "y"])


def test_inhomogeneous_relation_rejected():
    with pytest.raises(ValueError):
        F2GradedAlgebra([("x", 1), ("y", 2)], ["x + y"])


# === 商基底與正規形 ===


def test_quotient_basis_of_xy():
    algebra = F2GradedAlgebra([("x", 1), ("y", 1)], ["x*y"])

    assert algebra.quotient_basis(2) == [(2, 0), (0, 2)]
    assert algebra.dimension(3) == 2


def test_quotient_basis_of_order_eight(h_cohomology: F2GradedAlgebra):
    basis = {h_cohomology.format(frozenset({m})) for m in h_cohomology.quotient_basis(2)}

    assert basis == {"b1_0^2", "b1_1^2", "c2_2"}


def test_degree_one_of_order_thirty_two():
    algebra = F2GradedAlgebra(L_GENERATORS, L_RELATIONS)

    assert algebra.dimension(1) == 3
    assert algebra.dimension(2) == 6 + 3 - 2  # 六個 b·b、三個二次生成元，扣掉兩條關係


def test_normal_form_idempotent_and_kills_relations():
    algebra = F2GradedAlgebra(L_GENERATORS, L_RELATIONS)
    rng = random.Random(7)
    for d in range(1, 7):
        mons = algebra.monomials(d)
        for _ in range(10):
            poly = frozenset(m for m in mons if rng.random() < 0.4)
            nf = algebra.normal_form(poly)
            assert algebra.normal_form(nf) == nf
    for rel in algebra.relations:
        assert algebra.is_zero(rel)


def test_dimension_independent_of_relation_order():
    forward = F2GradedAlgebra(L_GENERATORS, L_RELATIONS)
    backward = F2GradedAlgebra(L_GENERATORS, list(reversed(L_RELATIONS)))

    for d in range(8):
        assert forward.dimension(d) == backward.dimension(d)


def test_commutative():
    algebra = F2GradedAlgebra(L_GENERATORS, L_RELATIONS)
    for a in algebra.names:
        for b in algebra.names:
            assert algebra.multiply(algebra.generator(a), algebra.generator(b)) == algebra.multiply(
                algebra.generator(b), algebra.generator(a)
            )


def test_seal_matches_lazy():
    sealed = F2GradedAlgebra(L_GENERATORS, L_RELATIONS)
    lazy = F2GradedAlgebra(L_GENERATORS, L_RELATIONS)
    sealed.seal(6, num_threads=3)

    assert [sealed.dimension(d) for d in range(7)] == [lazy.dimension(d) for d in range(7)]


# === 同態 ===


def test_relation_violation(h_cohomology: F2GradedAlgebra):
    slot = chow_ring_of_elementary_abelian(2, Grading.COHOMOLOGY)

    with pytest.raises(RelationViolationError) as info:
        AlgebraHom(h_cohomology, slot, {"b1_0": "c1_0", "b1_1": "c1_0", "c2_2": "0"}, name="res")

    assert info.value.map_name == "res"
    assert info.value.relation in [h_cohomology.format(rel) for rel in h_cohomology.relations]
    assert "does not map to 0" in str(info.value)


def test_image_degree_checked(h_cohomology: F2GradedAlgebra):
    slot = chow_ring_of_elementary_abelian(2, Grading.COHOMOLOGY)

    with pytest.raises(ValueError):
        AlgebraHom(h_cohomology, slot, {"b1_0": "0", "b1_1": "c1_0", "c2_2": "c1_0"})


def test_chow_source_doubles_degree(h_chern_source: F2GradedAlgebra, h_cohomology: F2GradedAlgebra):
    hom = AlgebraHom(h_chern_source, h_cohomology, {"c1(f)": "b1_0^2", "c1(phi)": "b1_0^2 + b1_1^2", "c2(phi)": "c2_2^2"})

    assert hom.scale == 2
    assert hom.apply(h_chern_source.parse("c1(f)*c1(phi)")) == h_cohomology.parse("b1_0^4")


def test_zero_map_kernel_is_everything():
    source = chow_ring_of_elementary_abelian(2)
    target = chow_ring_of_elementary_abelian(1, Grading.COHOMOLOGY)
    hom = AlgebraHom(source, target, {"x1": "0", "x2": "0"})

    assert len(hom_kernel(hom, 3)) == len(source.monomials(3))


def test_kernel_soundness(h_chern_source: F2GradedAlgebra, h_cohomology: F2GradedAlgebra):
    hom = AlgebraHom(h_chern_source, h_cohomology, {"c1(f)": "b1_0^2", "c1(phi)": "b1_0^2 + b1_1^2", "c2(phi)": "c2_2^2"})

    for d in range(1, 5):
        for element in hom_kernel(hom, d):
            assert restrict_ideal_membership(hom, element)


def test_subalgebra_relations_of_order_eight(h_chern_source: F2GradedAlgebra, h_cohomology: F2GradedAlgebra):
    hom = AlgebraHom(h_chern_source, h_cohomology, {"c1(f)": "b1_0^2", "c1(phi)": "b1_0^2 + b1_1^2", "c2(phi)": "c2_2^2"})
    found = subalgebra_relations(hom, 6, num_threads=2)

    assert found[2] == [h_chern_source.parse("c1(f)^2 + c1(f)*c1(phi)")]
    assert all(not found[d] for d in (1, 3, 4, 5, 6))  # 只有一條關係


def test_subalgebra_relations_completeness():
    source = chow_ring_of_elementary_abelian(2)
    target = chow_ring_of_elementary_abelian(2, Grading.COHOMOLOGY)
    hom = AlgebraHom(source, target, {"x1": "c1_0^2", "x2": "c1_0^2"})
    found = subalgebra_relations(hom, 4, num_threads=1)

    assert found[1] == [source.parse("x1 + x2")]
    for d in range(2, 5):
        assert found[d] == []
        assert len(hom_kernel(hom, d)) == len(source.monomials(d)) - 1  # 像的維數為 1


def test_subalgebra_needs_free_source(h_cohomology: F2GradedAlgebra):
    hom = AlgebraHom(h_cohomology, h_cohomology, {g: g for g in h_cohomology.names})

    with pytest.raises(ValueError):
        subalgebra_relations(hom, 2)


def test_elementary_abelian_rings():
    assert chow_ring_of_elementary_abelian(0).dimension(0) == 1
    assert chow_ring_of_elementary_abelian(0).dimension(3) == 0
    assert chow_ring_of_elementary_abelian(2).names == ["x1", "x2"]
    assert chow_ring_of_elementary_abelian(4).dimension(2) == 10
    assert chow_ring_of_elementary_abelian(3, Grading.COHOMOLOGY).names == ["c1_0", "c1_1", "c1_2"]


# === 自同構 ===


def test_swap_automorphism(h_cohomology: F2GradedAlgebra):
    swap = apply_automorphism(h_cohomology, {"b1_0": "b1_1", "b1_1": "b1_0"})

    assert swap.apply(h_cohomology.parse("b1_0^2 + c2_2")) == h_cohomology.parse("b1_1^2 + c2_2")


def test_order_thirty_two_swap():
    algebra = F2GradedAlgebra(L_GENERATORS, L_RELATIONS)
    swap = apply_automorphism(algebra, {"b1_1": "b1_2", "b1_2": "b1_1", "c2_5": "c2_6", "c2_6": "c2_5"})

    assert swap.apply(algebra.generator("c2_5")) == algebra.generator("c2_6")


def test_non_automorphism_rejected(h_cohomology: F2GradedAlgebra):
    with pytest.raises(RelationViolationError):
        apply_automorphism(h_cohomology, {"b1_1": "b1_0"})
