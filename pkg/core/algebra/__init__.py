from .f2 import (
    ZERO,
    F2Echelon,
    F2Poly,
    Monomial,
    canonical_modulo,
    frobenius,
    monomials_of_degree,
    nullspace,
    poly_add,
    poly_mul,
    poly_sum,
    row_space_equal,
    solve,
    substitute,
)
from .graded import (
    AlgebraHom,
    F2GradedAlgebra,
    apply_automorphism,
    chow_ring_of_elementary_abelian,
    format_polynomial,
    hom_kernel,
    ideal_span,
    parse_polynomial,
    restrict_ideal_membership,
    subalgebra_relations,
)
