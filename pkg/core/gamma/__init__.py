from .filtration import (
    ChernMonomial,
    GammaAtom,
    GammaFiltration,
    GammaLattice,
    GradedPiece,
    Membership,
    RelationBasis,
    big_C,
    chern_class,
    chern_lift,
    chern_monomials,
    gamma_op,
)
from .lattice import IntegerLattice, QuotientGroup, integer_kernel, smith_form, xgcd
