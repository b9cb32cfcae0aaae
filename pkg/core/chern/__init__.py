from .polynomial import ChernPolynomial, atom_series, series_inverse, series_mul, series_pow
from .symmetric import (
    chern_of_exterior,
    chern_of_multiple,
    chern_of_tensor,
    elementary_of_values,
    symmetric_reduce,
    whitney_total,
)
from .expressions import (
    Atom,
    ChernExpression,
    Lambda,
    Multiple,
    Sum,
    Tensor,
    lift_polynomial,
    relation_from_identity,
)
