from .abelian import abelian_table, basis_sigma_label, sigma_label
from .class_function import CharacterTable, ClassFunction, VirtualRep, format_virtual
from .cyclotomic import Cyclotomic, cyc_add, cyc_mul, cyc_neg, parse_cyclotomic
from .dixon import class_matrices, nullspace_mod, table_generic
from .explicit import table_explicit, table_g, table_h, table_l
from .monomial import MonomialMatrix, extend_representation, heisenberg_model, psi_model
from .operations import (
    LinearCharacterGroup,
    adams,
    character_table,
    decompose,
    exterior_power,
    invert_series,
    lambda_series,
    linear_character_group,
    linear_characters,
    newton_exterior_power,
    restrict,
    restrict_class_function,
    tensor,
)
from .catalogs import (
    CharacterIdentity,
    G_PRINTED_DISCREPANCIES,
    g_identities,
    g_restrictions,
    h_identities,
    h_restrictions,
    l_identities,
    l_printed_discrepancies,
    l_restrictions,
    printed_discrepancies,
)
