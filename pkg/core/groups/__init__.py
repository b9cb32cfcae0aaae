from .bounds import (
    DetectionBound,
    center_p_rank,
    detection_bound,
    min_faithful_degree,
    regularity_bounds,
)
from .catalog import GROUP_KEYS, build_group
from .conjugacy import (
    ConjugacyClass,
    ConjugacyData,
    class_count_g,
    class_count_h,
    class_count_l,
    conjugacy_classes,
    count_commuting_pairs,
)
from .isomorphism import IsomorphismResult, frattini_generators, group_isomorphic
from .matrix_group import (
    FiniteMatrixGroup,
    direct_product,
    elementary_matrix,
    encode_matrices,
    format_group_text,
    generated_group,
    matrix_from_entries,
    parse_group_text,
    unitriangular_group,
)
from .subgroups import (
    SUBGROUP_REGISTRY,
    build_l_group,
    center,
    centralizer,
    elementary_abelian_subgroups,
    elementary_center,
    l_subgroup,
    named_subgroup,
    parse_subgroup_key,
)
