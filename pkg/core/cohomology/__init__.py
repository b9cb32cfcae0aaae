from .cycle_map import (
    BUILTIN_FOR_FAMILY,
    CHERN_GENERATORS,
    DEFAULT_CHOICES,
    ChernGenerator,
    CycleClassCandidate,
    CycleMapSolver,
    SlotPairing,
    chern_source_algebra,
    cycle_class_hom,
    general_linear_rows,
    kernel_mod2,
    permutation_rows,
    solve_cycle_map,
)
from .loader import (
    BUILTIN_PREFIX,
    CohomData,
    CohomSlot,
    builtin_cohom_keys,
    load_cohom,
    parse_cohom_text,
)
from .restriction import RestrictionCatalog, chern_restriction, line_decomposition
