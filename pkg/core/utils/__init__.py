from .constant import (
    MAX_CHERN_ROOTS,
    MAX_GENERIC_TABLE_ORDER,
    MAX_ISOMORPHISM_ORDER,
    GammaStrategy,
    Grading,
    GroupFamily,
    Verdict,
)
from .decorators import log_thread
from .exceptions import (
    ChernBudgetError,
    CharacterTableError,
    CohomDataError,
    CycleMapUnsolvableError,
    CyclotomicError,
    EnumerationBudgetError,
    FiltrationInclusionError,
    FusionError,
    GammaBudgetError,
    IdentityMismatchError,
    IsomorphismBudgetError,
    LambdaRingError,
    NotAVirtualCharacterError,
    PipelineCheckError,
    RelationViolationError,
    UnknownSubgroupError,
    WorkbenchError,
)
from .log_manager import LogManager
