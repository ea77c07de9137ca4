"""Motzkin paths, multisegments and the bijection between them.

The most used names are re-exported here; see the submodules for the rest.
"""

from .correspondence import (
    ExcessiveCatalogEntry,
    IsomorphismReport,
    brute_force_excessive,
    brute_force_M,
    brute_force_universe,
    enumerate_excessive,
    fr,
    fr_inverse,
    fr_rank_tuple,
    phi,
    verify_isomorphism,
)
from .errors import (
    DomainError,
    InternalDefect,
    InvalidPathError,
    InvalidRankTupleError,
    NotASuspensionError,
    NotExcessiveError,
    NotInMError,
    NotWeightValidError,
    ParseError,
)
from .monoid import (
    E1,
    Factorization,
    concat,
    concat_all,
    desuspend,
    factorize,
    has_suspension_markers,
    is_primitive,
    left_restrict,
    random_in_M,
    right_restrict,
    suspend,
)
from .motzkin import (
    MotzkinPath,
    concat_paths,
    desuspend_path,
    enumerate_paths,
    factorize_path,
    motzkin_number,
    parse_path,
    random_path,
    serialize_path,
    suspend_path,
)
from .multisegments import (
    ColumnProfile,
    LinkedTriple,
    Multisegment,
    RankTuple,
    Segment,
    column_profiles,
    find_linked_triples,
    from_rank_tuple,
    is_excessive,
    is_in_M,
    is_in_R,
    linked,
    parse_multisegment,
    quasi_linked,
    rank_tuple,
    row_decomposition,
    serialize_multisegment,
    weight,
)

__version__ = "0.1.0"
