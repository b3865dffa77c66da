"""Exact combinatorics of skew partitions.

Rank in its four guises, Comet codes and border strip removal, snakes and
interval sets, minimal border strip decompositions and tableaux, skew
characters, the lowest-degree part of the skew Schur function, and the
principal specialization polynomial, all in exact arithmetic.
"""

from .characters import (
    DivisibilityResult,
    ParityAudit,
    PowerSumPolynomial,
    SignedMatchingMatrix,
    divisibility_check,
    height_parity_audit,
    mn_character,
    pfaffian,
    power_sum_expansion,
    s_hat,
    shat_pfaffian_matrix,
    y_pfaffian_matrix,
    y_value,
)
from .codes import (
    Code,
    StripRemoval,
    code_of,
    greedy_tableau,
    rank_from_code,
    remove_strip,
    shape_of,
    strip_cells,
)
from .decomp import (
    BorderStrip,
    CountReport,
    Decomposition,
    LatinSquare,
    Tableau,
    all_decompositions,
    border_strip_from_cells,
    counting_report,
    decomposition_from_links,
    interval_set_of,
    latin_square,
    minimal_decompositions,
    tableaux_of_interval_set,
)
from .orders import (
    IntervalOrder,
    acyclic_orientation_count,
    chromatic_polynomial,
    dropless_count,
)
from .polynomials import RationalPolynomial
from .shapes import (
    EMPTY,
    InvariantError,
    Partition,
    ShapeError,
    SkewShape,
    Square,
    connected_components,
    diagonal_rank,
    enumerate_shapes,
    normalize,
    parse_shape,
    partitions_of,
    rotate180,
    shape_from_cells,
)
from .snakes import (
    IntervalSet,
    Snake,
    SnakeKind,
    SnakeSequence,
    canonical_pairing,
    crossings,
    interval_sets,
    is_count,
    snake_sequence,
    snakes_of,
    z_statistic,
)
from .specialization import (
    JTMatrix,
    cauchy_y,
    hook_content_specialization,
    jrank,
    jt_matrix,
    principal_specialization,
    rank_profile,
    ssyt_count,
    thm1b_condition,
    zrank,
)

__version__ = "0.1.0"
