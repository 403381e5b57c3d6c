"""Penny graphs: exact validation, structure analysis, minimality search."""

from .errors import DomainError, InputError
from .exactnum import ONE, SQRT2, SQRT3, SQRT6, ZERO, QuadNum
from .geom import (
    EXACT,
    NUMERIC,
    LemmaGeomResult,
    Point,
    PointSet,
    Quadrilateral,
    convex_hull,
    interior_angle,
    lemma_geom_check,
    squared_distance,
)
from .pennygraph import (
    PennyGraph,
    Puzzle1Witness,
    build_penny_graph,
    closest_neighbor_counts,
    is_k_regular,
    neighbor_counts,
    puzzle1_witness,
    reduce_to_min_subset,
)
from .structure import (
    BridgeClassification,
    IslandDecomposition,
    RotationSystem,
    classify_bridges,
    find_bridges,
    island_decomposition,
    outer_face,
    rotation_system,
)
from .ledger import (
    AngleLedger,
    Eq1Result,
    LeafIslandReport,
    MinimalityReport,
    angle_contribution,
    build_angle_ledger,
    check_eq1,
    classify_outer_edges,
    leaf_island_check,
    parallelogram_contradiction_check,
    theorem1_ledger,
)
from .constructions import (
    CONSTRUCTIONS,
    NamedConstruction,
    construct_16,
    construct_24,
    construct_leaf_island_13,
    construct_matchstick_8,
    construct_three_rhombus,
)
from .search import (
    AbstractGraph,
    EmbedResult,
    SearchConfig,
    SearchReport,
    embed_attempt,
    enumerate_cubic,
    minimality_report,
    planar_filter,
)

__all__ = [
    "DomainError",
    "InputError",
    "QuadNum",
    "ZERO",
    "ONE",
    "SQRT2",
    "SQRT3",
    "SQRT6",
    "EXACT",
    "NUMERIC",
    "Point",
    "PointSet",
    "Quadrilateral",
    "LemmaGeomResult",
    "convex_hull",
    "interior_angle",
    "lemma_geom_check",
    "squared_distance",
    "PennyGraph",
    "Puzzle1Witness",
    "build_penny_graph",
    "closest_neighbor_counts",
    "is_k_regular",
    "neighbor_counts",
    "puzzle1_witness",
    "reduce_to_min_subset",
    "RotationSystem",
    "BridgeClassification",
    "IslandDecomposition",
    "rotation_system",
    "outer_face",
    "find_bridges",
    "classify_bridges",
    "island_decomposition",
    "AngleLedger",
    "Eq1Result",
    "MinimalityReport",
    "LeafIslandReport",
    "classify_outer_edges",
    "angle_contribution",
    "build_angle_ledger",
    "check_eq1",
    "theorem1_ledger",
    "parallelogram_contradiction_check",
    "leaf_island_check",
    "NamedConstruction",
    "CONSTRUCTIONS",
    "construct_16",
    "construct_24",
    "construct_three_rhombus",
    "construct_matchstick_8",
    "construct_leaf_island_13",
    "AbstractGraph",
    "SearchConfig",
    "EmbedResult",
    "SearchReport",
    "enumerate_cubic",
    "planar_filter",
    "embed_attempt",
    "minimality_report",
]

__version__ = "0.1.0"
