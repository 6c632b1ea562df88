"""Maximum-width rainbow-bisecting empty annuli over colored planar point sets."""

from .core import (
    DEFAULT_EPS,
    INF,
    CircularAnnulus,
    ColoredPoint,
    LCorridor,
    L_ORIENTATIONS,
    Line,
    QUADRANT_SIGNS,
    PointSet,
    RectAnnulus,
    Region,
    SquareAnnulus,
    Strip,
    classify,
    is_rainbow,
    offset_square,
    validate_solution,
)
from .circles import (
    FAR_FIELD_SCALES,
    CenterCandidate,
    LiftedPoint,
    best_annulus_at_center,
    cir21_candidates,
    cir22_candidates,
    circle_plane,
    far_field_candidates,
    lift,
    max_rbca,
    max_rbca_on_line,
    point_center_candidates,
)
from .instances import (
    GENERATOR_KINDS,
    InstanceError,
    SolutionReport,
    check_report,
    format_instance,
    generate_instance,
    load_instance,
    parse_instance,
    save_instance,
)
from .svg import render_svg
from .lcorridor import (
    GapTree,
    MaxCoordTree,
    Staircase,
    boundary_points_query,
    build_staircases,
    max_rblc,
    max_rblc_all,
    max_xgap_query,
    rainbow_range_query,
)
from .rect import (
    ColorRangeTrees,
    DecisionOutcome,
    GapPointTree,
    MinimalRainbowInterval,
    SlabTrees,
    WGap,
    anchor_ordering,
    build_slab_trees,
    dp_decision,
    dp_decision_fast,
    max_anchored_rbra_for_top_point,
    max_rbra,
    minimal_rainbow_intervals,
    relevant_w_gaps,
)
from .squares import best_annulus_on_segment, c3_center_segment, max_rbsa, max_rbsa_c3
from .strips import max_rbes

__all__ = [
    "DEFAULT_EPS",
    "INF",
    "CircularAnnulus",
    "ColoredPoint",
    "LCorridor",
    "L_ORIENTATIONS",
    "Line",
    "QUADRANT_SIGNS",
    "PointSet",
    "RectAnnulus",
    "Region",
    "SquareAnnulus",
    "Strip",
    "classify",
    "is_rainbow",
    "offset_square",
    "validate_solution",
    "GENERATOR_KINDS",
    "InstanceError",
    "SolutionReport",
    "check_report",
    "format_instance",
    "generate_instance",
    "load_instance",
    "parse_instance",
    "render_svg",
    "save_instance",
    "FAR_FIELD_SCALES",
    "CenterCandidate",
    "LiftedPoint",
    "best_annulus_at_center",
    "cir21_candidates",
    "cir22_candidates",
    "circle_plane",
    "far_field_candidates",
    "lift",
    "max_rbca",
    "max_rbca_on_line",
    "point_center_candidates",
    "ColorRangeTrees",
    "DecisionOutcome",
    "GapPointTree",
    "GapTree",
    "MaxCoordTree",
    "MinimalRainbowInterval",
    "SlabTrees",
    "Staircase",
    "WGap",
    "anchor_ordering",
    "build_slab_trees",
    "dp_decision",
    "dp_decision_fast",
    "max_anchored_rbra_for_top_point",
    "max_rbra",
    "minimal_rainbow_intervals",
    "relevant_w_gaps",
    "best_annulus_on_segment",
    "boundary_points_query",
    "build_staircases",
    "c3_center_segment",
    "max_rbes",
    "max_rblc",
    "max_rblc_all",
    "max_rbsa",
    "max_rbsa_c3",
    "max_xgap_query",
    "rainbow_range_query",
]
