"""Locate hidden points in the plane from bundles of parallel lines, exactly."""
from .errors import *  # noqa: F401,F403
from .geometry import (
    COINCIDENT,
    LEMMA_TRANSFORMS,
    ORIGIN,
    PARALLEL,
    VERTICAL,
    Dihedral,
    Intersection,
    Point,
    SlantLine,
    Transform,
    VerticalLine,
    apply_transform,
    contains,
    format_slope,
    intersect,
    line_through,
    make_rational,
    parse_slope,
    slope_of,
    transform_line,
    transform_slope,
)
from .tiers import TABLE_ORDER, slope_sequence, tier_of, tier_slopes
from .observation import (
    Configuration,
    Observation,
    no_phantom_revealed,
    observe,
    phantoms,
    potential_points,
)
from .solver import (
    Ambiguous,
    HiddenConfiguration,
    Infeasible,
    Semantics,
    Undecidable,
    Unique,
    adaptive_search,
    consistent_configurations,
    determinacy,
    required_slopes,
)
from .census import (
    TABLE_1,
    GridShape,
    census,
    compare_with_table,
    enumerate_grid_configurations,
    grid_configuration_count,
    grid_coverage_count,
)
from .adversarial import adversarial_configuration, verify_adversarial

__version__ = "0.1.0"
