"""Promotion, rotation and depth maps between three-row tableaux and sl3 webs."""
from .errors import *  # noqa: F401,F403
from .tableau import (
    Shape,
    StandardTableau,
    count_standard,
    enumerate_standard,
    format_tableau,
    parse_tableau,
    promote,
    promotion_witness,
    random_standard,
    shuffle,
    validate,
)
from .mdiagram import Arc, MDiagram, PairPosition, Role, crossings, from_tableau, pair_position
from .webmap import (
    Orientation,
    Web,
    boundary_depth_profile,
    canonical_form,
    depth_map,
    extended_depth_map,
    faces,
    format_web,
    is_reduced,
    join,
    parse_web,
    path_depth,
    resolve,
    rotate,
    web_of,
)

__version__ = "0.1.0"
