"""Canonical conformal bryophylla and their Farey-type dynamics."""

from .canonical import (
    CanonicalBryophyllum,
    PosedBryophyllum,
    RegionLabel,
    arc_center_x,
    arc_radius_R,
    boundary_psi1,
    boundary_psi2,
    canonicalize,
    classify_region,
    farey_inequalities,
    is_affine,
    is_farey,
    make_canonical,
    pose,
)
from .conformal import (
    Arc,
    Circle,
    ExtendedMobius,
    Line,
    Mobius,
    ProjectivePoint,
    angle_between,
    arc_image,
    circline_through,
    cross_ratio,
    extended_apply,
    mobius_apply,
    mobius_from_three_points,
)
from .dynamics import (
    CurvilinearTriangle,
    contains_point,
    limit_point,
    nested_triangle,
    pi_map,
    quadruple_cross_ratios,
    shift_triangle,
    word_map,
)
from .exceptions import *  # noqa: F401,F403
from .farey import (
    ContinuedFraction,
    RunLengths,
    binary_expansion,
    cf_eval,
    eta,
    eta_dyadic,
    gauss_map_cf,
    gauss_measure,
    lr_decomposition,
    mediant,
)
from .words import EventuallyPeriodicWord, as_word

__version__ = "0.1.0"
