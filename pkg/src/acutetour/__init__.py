"""Acute spanning tours of planar point sets, with exact integer predicates."""

from .errors import (
    AcuteTourError,
    DegenerateInputError,
    InternalInvariantError,
    InvalidInputError,
    ParityError,
    PreconditionError,
    UnsupportedSizeError,
)
from .geometry import (
    Orientation,
    Point,
    PointSet,
    TriangleLocation,
    nonobtuse_at,
    orientation,
    point_in_triangle,
    rotation_angle,
)
from .oracle import OracleResult, acute_tour_exists_bruteforce, exhaustive_min_max_tour
from .partition import EquitablePartition, OrthoFrame, equitable_partition, frame_transform
from .quadruple import Quadruple, classify_quadruple, is_acute_path, opposite_quadrant_acute
from .tour import Tour, build_tour, construct_acute_tour, farthest_point_acute_path
from .verify import VerificationReport, verify_path, verify_tour

__version__ = "0.1.0"
