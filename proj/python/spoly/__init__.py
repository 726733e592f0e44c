"""Float-format B-spline control polygons: evaluation, conversion and experiments."""

import json

from ._spoly import (
    CurvatureSingularity,
    DomainError,
    InvalidArgument,
    NoExactFloatForm,
    NumericError,
    Polygon,
    RegularityError,
    bezier_segments,
    curvature,
    discrete_curvature,
    domain,
    evaluate,
    join,
    max_evolute_deviation,
    mineur_farin,
    regular_polygon,
    to_clamped,
    to_float,
)
from . import _spoly


def circle_test(degree=9, samples=10000):
    return json.loads(_spoly.circle_test_json(degree, samples))


def perturb_test(decimals=3):
    return json.loads(_spoly.perturb_test_json(decimals))


def fig2_compare(q=2.0, theta_deg=90.0, count=5):
    return json.loads(_spoly.fig2_compare_json(q, theta_deg, count))


def spiral_approx(degree=8, s0=0.0, step=1.0, count=20):
    return json.loads(_spoly.spiral_approx_json(degree, s0, step, count))


def position_dodecagon():
    return json.loads(_spoly.position_dodecagon_json())
