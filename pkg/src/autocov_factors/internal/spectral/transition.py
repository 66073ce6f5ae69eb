#
# Copyright (c) 2026, The autocov-factors authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Phase transition of a single factor: the root T1, the spike limit and the detectability region.

Every quantity here depends on the factor only through (gamma0 / sigma2, gamma1 / sigma2), so the
computations run on the normalized pair and report lambda in units of sigma^4.
"""

import math

import numpy as np
import pandas as pd

from ...types import (
    FactorParams,
    RegionBounds,
    TransitionResult,
)
from ...warnings import NearCriticalWarning
from ..logger import get_logger
from ..validation import (
    validate_aspect_ratio,
    validate_positive_int,
)
from ..warnings import throttled_warn
from .core import (
    lsd_edges,
    t_at_b_plus,
    z_of_t,
)

__all__ = (
    "t1_of",
    "t2_of",
    "spike_limit",
    "is_significant_region",
    "region_bounds",
    "region_corners",
    "detectability_boundary",
    "BOUNDARY_COLUMNS",
)

NEAR_CRITICAL_RTOL = 1e-12
BOUNDARY_COLUMNS = ["curve_id", "gamma0_snr", "gamma1_snr"]

logger = get_logger()


def _quadratic(params: FactorParams, y: float) -> tuple[float, float, float, float]:
    """(a, B, c, sqrt(B^2 - 4ac)) of a T^2 - B T + c = 0 in sigma^2-normalized units."""
    g0, g1 = params.snr
    a = max(g0 * g0 - g1 * g1, 0.0)
    big_b = g1 * g1 + 2.0 * y * g0
    c = y * y
    # B^2 - 4ac factors as g1^2 (g1^2 + 4 y g0 + 4 y^2)
    sqrt_disc = abs(g1) * math.sqrt(g1 * g1 + 4.0 * y * g0 + 4.0 * y * y)
    return a, big_b, c, sqrt_disc


def t1_of(params: FactorParams, y: float) -> float:
    """The smaller positive root of [g0^2 - g1^2] T^2 - [g1^2 + 2y g0] T + y^2 = 0.

    Written as 2c / (B + sqrt(disc)), which stays finite when |gamma1| = gamma0 and the
    equation is linear; there it reduces to y^2 / (g1^2 + 2y g0).
    """
    y = validate_aspect_ratio(y)
    _, big_b, c, sqrt_disc = _quadratic(params, y)
    return 2.0 * c / (big_b + sqrt_disc)


def t2_of(params: FactorParams, y: float) -> float:
    """The larger root, discarded by the transition; infinite when the equation is linear."""
    y = validate_aspect_ratio(y)
    a, big_b, _, sqrt_disc = _quadratic(params, y)
    if a == 0.0:
        return math.inf
    return (big_b + sqrt_disc) / (2.0 * a)


def spike_limit(params: FactorParams, y: float) -> TransitionResult:
    y = validate_aspect_ratio(y)
    t1 = t1_of(params, y)
    t_star = t_at_b_plus(y)
    if abs(t1 - t_star) <= NEAR_CRITICAL_RTOL * t_star:
        throttled_warn(
            NearCriticalWarning(
                f"T1={t1!r} is within {NEAR_CRITICAL_RTOL:g} (relative) of T(b+)={t_star!r} at y={y!r}; "
                "the significance decision is decided by rounding."
            )
        )
    significant = t1 < t_star
    lambda_ = z_of_t(t1, y) if significant else lsd_edges(y)[1]
    logger.debug(f"Factor {params} at y={y}: T1={t1:.6g}, significant={significant}, lambda={lambda_:.6g}")
    return TransitionResult(y=y, t1=t1, significant=significant, lambda_=lambda_)


def region_bounds(y: float) -> RegionBounds:
    y = validate_aspect_ratio(y)
    t_star = t_at_b_plus(y)
    tau0 = y / (t_star + math.sqrt(t_star * t_star + t_star))
    return RegionBounds(tau0=tau0, tau1=y / t_star)


def is_significant_region(params: FactorParams, y: float) -> bool:
    """Direct region test: |g1| > tau0, or g0 lies right of the line t* g0 + sqrt(t*^2 + t*) |g1| = y."""
    y = validate_aspect_ratio(y)
    g0, g1 = params.snr
    t_star = t_at_b_plus(y)
    slope = math.sqrt(t_star * t_star + t_star)
    if abs(g1) > region_bounds(y).tau0:
        return True
    return g0 > (y - slope * abs(g1)) / t_star


def region_corners(y: float) -> dict[str, tuple[float, float]]:
    """Vertices of the undetectable quadrilateral in the (gamma0 / sigma2, gamma1 / sigma2) plane."""
    bounds = region_bounds(y)
    return {
        "O": (0.0, 0.0),
        "A": (bounds.tau0, bounds.tau0),
        "B": (bounds.tau0, -bounds.tau0),
        "C": (bounds.tau1, 0.0),
    }


def detectability_boundary(y: float, n_points: int, gamma0_max: float = 0.0) -> pd.DataFrame:
    """Curves bounding the undetectable quadrilateral, as plotting data.

    Curve ids:
        diagonal_upper / diagonal_lower: |g1| = g0 from O to A and from O to B.
        dotted_upper / dotted_lower: t* g0 + sqrt(t*^2 + t*) |g1| = y from A to C and from B to C.
        dashed_upper / dashed_lower: 2t* g0^2 - (1 + 2t*) g1^2 - 2y g0 = 0 for g0 from tau1 to gamma0_max,
            where the double root of the transition quadratic sits at T(b+).
    gamma0_max defaults to 3 * tau1.
    """
    y = validate_aspect_ratio(y)
    n_points = validate_positive_int(n_points, "n_points", minimum=2)
    t_star = t_at_b_plus(y)
    slope = math.sqrt(t_star * t_star + t_star)
    bounds = region_bounds(y)
    if gamma0_max <= bounds.tau1:
        gamma0_max = 3.0 * bounds.tau1

    diagonal = np.linspace(0.0, bounds.tau0, n_points)
    dotted_g1 = np.linspace(bounds.tau0, 0.0, n_points)
    dotted_g0 = (y - slope * dotted_g1) / t_star
    dashed_g0 = np.linspace(bounds.tau1, gamma0_max, n_points)
    dashed_g1 = np.sqrt(np.maximum(2.0 * t_star * dashed_g0**2 - 2.0 * y * dashed_g0, 0.0) / (1.0 + 2.0 * t_star))

    curves = [
        ("diagonal_upper", diagonal, diagonal),
        ("diagonal_lower", diagonal, -diagonal),
        ("dotted_upper", dotted_g0, dotted_g1),
        ("dotted_lower", dotted_g0, -dotted_g1),
        ("dashed_upper", dashed_g0, dashed_g1),
        ("dashed_lower", dashed_g0, -dashed_g1),
    ]
    frames = [
        pd.DataFrame({"curve_id": curve_id, "gamma0_snr": g0, "gamma1_snr": g1}, columns=BOUNDARY_COLUMNS)
        for curve_id, g0, g1 in curves
    ]
    return pd.concat(frames, ignore_index=True)
