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
"""Theoretical limits of a scenario: per-factor moments, transition quantities and the significant count k0."""

import numpy as np
import pandas as pd

from ...types import (
    FactorParams,
    ScenarioSpec,
)
from ..spectral.core import spectral_law
from ..spectral.transition import spike_limit
from .scenarios import stationary_factor_moments

__all__ = (
    "LIMIT_COLUMNS",
    "theoretical_limits",
    "significant_count",
    "factor_snr_points",
)

LIMIT_COLUMNS = [
    "factor",
    "theta",
    "gamma0",
    "gamma1",
    "t1",
    "t_b_plus",
    "lambda",
    "b",
    "significant",
    "diverging",
]


def theoretical_limits(spec: ScenarioSpec) -> pd.DataFrame:
    """One row per factor at y = p / T.

    Factors with delta < 1 have a strength growing with p; they are flagged `diverging`, counted as
    significant and get no finite (t1, lambda).
    """
    law = spectral_law(spec.y)
    rows = []
    for i, (theta, variance, delta) in enumerate(zip(spec.theta, spec.innovation_variances, spec.delta), start=1):
        gamma0, gamma1 = stationary_factor_moments(theta, float(variance))
        diverging = delta < 1.0
        if diverging:
            t1, lambda_, significant = np.nan, np.nan, True
        else:
            result = spike_limit(FactorParams(gamma0=gamma0, gamma1=gamma1, sigma2=spec.sigma2), spec.y)
            t1, lambda_, significant = result.t1, result.lambda_, result.significant
        rows.append((i, theta, gamma0, gamma1, t1, law.t_b_plus, lambda_, law.b, significant, diverging))
    return pd.DataFrame(rows, columns=LIMIT_COLUMNS)


def significant_count(spec: ScenarioSpec) -> int:
    """k0, the number of significant factors."""
    table = theoretical_limits(spec)
    return int(table["significant"].sum())


def factor_snr_points(spec: ScenarioSpec) -> pd.DataFrame:
    """Factor coordinates (gamma0 / sigma2, gamma1 / sigma2) in the detectability plane."""
    table = theoretical_limits(spec)
    return pd.DataFrame(
        {
            "factor": table["factor"],
            "gamma0_snr": table["gamma0"] / spec.sigma2,
            "gamma1_snr": table["gamma1"] / spec.sigma2,
            "significant": table["significant"],
        }
    )
