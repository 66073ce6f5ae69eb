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
import math
from typing import (
    Final,
    Literal,
    get_args,
)

from ...exceptions import NonStationaryError
from ...types import ScenarioSpec
from ..validation import validate_allowed_value

__all__ = (
    "ScenarioName",
    "SCENARIO_NAMES",
    "stationary_factor_moments",
    "scenario_preset",
)

ScenarioName = Literal["I", "II", "III", "IV"]
SCENARIO_NAMES: Final[tuple[str, ...]] = get_args(ScenarioName)

# name -> (theta, gamma_diag, delta)
_PRESETS: Final[dict[str, tuple[tuple[float, ...], tuple[float, ...], tuple[float, ...]]]] = {
    # two strong factors growing with p
    "I": ((0.6, 0.5), (4.0, 4.0), (0.5, 0.8)),
    # four weak factors, the last one below the transition for y in {0.5, 2}
    "II": ((0.6, -0.5, 0.3, 0.2), (4.0, 4.0, 4.0, 1.0), (1.0, 1.0, 1.0, 1.0)),
    "III": ((0.6, -0.5, 0.3), (2.0, 2.0, 2.0), (1.0, 1.0, 1.0)),
    # two growing and five weak factors
    "IV": (
        (0.6, 0.5, 0.6, -0.5, 0.3, 0.6, -0.5),
        (4.0, 4.0, 4.0, 4.0, 4.0, 2.0, 2.0),
        (0.5, 0.8, 1.0, 1.0, 1.0, 1.0, 1.0),
    ),
}


def stationary_factor_moments(theta: float, innovation_var: float) -> tuple[float, float]:
    """Variance and lag-1 autocovariance of a stationary AR(1) series."""
    if not math.isfinite(theta) or abs(theta) >= 1:
        raise NonStationaryError(theta)
    if not math.isfinite(innovation_var) or innovation_var <= 0:
        raise ValueError(f"innovation_var must be positive. Got: {innovation_var}")
    gamma0 = innovation_var / (1.0 - theta * theta)
    return gamma0, theta * gamma0


def scenario_preset(
    name: ScenarioName,
    p: int,
    T: int,
    *,
    sigma2: float = 1.0,
    random_loadings: bool = False,
) -> ScenarioSpec:
    validate_allowed_value(name, SCENARIO_NAMES, "scenario")
    theta, gamma_diag, delta = _PRESETS[name]
    return ScenarioSpec(
        theta=theta,
        gamma_diag=gamma_diag,
        delta=delta,
        p=p,
        T=T,
        sigma2=sigma2,
        name=name,
        random_loadings=random_loadings,
    )
