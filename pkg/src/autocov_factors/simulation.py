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
"""AR(1) factor scenarios, their theoretical limits and seeded Monte-Carlo runs of the estimators."""

__all__ = [
    "SCENARIO_NAMES",
    "METHODS",
    "stationary_factor_moments",
    "scenario_preset",
    "generate_panel",
    "gaussian_noise",
    "theoretical_limits",
    "significant_count",
    "factor_snr_points",
    "run_mc",
    "decision_table",
]

from autocov_factors.internal.simulation.generator import (
    gaussian_noise,
    generate_panel,
)
from autocov_factors.internal.simulation.limits import (
    factor_snr_points,
    significant_count,
    theoretical_limits,
)
from autocov_factors.internal.simulation.monte_carlo import (
    METHODS,
    decision_table,
    run_mc,
)
from autocov_factors.internal.simulation.scenarios import (
    SCENARIO_NAMES,
    scenario_preset,
    stationary_factor_moments,
)
