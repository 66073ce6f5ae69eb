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
"""Limit theory of the lag-1 autocovariance spectrum: the noise law and the phase transition of factors.

Every function takes the aspect ratio y = lim p / T. Factor parameters are passed as `types.FactorParams`.
"""

__all__ = [
    "lsd_edges",
    "z_of_t",
    "t_at_b_plus",
    "stieltjes_m",
    "t_transform",
    "lsd_density",
    "spectral_law",
    "companion_atom_mass",
    "noise_law_density",
    "t_at_b_plus_curve",
    "t1_of",
    "t2_of",
    "spike_limit",
    "is_significant_region",
    "region_bounds",
    "region_corners",
    "detectability_boundary",
]

from autocov_factors.internal.spectral.core import (
    companion_atom_mass,
    lsd_density,
    lsd_edges,
    noise_law_density,
    spectral_law,
    stieltjes_m,
    t_at_b_plus,
    t_at_b_plus_curve,
    t_transform,
    z_of_t,
)
from autocov_factors.internal.spectral.transition import (
    detectability_boundary,
    is_significant_region,
    region_bounds,
    region_corners,
    spike_limit,
    t1_of,
    t2_of,
)
