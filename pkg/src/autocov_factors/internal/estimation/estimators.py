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
"""Factor-number estimators built on the ratios theta_j = l_{j+1} / l_j of the M-hat spectrum."""

import numpy as np

from ...types import (
    EstimatorConfig,
    Spectrum,
    ThresholdEstimate,
)
from ...warnings import SaturatedEstimateWarning
from ..validation import validate_positive_int
from ..warnings import throttled_warn

__all__ = (
    "k_hat",
    "k_tilde",
    "default_ratio_cap",
)


def k_hat(spectrum: Spectrum, config: EstimatorConfig) -> ThresholdEstimate:
    """(first j with theta_j > 1 - d_T) - 1, scanning j = 1..search_cap.

    With `require_two`, theta_{j+1} must exceed the threshold too; a missing theta_{j+1} fails the test.
    When no j qualifies the estimate is search_cap, flagged as saturated. A search_cap beyond the last
    ratio is rejected.
    """
    ratios = spectrum.ratios
    if config.search_cap is not None and config.search_cap > len(ratios):
        raise ValueError(
            f"search_cap={config.search_cap} needs {config.search_cap + 1} eigenvalues; "
            f"the spectrum has {len(spectrum)}"
        )
    cap = len(ratios) if config.search_cap is None else config.search_cap
    above = ratios > 1.0 - config.d_T
    if config.require_two:
        above = above & np.append(above[1:], False)
    hits = np.flatnonzero(above[:cap])
    if hits.size:
        return ThresholdEstimate(k=int(hits[0]), saturated=False)

    throttled_warn(
        SaturatedEstimateWarning(
            f"No ratio among the first {cap} exceeds 1 - d_T = {1.0 - config.d_T:.6g}; "
            f"the estimate is capped at {cap}. Increase the search cap or d_T."
        )
    )
    return ThresholdEstimate(k=cap, saturated=True)


def default_ratio_cap(p: int, T: int) -> int:
    """Default scan range of the argmin estimators: the upper half of the spectrum.

    For p < T the smallest singular values of the lag-1 autocovariance are spread almost uniformly near
    zero, so ratios from the bottom of the spectrum can be arbitrarily small.
    """
    return max(1, min(p, T) // 2)


def k_tilde(spectrum: Spectrum, search_cap: int) -> int:
    """argmin over 1 <= i <= search_cap of l_{i+1} / l_i; ties go to the smallest i."""
    search_cap = validate_positive_int(search_cap, "search_cap")
    if search_cap > len(spectrum.ratios):
        raise ValueError(
            f"search_cap={search_cap} needs {search_cap + 1} eigenvalues; the spectrum has {len(spectrum)}"
        )
    return int(np.argmin(spectrum.ratios[:search_cap])) + 1
