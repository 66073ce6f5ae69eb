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

__all__ = [
    "lag1_autocov",
    "mhat_spectrum",
    "k_hat",
    "k_tilde",
    "k_tilde_multistep",
    "calibrate_dT",
    "read_panel",
    "write_panel",
    "theory",
    "simulation",
]

import pathlib
from concurrent.futures import Executor
from typing import (
    Optional,
    Union,
)

import numpy as _np

from autocov_factors import (
    simulation,
    theory,
    types,
)
from autocov_factors._internal import (
    PanelLike,
    resolve_estimator_config,
    resolve_panel,
)
from autocov_factors.internal import panel_io as _panel_io
from autocov_factors.internal.estimation import autocov as _autocov
from autocov_factors.internal.estimation import calibration as _calibration
from autocov_factors.internal.estimation import estimators as _estimators
from autocov_factors.internal.estimation import multistep as _multistep


def lag1_autocov(panel: PanelLike, *, demean: bool = False) -> _np.ndarray:
    """Returns the lag-1 sample autocovariance matrix (1 / T) * sum of y_t y_{t-1}' of a panel.

    Args:
        panel: A `Panel`, a p x (T + 1) numpy array with one series per row, or a DataFrame with one
            time point per row and one series per column.
        demean: Whether to subtract the time average of every series first.

    Example:
        ```
        import numpy as np
        import autocov_factors as af

        af.lag1_autocov(np.array([[1.0, 2.0, 3.0]]))  # array([[4.]])
        ```
    """
    return _autocov.lag1_autocov(resolve_panel(panel, demean=demean))


def mhat_spectrum(panel: PanelLike, *, demean: bool = False) -> types.Spectrum:
    """Returns the descending eigenvalues of M-hat = Sigma-hat Sigma-hat' and their consecutive ratios.

    The eigenvalues are the squared singular values of the lag-1 autocovariance; min(p, T) of them are kept.
    A ratio 0 / 0 is reported as 1.

    Args:
        panel: See `lag1_autocov`.
        demean: Whether to subtract the time average of every series first.
    """
    return _autocov.mhat_spectrum(resolve_panel(panel, demean=demean))


def k_hat(
    spectrum: types.Spectrum,
    d_T: Union[float, types.EstimatorConfig],
    *,
    search_cap: Optional[int] = None,
    require_two: bool = False,
) -> types.ThresholdEstimate:
    """Thresholded ratio estimator of the number of factors.

    Returns (first j with theta_j > 1 - d_T) - 1. With `require_two=True` theta_{j+1} must pass the
    threshold as well, which gives the reinforced estimator.

    Args:
        spectrum: Output of `mhat_spectrum`.
        d_T: Threshold in (0, 1), typically from `calibrate_dT`, or a complete `EstimatorConfig`.
        search_cap: Largest j scanned. Defaults to every available ratio.
        require_two: Require two consecutive ratios above the threshold.

    Returns:
        `ThresholdEstimate` whose `saturated` flag is set when no ratio passed the threshold; a
        `SaturatedEstimateWarning` is emitted in that case.
    """
    return _estimators.k_hat(spectrum, resolve_estimator_config(d_T, search_cap, require_two))


def k_tilde(spectrum: types.Spectrum, search_cap: Optional[int] = None) -> int:
    """Ratio estimator: the index i <= search_cap minimizing l_{i+1} / l_i (the smallest one on ties).

    search_cap defaults to half the number of eigenvalues; the bottom of the spectrum holds
    near-zero eigenvalues whose ratios are not informative.
    """
    if search_cap is None:
        search_cap = max(1, len(spectrum) // 2)
    return _estimators.k_tilde(spectrum, search_cap)


def k_tilde_multistep(
    panel: PanelLike,
    max_steps: int,
    search_cap: Optional[int] = None,
    *,
    demean: bool = False,
) -> list[types.MultistepRecord]:
    """Runs the ratio estimator repeatedly, projecting the detected directions out of the panel between steps.

    Args:
        panel: See `lag1_autocov`.
        max_steps: Number of steps.
        search_cap: Largest ratio index scanned in each step. Defaults to half of min(p, T).
        demean: Whether to subtract the time average of every series first.

    Returns:
        One `MultistepRecord` per step with the count r_hat found, the running total and the leading
        eigenvalues of the spectrum seen at that step.

    Raises:
        RankExhaustionError: a step has no ratio left to scan.
    """
    return _multistep.k_tilde_multistep(resolve_panel(panel, demean=demean), max_steps, search_cap)


def calibrate_dT(
    p: int,
    T: int,
    reps: Optional[int] = None,
    quantile_level: Optional[float] = None,
    seed: int = 0,
    *,
    executor: Optional[Executor] = None,
) -> types.CalibrationReport:
    """Calibrates the threshold d_T for panels of size (p, T) on simulated pure-noise panels.

    Each replication records T^(2/3) * (nu_2 / nu_1 - 1) for the top two eigenvalues of M-hat; q is the
    empirical lower `quantile_level` quantile (linear interpolation) and d_T = |q| / T^(2/3).

    Args:
        p: Number of series, at least 10.
        T: Number of lag-1 products, at least 10.
        reps: Number of replications, at least 100. Defaults to AUTOCOV_FACTORS_CALIBRATION_REPS (2000).
        quantile_level: Lower-tail level in (0, 0.5). Defaults to AUTOCOV_FACTORS_CALIBRATION_LEVEL (0.005).
        seed: Master seed; replication i uses an independent stream derived from (seed, i).
        executor: Thread pool for the replications. A private pool is used when not provided.

    Raises:
        CalibrationFailureError: the quantile is not negative, or |q| >= T^(2/3).
    """
    return _calibration.calibrate_dT(p, T, reps, quantile_level, seed, executor=executor)


def read_panel(path: Union[str, pathlib.Path], *, transpose: bool = False, demean: bool = False) -> types.Panel:
    """Reads a panel from CSV: one time point per row, one series per column (`transpose=True` swaps them).

    A first row containing any non-numeric cell is treated as a header. Missing or non-numeric cells and
    ragged rows raise `PanelFormatError`.
    """
    return _panel_io.read_panel_csv(pathlib.Path(path), transpose=transpose, demean=demean)


def write_panel(panel: PanelLike, path: Union[str, pathlib.Path]) -> None:
    """Writes a panel as CSV with one time point per row, at full double precision."""
    _panel_io.write_panel_csv(resolve_panel(panel), pathlib.Path(path))
