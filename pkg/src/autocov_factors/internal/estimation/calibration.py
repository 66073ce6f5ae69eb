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
"""Monte-Carlo calibration of the threshold d_T from the top two eigenvalues of pure-noise panels."""

import threading
from concurrent.futures import Executor
from typing import Optional

import numpy as np

from ...exceptions import CalibrationFailureError
from ...types import CalibrationReport
from .. import env
from ..concurrency import (
    CALIBRATION_STREAM,
    run_replications,
    spawn_generator,
    use_executor,
)
from ..logger import get_logger
from ..validation import (
    validate_open_interval,
    validate_positive_int,
    validate_seed,
)
from .autocov import lag1_autocov

__all__ = (
    "calibrate_dT",
    "noise_ratio_statistic",
    "CalibrationCache",
    "QUANTILE_METHOD",
)

QUANTILE_METHOD = "linear"
MIN_DIMENSION = 10
MIN_REPS = 100

logger = get_logger()


def noise_ratio_statistic(noise: np.ndarray) -> float:
    """T^(2/3) * (nu_2 / nu_1 - 1) for the top two eigenvalues nu_1 >= nu_2 of M-hat built from `noise`."""
    n_periods = noise.shape[1] - 1
    singular = np.linalg.svd(noise[:, 1:] @ noise[:, :-1].T / n_periods, compute_uv=False)
    return float(n_periods ** (2.0 / 3.0) * ((singular[1] / singular[0]) ** 2 - 1.0))


def calibrate_dT(
    p: int,
    T: int,
    reps: Optional[int] = None,
    quantile_level: Optional[float] = None,
    seed: int = 0,
    *,
    executor: Optional[Executor] = None,
) -> CalibrationReport:
    p = validate_positive_int(p, "p", minimum=MIN_DIMENSION)
    T = validate_positive_int(T, "T", minimum=MIN_DIMENSION)
    reps = validate_positive_int(
        env.AUTOCOV_FACTORS_CALIBRATION_REPS.get() if reps is None else reps, "reps", minimum=MIN_REPS
    )
    quantile_level = validate_open_interval(
        env.AUTOCOV_FACTORS_CALIBRATION_LEVEL.get() if quantile_level is None else quantile_level,
        "quantile_level",
        0.0,
        0.5,
    )
    seed = validate_seed(seed)

    def replication(index: int) -> float:
        rng = spawn_generator(seed, CALIBRATION_STREAM, index)
        return noise_ratio_statistic(rng.standard_normal((p, T + 1)))

    logger.info(f"Calibrating d_T for p={p}, T={T} with {reps} replications (seed={seed})")
    with use_executor(executor) as pool:
        statistics = run_replications(replication, reps, pool, progress_desc=f"calibrate p={p} T={T}")

    q = float(np.quantile(np.asarray(statistics), quantile_level, method=QUANTILE_METHOD))
    d_T = abs(q) / T ** (2.0 / 3.0)
    if q >= 0 or d_T >= 1:
        raise CalibrationFailureError(p=p, t=T, q=q)
    logger.info(f"Calibrated d_T={d_T:.6g} from q={q:.6g}")
    return CalibrationReport(
        p=p,
        T=T,
        reps=reps,
        quantile_level=quantile_level,
        q=q,
        d_T=d_T,
        seed=seed,
        quantile_method=QUANTILE_METHOD,
    )


class CalibrationCache:
    """d_T calibrations keyed by (p, T, reps, quantile_level, seed), computed at most once per key."""

    def __init__(self) -> None:
        self._reports: dict[tuple[int, int, Optional[int], Optional[float], int], CalibrationReport] = {}
        self._lock = threading.Lock()

    def get(
        self,
        p: int,
        T: int,
        reps: Optional[int] = None,
        quantile_level: Optional[float] = None,
        seed: int = 0,
        *,
        executor: Optional[Executor] = None,
    ) -> CalibrationReport:
        key = (p, T, reps, quantile_level, seed)
        with self._lock:
            report = self._reports.get(key)
            if report is None:
                report = calibrate_dT(p, T, reps, quantile_level, seed, executor=executor)
                self._reports[key] = report
            else:
                logger.debug(f"Reusing d_T={report.d_T:.6g} for p={p}, T={T}")
            return report

    def __len__(self) -> int:
        with self._lock:
            return len(self._reports)

    def clear(self) -> None:
        with self._lock:
            self._reports.clear()
