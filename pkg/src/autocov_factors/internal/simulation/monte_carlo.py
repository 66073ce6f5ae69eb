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
"""Seeded Monte-Carlo runs of the factor-number estimators on simulated scenarios."""

from concurrent.futures import Executor
from typing import (
    Final,
    Literal,
    Optional,
    get_args,
)

import pandas as pd

from ...types import (
    EstimatorConfig,
    MCResult,
    Panel,
    ScenarioSpec,
)
from ..concurrency import (
    run_replications,
    use_executor,
)
from ..estimation.autocov import mhat_spectrum
from ..estimation.calibration import CalibrationCache
from ..estimation.estimators import (
    default_ratio_cap,
    k_hat,
    k_tilde,
)
from ..estimation.multistep import k_tilde_multistep
from ..logger import get_logger
from ..validation import (
    validate_allowed_value,
    validate_positive_int,
    validate_seed,
)
from .generator import generate_panel
from .limits import significant_count

__all__ = (
    "Method",
    "METHODS",
    "THRESHOLD_METHODS",
    "DEFAULT_CALIBRATION_CACHE",
    "estimate_k",
    "run_mc",
    "decision_table",
)

Method = Literal["khat", "kstar", "ktilde", "ktilde2", "ktilde3"]
METHODS: Final[tuple[str, ...]] = get_args(Method)
THRESHOLD_METHODS: Final[frozenset[str]] = frozenset({"khat", "kstar"})

# Row layouts of the published frequency tables: the listed values each get a row, with open-ended
# rows below the smallest and above the largest one.
_TABLE_VALUES: Final[dict[str, tuple[int, ...]]] = {
    "I": (1, 2),
    "II": (1, 2, 3, 4),
    "III": (2, 3),
    "IV": (1, 2, 3, 4, 5, 6, 7),
}

DEFAULT_CALIBRATION_CACHE = CalibrationCache()

logger = get_logger()


def estimate_k(panel: Panel, method: str, d_T: Optional[float] = None, search_cap: Optional[int] = None) -> int:
    if method in THRESHOLD_METHODS:
        if d_T is None:
            raise ValueError(f"method '{method}' needs a threshold d_T")
        config = EstimatorConfig(d_T=d_T, search_cap=search_cap, require_two=method == "kstar")
        return k_hat(mhat_spectrum(panel), config).k
    if method == "ktilde":
        cap = default_ratio_cap(panel.p, panel.T) if search_cap is None else search_cap
        return k_tilde(mhat_spectrum(panel), cap)
    steps = int(method.removeprefix("ktilde"))
    return k_tilde_multistep(panel, max_steps=steps, search_cap=search_cap)[-1].cumulative_k


def run_mc(
    spec: ScenarioSpec,
    reps: int,
    method: str,
    seed: int,
    *,
    d_T: Optional[float] = None,
    search_cap: Optional[int] = None,
    calibration_reps: Optional[int] = None,
    quantile_level: Optional[float] = None,
    cache: Optional[CalibrationCache] = None,
    executor: Optional[Executor] = None,
) -> MCResult:
    """Estimate k on `reps` simulated panels; replication i always sees the same panel for a given seed.

    Threshold methods without an explicit d_T calibrate once per (p, T) through the cache.
    """
    reps = validate_positive_int(reps, "reps")
    method = validate_allowed_value(method, METHODS, "method")
    seed = validate_seed(seed)
    k0 = significant_count(spec)

    with use_executor(executor) as pool:
        if method in THRESHOLD_METHODS and d_T is None:
            cache = DEFAULT_CALIBRATION_CACHE if cache is None else cache
            d_T = cache.get(spec.p, spec.T, calibration_reps, quantile_level, seed, executor=pool).d_T

        def replication(index: int) -> int:
            return estimate_k(generate_panel(spec, seed, index=index), method, d_T, search_cap)

        logger.info(f"Running {reps} replications of scenario {spec.name or 'custom'} (p={spec.p}, T={spec.T})")
        estimates = run_replications(replication, reps, pool, progress_desc=f"{method} p={spec.p} T={spec.T}")

    result = MCResult(
        scenario=spec,
        reps=reps,
        method=method,
        k0=k0,
        d_T=d_T,
        seed=seed,
        estimates=tuple(estimates),
    )
    logger.info(f"Scenario {spec.name or 'custom'} with {method}: freq(=k0={k0}) = {result.frequencies['=k0']:.3f}")
    return result


def decision_table(result: MCResult) -> pd.DataFrame:
    """Frequencies grouped as the rows of the scenario's published table (the full range for custom scenarios)."""
    estimates = pd.Series(result.estimates, dtype=int)
    values = _TABLE_VALUES.get(result.scenario.name or "")
    if values is None:
        values = tuple(range(int(estimates.min()), int(estimates.max()) + 1))

    def label(value: int) -> str:
        return f"{result.method}=k0" if value == result.k0 else f"{result.method}={value}"

    rows = [(f"{result.method}<{values[0]}", int((estimates < values[0]).sum()))]
    rows.extend((label(value), int((estimates == value).sum())) for value in values)
    rows.append((f"{result.method}>={values[-1] + 1}", int((estimates > values[-1]).sum())))
    return pd.DataFrame(
        {
            "decision": [decision for decision, _ in rows],
            "frequency": [count / result.reps for _, count in rows],
        }
    )
