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
from typing import Optional

import numpy as np

from ...exceptions import RankExhaustionError
from ...types import (
    MultistepRecord,
    Panel,
    eigenvalue_ratios,
)
from ..logger import get_logger
from .autocov import spectral_decomposition
from .estimators import default_ratio_cap

__all__ = ("k_tilde_multistep", "TRACE_EIGENVALUES")

TRACE_EIGENVALUES = 30

logger = get_logger()


def k_tilde_multistep(panel: Panel, max_steps: int, search_cap: Optional[int] = None) -> list[MultistepRecord]:
    """Repeat the ratio estimator on residuals after projecting out the directions found so far.

    Step s scans at most min(search_cap, min(p, T) - 1 - removed) ratios: every removed direction
    leaves an exact zero at the tail of the spectrum. search_cap defaults to `default_ratio_cap`.
    """
    if max_steps < 1:
        raise ValueError(f"max_steps must be at least 1. Got: {max_steps}")
    if search_cap is not None and search_cap < 1:
        raise ValueError(f"search_cap must be at least 1. Got: {search_cap}")

    if search_cap is None:
        search_cap = default_ratio_cap(panel.p, panel.T)
    residual = panel
    removed = 0
    records: list[MultistepRecord] = []
    logger.info(f"Multi-step ratio estimation on p={panel.p}, T={panel.T}, up to {max_steps} steps")
    for step in range(1, max_steps + 1):
        available = min(panel.p, panel.T) - 1 - removed
        cap = min(search_cap, available)
        if removed >= panel.p or cap < 1:
            raise RankExhaustionError(step=step, removed=removed, p=panel.p)

        left, eigenvalues = spectral_decomposition(residual)
        r_hat = int(np.argmin(eigenvalue_ratios(eigenvalues)[:cap])) + 1
        loadings = left[:, :r_hat]
        residual = Panel(residual.data - loadings @ (loadings.T @ residual.data))
        removed += r_hat
        records.append(
            MultistepRecord(
                step=step,
                r_hat=r_hat,
                cumulative_k=removed,
                top_eigenvalues=tuple(float(v) for v in eigenvalues[:TRACE_EIGENVALUES]),
            )
        )
        logger.debug(f"Step {step}: r_hat={r_hat}, cumulative={removed}, l_1={eigenvalues[0]:.6g}")
    logger.info(f"Multi-step ratio estimation finished with cumulative k={removed}")
    return records
