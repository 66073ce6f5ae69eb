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
from typing import (
    Optional,
    Union,
)

import numpy as np
import pandas as pd

from autocov_factors.internal.panel_io import panel_from_frame
from autocov_factors.types import (
    EstimatorConfig,
    Panel,
)

# This module resolves the flexible arguments of the public functions into the objects used internally.

PanelLike = Union[Panel, np.ndarray, pd.DataFrame]


def resolve_panel(panel: PanelLike, *, demean: bool = False) -> Panel:
    if isinstance(panel, Panel):
        resolved = panel
    elif isinstance(panel, pd.DataFrame):
        # DataFrames follow the CSV layout: one row per time point
        resolved = panel_from_frame(panel)
    elif isinstance(panel, np.ndarray):
        resolved = Panel(panel)
    else:
        raise ValueError(
            "Invalid type for `panel`. Expected Panel, a p x (T + 1) numpy array or a DataFrame with one row per "
            f"time point, but got {type(panel)}."
        )
    return resolved.demeaned() if demean else resolved


def resolve_estimator_config(
    d_T: Union[float, EstimatorConfig],
    search_cap: Optional[int],
    require_two: bool,
) -> EstimatorConfig:
    if isinstance(d_T, EstimatorConfig):
        return d_T
    if isinstance(d_T, bool) or not isinstance(d_T, (int, float, np.floating)):
        raise ValueError(f"Invalid type for `d_T`. Expected a number or EstimatorConfig, but got {type(d_T)}.")
    return EstimatorConfig(d_T=float(d_T), search_cap=search_cap, require_two=require_two)
