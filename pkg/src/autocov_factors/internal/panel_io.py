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
"""CSV ingestion and export of panels. Files hold one time point per row and one series per column."""

import pathlib
from typing import Optional

import numpy as np
import pandas as pd

from ..exceptions import PanelFormatError
from ..types import Panel
from .logger import get_logger
from .validation import ensure_readable_file

__all__ = (
    "read_panel_csv",
    "write_panel_csv",
    "panel_from_frame",
)

logger = get_logger()


def _is_number(cell: object) -> bool:
    try:
        float(str(cell))
    except ValueError:
        return False
    return True


def panel_from_frame(frame: pd.DataFrame, *, transpose: bool = False, source: Optional[str] = None) -> Panel:
    """Convert a frame of time points x series (series x time points with `transpose`) into a Panel."""
    numeric = frame.apply(pd.to_numeric, errors="coerce")
    invalid = numeric.isna().to_numpy()
    if invalid.any():
        row, column = (int(i) for i in np.argwhere(invalid)[0])
        raise PanelFormatError(
            f"Cell at row {row + 1}, column {column + 1} is missing or not a number: {frame.iat[row, column]!r}.",
            source=source,
        )
    values = numeric.to_numpy(dtype=np.float64)
    return Panel(values) if transpose else Panel.from_time_major(values)


def read_panel_csv(path: pathlib.Path, *, transpose: bool = False, demean: bool = False) -> Panel:
    """Read a panel; a first row with any non-numeric cell is taken as a header."""
    ensure_readable_file(path)
    try:
        raw = pd.read_csv(path, header=None, dtype=str, keep_default_na=False, skip_blank_lines=True)
    except pd.errors.EmptyDataError as e:
        raise PanelFormatError("The file is empty.", source=str(path)) from e
    except pd.errors.ParserError as e:
        raise PanelFormatError(f"Rows have different numbers of fields ({e}).", source=str(path)) from e

    if len(raw) and not all(_is_number(cell) for cell in raw.iloc[0]):
        logger.debug(f"Treating the first row of {path} as a header")
        raw = raw.iloc[1:].reset_index(drop=True)
    if raw.empty:
        raise PanelFormatError("The file has no data rows.", source=str(path))
    raw = raw.replace("", np.nan)

    panel = panel_from_frame(raw, transpose=transpose, source=str(path))
    logger.info(f"Read a panel with p={panel.p} series and {panel.n_obs} time points from {path}")
    return panel.demeaned() if demean else panel


def write_panel_csv(panel: Panel, path: pathlib.Path) -> None:
    frame = pd.DataFrame(panel.data.T, columns=[f"series_{i}" for i in range(1, panel.p + 1)])
    frame.to_csv(path, index=False, float_format="%.17g")
