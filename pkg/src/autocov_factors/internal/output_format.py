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
import dataclasses
import json
import math
import pathlib
import sys
from typing import (
    Any,
    Optional,
)

import numpy as np
import pandas as pd

from ..types import (
    CalibrationReport,
    MCResult,
    MultistepRecord,
    RegionBounds,
    Spectrum,
    TransitionResult,
)

__all__ = (
    "REPORT_TOP",
    "to_jsonable",
    "create_estimate_report",
    "create_transition_report",
    "create_mc_report",
    "write_json",
    "write_csv",
)

REPORT_TOP = 30


def to_jsonable(value: Any) -> Any:
    """Recursively convert dataclasses, numpy values and non-finite floats into plain JSON values."""
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {field.name: to_jsonable(getattr(value, field.name)) for field in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(item) for item in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        number = float(value)
        return number if math.isfinite(number) else None
    if isinstance(value, pathlib.Path):
        return str(value)
    return value


def create_estimate_report(
    *,
    spectrum: Spectrum,
    p: int,
    T: int,
    method: str,
    k: int,
    d_T: Optional[float] = None,
    saturated: bool = False,
    calibration: Optional[CalibrationReport] = None,
    multistep_trace: Optional[list[MultistepRecord]] = None,
    run_config: Optional[dict[str, Any]] = None,
) -> dict[str, Any]:
    report: dict[str, Any] = {
        "p": p,
        "T": T,
        "d_T": d_T,
        "method": method,
        "k": k,
        "eigenvalues": spectrum.eigenvalues[:REPORT_TOP],
        "ratios": spectrum.ratios[:REPORT_TOP],
        "saturated": saturated,
        "calibration": calibration,
    }
    if multistep_trace is not None:
        report["multistep_trace"] = multistep_trace
    if run_config is not None:
        report["run_config"] = run_config
    return to_jsonable(report)


def create_transition_report(
    result: TransitionResult,
    bounds: RegionBounds,
    *,
    t_b_plus: float,
    b: float,
    sigma2: float,
    run_config: Optional[dict[str, Any]] = None,
) -> dict[str, Any]:
    report = {
        "transition": {
            "y": result.y,
            "t1": result.t1,
            "significant": result.significant,
            "lambda": result.lambda_,
        },
        "raw_lambda": result.raw_lambda(sigma2),
        "t_b_plus": t_b_plus,
        "b": b,
        "region": bounds,
    }
    if run_config is not None:
        report["run_config"] = run_config
    return to_jsonable(report)


def create_mc_report(
    result: MCResult,
    table: pd.DataFrame,
    *,
    run_config: Optional[dict[str, Any]] = None,
) -> dict[str, Any]:
    report = {
        "scenario": result.scenario,
        "reps": result.reps,
        "method": result.method,
        "k0": result.k0,
        "d_T": result.d_T,
        "seed": result.seed,
        "frequencies": result.frequencies,
        "histogram": result.histogram,
        "table": dict(zip(table["decision"], table["frequency"])),
    }
    if run_config is not None:
        report["run_config"] = run_config
    return to_jsonable(report)


def write_json(payload: dict[str, Any], path: Optional[pathlib.Path]) -> None:
    text = json.dumps(payload, indent=2)
    if path is None:
        sys.stdout.write(text + "\n")
    else:
        path.write_text(text + "\n")


def write_csv(frame: pd.DataFrame, path: Optional[pathlib.Path]) -> None:
    if path is None:
        frame.to_csv(sys.stdout, index=False, float_format="%.17g")
    else:
        frame.to_csv(path, index=False, float_format="%.17g")
