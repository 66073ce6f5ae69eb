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
import json
import math

import numpy as np
import pandas as pd
import pytest

from autocov_factors.internal.output_format import (
    REPORT_TOP,
    create_estimate_report,
    create_mc_report,
    create_transition_report,
    to_jsonable,
    write_csv,
    write_json,
)
from autocov_factors.internal.simulation.monte_carlo import decision_table
from autocov_factors.internal.simulation.scenarios import scenario_preset
from autocov_factors.types import (
    CalibrationReport,
    MCResult,
    MultistepRecord,
    RegionBounds,
    Spectrum,
    TransitionResult,
)


def test_to_jsonable_converts_numpy_and_non_finite_values():
    # given
    value = {
        "array": np.array([1.0, np.nan]),
        "flag": np.bool_(True),
        "count": np.int64(3),
        "nested": (np.float32(0.5), math.inf),
        1: "key",
    }

    # when
    converted = to_jsonable(value)

    # then
    assert converted == {"array": [1.0, None], "flag": True, "count": 3, "nested": [0.5, None], "1": "key"}
    assert json.dumps(converted)


def test_create_estimate_report_truncates_spectrum():
    # given
    spectrum = Spectrum.from_eigenvalues(np.linspace(100.0, 1.0, 50))
    calibration = CalibrationReport(p=50, T=100, reps=2000, quantile_level=0.005, q=-3.7, d_T=0.17, seed=0)

    # when
    report = create_estimate_report(
        spectrum=spectrum,
        p=50,
        T=100,
        method="kstar",
        k=2,
        d_T=0.17,
        calibration=calibration,
        run_config={"seed": 0},
    )

    # then
    assert len(report["eigenvalues"]) == REPORT_TOP
    assert len(report["ratios"]) == REPORT_TOP
    assert report["k"] == 2
    assert report["saturated"] is False
    assert report["calibration"]["quantile_method"] == "linear"
    assert report["run_config"] == {"seed": 0}
    assert "multistep_trace" not in report


def test_create_estimate_report_with_multistep_trace():
    # given
    spectrum = Spectrum.from_eigenvalues([9.0, 1.0, 0.5])
    trace = [MultistepRecord(step=1, r_hat=1, cumulative_k=1, top_eigenvalues=(9.0, 1.0))]

    # when
    report = create_estimate_report(spectrum=spectrum, p=3, T=10, method="multistep", k=1, multistep_trace=trace)

    # then
    assert report["d_T"] is None
    assert report["calibration"] is None
    assert report["multistep_trace"] == [
        {"step": 1, "r_hat": 1, "cumulative_k": 1, "top_eigenvalues": [9.0, 1.0]}
    ]


def test_create_transition_report():
    # given
    result = TransitionResult(y=0.5, t1=0.0125, significant=True, lambda_=21.275)

    # when
    report = create_transition_report(
        result, RegionBounds(tau0=0.529, tau1=1.618), t_b_plus=0.309, b=2.7725, sigma2=2.0
    )

    # then
    assert report["transition"] == {"y": 0.5, "t1": 0.0125, "significant": True, "lambda": 21.275}
    assert report["raw_lambda"] == pytest.approx(85.1)
    assert report["region"] == {"tau0": 0.529, "tau1": 1.618}
    assert "run_config" not in report


def test_create_mc_report():
    # given
    result = MCResult(
        scenario=scenario_preset("III", 100, 200),
        reps=4,
        method="ktilde",
        k0=3,
        d_T=None,
        seed=1,
        estimates=(3, 3, 2, 4),
    )

    # when
    report = create_mc_report(result, decision_table(result), run_config={"threads": 2})

    # then
    assert report["scenario"]["name"] == "III"
    assert report["scenario"]["theta"] == [0.6, -0.5, 0.3]
    assert report["table"] == {
        "ktilde<2": 0.0,
        "ktilde=2": 0.25,
        "ktilde=k0": 0.5,
        "ktilde>=4": 0.25,
    }
    assert report["histogram"] == {"2": 0.25, "3": 0.5, "4": 0.25}
    assert report["frequencies"]["=k0"] == 0.5


def test_write_json_to_file_and_stdout(tmp_path, capsys):
    # given
    payload = {"k": 2, "d_T": None}

    # when
    write_json(payload, tmp_path / "report.json")
    write_json(payload, None)

    # then
    assert json.loads((tmp_path / "report.json").read_text()) == payload
    assert json.loads(capsys.readouterr().out) == payload


def test_write_csv_keeps_full_precision(tmp_path):
    # given
    frame = pd.DataFrame({"y": [0.1], "t_b_plus": [1 / 3]})

    # when
    write_csv(frame, tmp_path / "curve.csv")

    # then
    restored = pd.read_csv(tmp_path / "curve.csv", float_precision="round_trip")
    assert restored["t_b_plus"].iloc[0] == 1 / 3
    assert list(restored.columns) == ["y", "t_b_plus"]
