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
import pytest

from autocov_factors.internal.concurrency import create_thread_pool_executor
from autocov_factors.internal.estimation.calibration import CalibrationCache
from autocov_factors.internal.simulation.generator import generate_panel
from autocov_factors.internal.simulation.monte_carlo import (
    decision_table,
    estimate_k,
    run_mc,
)
from autocov_factors.internal.simulation.scenarios import scenario_preset
from autocov_factors.types import (
    MCResult,
    ScenarioSpec,
)


@pytest.fixture
def small_scenario():
    return scenario_preset("I", 20, 40)


def test_run_mc_is_independent_of_thread_count(small_scenario):
    # when
    with create_thread_pool_executor(1) as single, create_thread_pool_executor(3) as many:
        first = run_mc(small_scenario, 12, "ktilde", seed=4, executor=single)
        second = run_mc(small_scenario, 12, "ktilde", seed=4, executor=many)

    # then
    assert first.estimates == second.estimates
    assert len(first.estimates) == 12
    assert first.k0 == 2
    assert first.d_T is None


def test_run_mc_replication_matches_direct_estimate(small_scenario):
    # when
    result = run_mc(small_scenario, 3, "khat", seed=9, d_T=0.3)

    # then
    direct = [estimate_k(generate_panel(small_scenario, 9, index=i), "khat", 0.3) for i in range(3)]
    assert list(result.estimates) == direct
    assert result.d_T == 0.3


def test_run_mc_calibrates_threshold_once_through_cache(small_scenario):
    # given
    cache = CalibrationCache()

    # when
    first = run_mc(small_scenario, 4, "kstar", seed=1, calibration_reps=100, cache=cache)
    second = run_mc(small_scenario, 4, "khat", seed=1, calibration_reps=100, cache=cache)

    # then
    assert len(cache) == 1
    assert first.d_T == second.d_T
    assert 0 < first.d_T < 1


def test_run_mc_multistep_method(small_scenario):
    # when
    result = run_mc(small_scenario, 4, "ktilde2", seed=2)

    # then
    assert all(estimate >= 2 for estimate in result.estimates)
    assert sum(result.frequencies.values()) == pytest.approx(1.0)


@pytest.mark.parametrize("kwargs", [{"method": "kbar"}, {"reps": 0}, {"seed": -3}])
def test_run_mc_rejects_invalid_arguments(small_scenario, kwargs):
    arguments = {"reps": 2, "method": "ktilde", "seed": 0, **kwargs}
    with pytest.raises(ValueError):
        run_mc(small_scenario, **arguments)


def test_estimate_k_threshold_method_needs_d_t(small_scenario):
    with pytest.raises(ValueError, match="d_T"):
        estimate_k(generate_panel(small_scenario, 0), "kstar")


def test_frequencies_and_histogram():
    # given
    result = MCResult(
        scenario=scenario_preset("II", 100, 200),
        reps=6,
        method="kstar",
        k0=3,
        d_T=0.1,
        seed=0,
        estimates=(1, 3, 3, 4, 5, 0),
    )

    # then
    assert result.histogram == pytest.approx({0: 1 / 6, 1: 1 / 6, 3: 2 / 6, 4: 1 / 6, 5: 1 / 6})
    assert result.frequencies == pytest.approx(
        {"<=k0-2": 2 / 6, "=k0-1": 0.0, "=k0": 2 / 6, "=k0+1": 1 / 6, ">=k0+2": 1 / 6}
    )


def test_decision_table_follows_published_rows():
    # given
    result = MCResult(
        scenario=scenario_preset("II", 100, 200),
        reps=6,
        method="kstar",
        k0=3,
        d_T=0.1,
        seed=0,
        estimates=(1, 3, 3, 4, 5, 0),
    )

    # when
    table = decision_table(result)

    # then
    assert table["decision"].tolist() == [
        "kstar<1",
        "kstar=1",
        "kstar=2",
        "kstar=k0",
        "kstar=4",
        "kstar>=5",
    ]
    assert table["frequency"].tolist() == pytest.approx([1 / 6, 1 / 6, 0.0, 2 / 6, 1 / 6, 1 / 6])


def test_decision_table_for_custom_scenario_spans_observed_values():
    # given
    spec = ScenarioSpec(theta=(0.5,) * 3, gamma_diag=(1.0,) * 3, delta=(1.0,) * 3, p=10, T=20)
    result = MCResult(scenario=spec, reps=2, method="ktilde", k0=3, d_T=None, seed=0, estimates=(2, 4))

    # when
    table = decision_table(result)

    # then
    assert table["decision"].tolist() == ["ktilde<2", "ktilde=2", "ktilde=k0", "ktilde=4", "ktilde>=5"]
    assert table["frequency"].tolist() == pytest.approx([0.0, 0.5, 0.0, 0.5, 0.0])
    assert table["frequency"].sum() == pytest.approx(1.0)
