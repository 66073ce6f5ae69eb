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
import numpy as np
import pytest

from autocov_factors.internal.estimation.autocov import mhat_spectrum
from autocov_factors.internal.simulation.generator import (
    generate_panel,
    haar_loadings,
    simulate_factors,
)
from autocov_factors.internal.spectral.core import lsd_edges
from autocov_factors.types import ScenarioSpec


def zero_noise(rng, shape, sigma2):
    return np.zeros(shape)


@pytest.fixture
def two_factor_spec():
    return ScenarioSpec(theta=(0.6, -0.5), gamma_diag=(4.0, 2.0), delta=(1.0, 1.0), p=12, T=30)


def test_generate_panel_is_a_function_of_seed_and_index(two_factor_spec):
    # when
    first = generate_panel(two_factor_spec, seed=5, index=3)
    again = generate_panel(two_factor_spec, seed=5, index=3)
    other_index = generate_panel(two_factor_spec, seed=5, index=4)
    other_seed = generate_panel(two_factor_spec, seed=6, index=3)

    # then
    assert first.data.shape == (12, 31)
    np.testing.assert_array_equal(first.data, again.data)
    assert not np.array_equal(first.data, other_index.data)
    assert not np.array_equal(first.data, other_seed.data)


def test_canonical_loadings_put_factors_in_leading_series(two_factor_spec):
    # when
    panel = generate_panel(two_factor_spec, seed=1, noise=zero_noise)

    # then
    assert np.all(panel.data[2:] == 0.0)
    assert np.all(panel.data[:2] != 0.0)


def test_random_loadings_span_k_dimensions():
    # given
    spec = ScenarioSpec(
        theta=(0.6, -0.5), gamma_diag=(4.0, 2.0), delta=(1.0, 1.0), p=12, T=30, random_loadings=True
    )

    # when
    panel = generate_panel(spec, seed=1, noise=zero_noise)

    # then
    assert np.linalg.matrix_rank(panel.data) == 2
    assert np.count_nonzero(panel.data[2:]) > 0


def test_haar_loadings_are_orthonormal():
    # when
    loadings = haar_loadings(np.random.default_rng(4), 50, 5)

    # then
    assert loadings.shape == (50, 5)
    np.testing.assert_allclose(loadings.T @ loadings, np.eye(5), atol=1e-12)


def test_simulated_factor_matches_stationary_moments():
    # given
    spec = ScenarioSpec(theta=(0.6,), gamma_diag=(4.0,), delta=(1.0,), p=1, T=200_000)

    # when
    path = simulate_factors(spec, np.random.default_rng(8))[0]

    # then
    assert path.var() == pytest.approx(6.25, rel=0.05)
    assert np.corrcoef(path[1:], path[:-1])[0, 1] == pytest.approx(0.6, abs=0.02)


def test_noise_variance_is_applied():
    # given
    spec = ScenarioSpec(theta=(), gamma_diag=(), delta=(), p=50, T=999, sigma2=3.0)

    # when
    panel = generate_panel(spec, seed=2)

    # then
    assert panel.data.var() == pytest.approx(3.0, rel=0.05)


def test_pure_noise_top_eigenvalue_sits_near_support_edge():
    # given
    spec = ScenarioSpec(theta=(), gamma_diag=(), delta=(), p=200, T=400)
    _, b = lsd_edges(0.5)

    # when
    spectrum = mhat_spectrum(generate_panel(spec, seed=3))

    # then
    assert spectrum.eigenvalues[0] == pytest.approx(b, rel=0.15)
