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
from scipy.stats import ortho_group

from autocov_factors.exceptions import (
    InsufficientDataError,
    PanelFormatError,
)
from autocov_factors.internal.estimation.autocov import (
    lag1_autocov,
    left_singular_vectors,
    mhat_spectrum,
    spectral_decomposition,
)
from autocov_factors.types import Panel


@pytest.fixture
def random_panel():
    rng = np.random.default_rng(7)
    return Panel(rng.standard_normal((12, 41)))


def test_lag1_autocov_single_series():
    # given
    panel = Panel(np.array([[1.0, 2.0, 3.0]]))

    # when
    sigma = lag1_autocov(panel)
    spectrum = mhat_spectrum(panel)

    # then
    assert sigma.shape == (1, 1)
    assert sigma[0, 0] == pytest.approx((2.0 * 1.0 + 3.0 * 2.0) / 2)
    assert spectrum.eigenvalues.tolist() == pytest.approx([16.0])
    assert spectrum.ratios.size == 0


def test_lag1_autocov_matches_explicit_sum(random_panel):
    # given
    data = random_panel.data
    expected = np.zeros((random_panel.p, random_panel.p))
    for t in range(1, random_panel.n_obs):
        expected += np.outer(data[:, t], data[:, t - 1])
    expected /= random_panel.T

    # when
    sigma = lag1_autocov(random_panel)

    # then
    np.testing.assert_allclose(sigma, expected, rtol=1e-12, atol=1e-14)


def test_mhat_spectrum_equals_eigenvalues_of_product(random_panel):
    # given
    sigma = lag1_autocov(random_panel)
    expected = np.sort(np.linalg.eigvalsh(sigma @ sigma.T))[::-1]

    # when
    spectrum = mhat_spectrum(random_panel)

    # then
    np.testing.assert_allclose(spectrum.eigenvalues, expected, rtol=1e-9, atol=1e-12)
    assert np.all(np.diff(spectrum.eigenvalues) <= 0)
    assert np.all((spectrum.ratios >= 0) & (spectrum.ratios <= 1))


def test_mhat_spectrum_of_zero_panel():
    # given
    panel = Panel(np.zeros((4, 10)))

    # when
    spectrum = mhat_spectrum(panel)

    # then
    assert spectrum.eigenvalues.tolist() == [0.0, 0.0, 0.0, 0.0]
    assert spectrum.ratios.tolist() == [1.0, 1.0, 1.0]


def test_mhat_spectrum_keeps_min_p_t_eigenvalues():
    # given
    rng = np.random.default_rng(3)
    wide = Panel(rng.standard_normal((20, 9)))

    # when
    spectrum = mhat_spectrum(wide)

    # then
    assert len(spectrum) == wide.T == 8
    assert spectrum.ratios.size == 7


def test_mhat_spectrum_is_invariant_under_orthogonal_rotation(random_panel):
    # given
    rotation = ortho_group.rvs(random_panel.p, random_state=11)
    rotated = Panel(rotation @ random_panel.data)

    # when
    original = mhat_spectrum(random_panel)
    transformed = mhat_spectrum(rotated)

    # then
    np.testing.assert_allclose(transformed.eigenvalues, original.eigenvalues, rtol=1e-8)


@pytest.mark.parametrize("scale", [1e-3, 0.5, 7.0])
def test_mhat_spectrum_scales_with_fourth_power(random_panel, scale):
    # when
    original = mhat_spectrum(random_panel)
    scaled = mhat_spectrum(Panel(scale * random_panel.data))

    # then
    np.testing.assert_allclose(scaled.eigenvalues, scale**4 * original.eigenvalues, rtol=1e-8)
    np.testing.assert_allclose(scaled.ratios, original.ratios, atol=1e-12)


def test_left_singular_vectors_are_orthonormal_eigenvectors(random_panel):
    # given
    sigma = lag1_autocov(random_panel)
    _, eigenvalues = spectral_decomposition(random_panel)

    # when
    vectors = left_singular_vectors(random_panel, 3)

    # then
    assert vectors.shape == (random_panel.p, 3)
    np.testing.assert_allclose(vectors.T @ vectors, np.eye(3), atol=1e-10)
    mhat = sigma @ sigma.T
    for column in range(3):
        np.testing.assert_allclose(
            mhat @ vectors[:, column], eigenvalues[column] * vectors[:, column], rtol=1e-8, atol=1e-10
        )


def test_panel_rejects_too_few_observations():
    with pytest.raises(InsufficientDataError):
        Panel(np.ones((3, 2)))


@pytest.mark.parametrize(
    "data",
    [
        np.ones(5),
        np.ones((0, 5)),
        np.array([[1.0, np.nan, 2.0]]),
        np.array([[1.0, np.inf, 2.0]]),
    ],
)
def test_panel_rejects_malformed_data(data):
    with pytest.raises(PanelFormatError):
        Panel(data)


def test_panel_time_major_and_demeaned():
    # given
    observations = np.array([[1.0, 10.0], [2.0, 20.0], [3.0, 30.0], [6.0, 60.0]])

    # when
    panel = Panel.from_time_major(observations)
    centered = panel.demeaned()

    # then
    assert (panel.p, panel.n_obs, panel.T) == (2, 4, 3)
    np.testing.assert_allclose(centered.data.mean(axis=1), 0.0, atol=1e-14)
    np.testing.assert_allclose(centered.data[0], [-2.0, -1.0, 0.0, 3.0])
