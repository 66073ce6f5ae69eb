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
"""Lag-1 sample autocovariance of a panel and the singular-value spectrum of M-hat = Sigma-hat Sigma-hat'."""

import numpy as np

from ...types import (
    Panel,
    Spectrum,
    eigenvalue_ratios,
)

__all__ = (
    "lag1_autocov",
    "mhat_spectrum",
    "left_singular_vectors",
    "spectral_decomposition",
)


def lag1_autocov(panel: Panel) -> np.ndarray:
    """Sigma-hat = (1 / T) * sum over t = 2..T+1 of y_t y_{t-1}'."""
    data = panel.data
    return data[:, 1:] @ data[:, :-1].T / panel.T


def spectral_decomposition(panel: Panel) -> tuple[np.ndarray, np.ndarray]:
    """Left singular vectors of Sigma-hat and the eigenvalues l_i = s_i^2 of M-hat, min(p, T) of them."""
    left, singular, _ = np.linalg.svd(lag1_autocov(panel), full_matrices=False)
    rank_bound = min(panel.p, panel.T)
    return left[:, :rank_bound], singular[:rank_bound] ** 2


def mhat_spectrum(panel: Panel) -> Spectrum:
    rank_bound = min(panel.p, panel.T)
    singular = np.linalg.svd(lag1_autocov(panel), compute_uv=False)[:rank_bound]
    eigenvalues = singular**2
    return Spectrum(eigenvalues=eigenvalues, ratios=eigenvalue_ratios(eigenvalues))


def left_singular_vectors(panel: Panel, count: int) -> np.ndarray:
    """The p x count matrix of eigenvectors of M-hat for its top `count` eigenvalues."""
    left, _ = spectral_decomposition(panel)
    return left[:, :count]
