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
"""Synthetic panels y_t = A x_t + eps_t driven by independent stationary AR(1) factors."""

from typing import (
    Callable,
    Optional,
)

import numpy as np
from scipy import (
    linalg,
    signal,
)

from ...types import (
    Panel,
    ScenarioSpec,
)
from ..concurrency import (
    REPLICATION_STREAM,
    spawn_generator,
)
from ..validation import validate_seed

__all__ = (
    "NoiseGenerator",
    "gaussian_noise",
    "haar_loadings",
    "simulate_factors",
    "generate_panel",
)

# (rng, (p, n_obs), sigma2) -> p x n_obs noise matrix
NoiseGenerator = Callable[[np.random.Generator, tuple[int, int], float], np.ndarray]


def gaussian_noise(rng: np.random.Generator, shape: tuple[int, int], sigma2: float) -> np.ndarray:
    return rng.standard_normal(shape) * np.sqrt(sigma2)


def haar_loadings(rng: np.random.Generator, p: int, k: int) -> np.ndarray:
    """A p x k matrix with orthonormal columns, uniformly distributed."""
    q, r = linalg.qr(rng.standard_normal((p, k)), mode="economic")
    return q * np.sign(np.diag(r))


def simulate_factors(spec: ScenarioSpec, rng: np.random.Generator) -> np.ndarray:
    """k x (T + 1) factor paths started from their exact stationary law."""
    n_obs = spec.T + 1
    factors = np.empty((spec.k, n_obs))
    variances = spec.innovation_variances
    for i, (theta, variance) in enumerate(zip(spec.theta, variances)):
        start = rng.standard_normal() * np.sqrt(variance / (1.0 - theta * theta))
        innovations = rng.standard_normal(n_obs - 1) * np.sqrt(variance)
        factors[i, 0] = start
        factors[i, 1:], _ = signal.lfilter([1.0], [1.0, -theta], innovations, zi=[theta * start])
    return factors


def generate_panel(
    spec: ScenarioSpec,
    seed: int,
    *,
    index: int = 0,
    noise: Optional[NoiseGenerator] = None,
) -> Panel:
    """Draw one panel; the same (spec, seed, index) always yields the same data."""
    rng = spawn_generator(validate_seed(seed), REPLICATION_STREAM, index)
    factors = simulate_factors(spec, rng)
    loadings = haar_loadings(rng, spec.p, spec.k) if spec.random_loadings and spec.k else None
    data = (noise or gaussian_noise)(rng, (spec.p, spec.T + 1), spec.sigma2)
    if loadings is not None:
        data += loadings @ factors
    else:
        data[: spec.k] += factors
    return Panel(data)
