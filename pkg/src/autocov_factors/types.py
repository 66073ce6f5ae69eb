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
import math
from dataclasses import (
    dataclass,
    field,
)
from typing import (
    NewType,
    Optional,
    Sequence,
)

import numpy as np

from autocov_factors.exceptions import (
    DomainError,
    InsufficientDataError,
    PanelFormatError,
)

AspectRatio = NewType("AspectRatio", float)  # limit of p / T

# Slack for ratios that exceed 1 by rounding in the singular value decomposition
RATIO_SLACK = 1e-12


@dataclass(frozen=True)
class SpectralLaw:
    """Limiting spectral law of the noise product matrix for a given aspect ratio."""

    y: float
    a: float
    b: float
    t_b_plus: float


@dataclass(frozen=True)
class TransformPoint:
    z: float
    m: float
    t: float


@dataclass(frozen=True)
class FactorParams:
    """Population parameters of one factor: variance, lag-1 autocovariance and the noise variance."""

    gamma0: float
    gamma1: float
    sigma2: float = 1.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.gamma0) or self.gamma0 <= 0:
            raise DomainError("the factor strength gamma0", "a finite gamma0 > 0", self.gamma0)
        if not math.isfinite(self.sigma2) or self.sigma2 <= 0:
            raise DomainError("the noise variance sigma2", "a finite sigma2 > 0", self.sigma2)
        if not math.isfinite(self.gamma1) or abs(self.gamma1) > self.gamma0 * (1 + RATIO_SLACK):
            raise DomainError("the lag-1 autocovariance gamma1", "|gamma1| <= gamma0", self.gamma1)

    @property
    def snr(self) -> tuple[float, float]:
        """(gamma0 / sigma2, gamma1 / sigma2): the coordinates of the factor in the detectability plane."""
        return self.gamma0 / self.sigma2, self.gamma1 / self.sigma2


@dataclass(frozen=True)
class TransitionResult:
    y: float
    t1: float
    significant: bool
    lambda_: float  # limit of l_i / sigma^4

    def raw_lambda(self, sigma2: float) -> float:
        """The spike limit in eigenvalue units of M-hat."""
        return self.lambda_ * sigma2**2


@dataclass(frozen=True)
class RegionBounds:
    tau0: float
    tau1: float


@dataclass(frozen=True, eq=False)
class Panel:
    """A p x (T + 1) panel; column t holds the observation y_t of all p series."""

    data: np.ndarray

    def __post_init__(self) -> None:
        data = np.asarray(self.data, dtype=np.float64)
        if data.ndim != 2:
            raise PanelFormatError(f"Expected a two-dimensional array, got {data.ndim} dimension(s).")
        if data.shape[0] < 1:
            raise PanelFormatError("The panel has no series.")
        if data.shape[1] < 3:
            raise InsufficientDataError(data.shape[1])
        if not np.all(np.isfinite(data)):
            bad = int(np.count_nonzero(~np.isfinite(data)))
            raise PanelFormatError(f"Found {bad} non-finite entries.")
        object.__setattr__(self, "data", data)

    @classmethod
    def from_time_major(cls, observations: np.ndarray) -> "Panel":
        """Build a panel from a (T + 1) x p array whose rows are time points."""
        return cls(np.asarray(observations, dtype=np.float64).T)

    @property
    def p(self) -> int:
        return int(self.data.shape[0])

    @property
    def n_obs(self) -> int:
        return int(self.data.shape[1])

    @property
    def T(self) -> int:
        return self.n_obs - 1

    def demeaned(self) -> "Panel":
        return Panel(self.data - self.data.mean(axis=1, keepdims=True))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Descending eigenvalues l_1 >= l_2 >= ... of M-hat and the ratios theta_j = l_{j+1} / l_j."""

    eigenvalues: np.ndarray
    ratios: np.ndarray

    @classmethod
    def from_eigenvalues(cls, eigenvalues: Sequence[float]) -> "Spectrum":
        values = np.asarray(eigenvalues, dtype=np.float64)
        if values.ndim != 1 or values.size == 0:
            raise ValueError("eigenvalues must be a non-empty one-dimensional sequence")
        if np.any(values < 0) or np.any(np.diff(values) > RATIO_SLACK * max(values[0], 1.0)):
            raise ValueError("eigenvalues must be nonnegative and sorted in descending order")
        return cls(eigenvalues=values, ratios=eigenvalue_ratios(values))

    def __len__(self) -> int:
        return int(self.eigenvalues.size)


def eigenvalue_ratios(eigenvalues: np.ndarray) -> np.ndarray:
    """theta_j = l_{j+1} / l_j, with 0 / 0 reported as 1 and rounding excess clipped to 1."""
    upper = eigenvalues[:-1]
    lower = eigenvalues[1:]
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = np.where(upper > 0, lower / np.where(upper > 0, upper, 1.0), 1.0)
    return np.minimum(ratios, 1.0)


@dataclass(frozen=True)
class EstimatorConfig:
    d_T: float
    search_cap: Optional[int] = None  # None scans every available ratio
    require_two: bool = False

    def __post_init__(self) -> None:
        if not 0.0 < self.d_T < 1.0:
            raise ValueError(f"d_T must lie in (0, 1). Got: {self.d_T}")
        if self.search_cap is not None and self.search_cap < 1:
            raise ValueError(f"search_cap must be at least 1. Got: {self.search_cap}")


@dataclass(frozen=True)
class ThresholdEstimate:
    k: int
    saturated: bool


@dataclass(frozen=True)
class MultistepRecord:
    step: int
    r_hat: int
    cumulative_k: int
    top_eigenvalues: tuple[float, ...] = ()


@dataclass(frozen=True)
class CalibrationReport:
    p: int
    T: int
    reps: int
    quantile_level: float
    q: float
    d_T: float
    seed: int
    quantile_method: str = "linear"


@dataclass(frozen=True)
class ScenarioSpec:
    """AR(1) factor design: x_t = Theta x_{t-1} + e_t with diagonal Theta and Gamma, y_t = A x_t + eps_t."""

    theta: tuple[float, ...]
    gamma_diag: tuple[float, ...]
    delta: tuple[float, ...]
    p: int
    T: int
    sigma2: float = 1.0
    name: Optional[str] = None
    random_loadings: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta", tuple(float(v) for v in self.theta))
        object.__setattr__(self, "gamma_diag", tuple(float(v) for v in self.gamma_diag))
        object.__setattr__(self, "delta", tuple(float(v) for v in self.delta))
        if not len(self.theta) == len(self.gamma_diag) == len(self.delta):
            raise ValueError("theta, gamma_diag and delta must have the same length")
        if any(not abs(value) < 1 for value in self.theta):
            raise ValueError(f"every AR(1) coefficient must lie in (-1, 1). Got: {self.theta}")
        if any(not value > 0 for value in self.gamma_diag):
            raise ValueError(f"innovation variances must be positive. Got: {self.gamma_diag}")
        if any(not 0 <= value <= 1 for value in self.delta):
            raise ValueError(f"strength exponents must lie in [0, 1]. Got: {self.delta}")
        if not self.sigma2 > 0:
            raise ValueError(f"sigma2 must be positive. Got: {self.sigma2}")
        if self.p < max(self.k, 1):
            raise ValueError(f"p must be at least the number of factors ({self.k}). Got: {self.p}")
        if self.T < 2:
            raise ValueError(f"T must be at least 2. Got: {self.T}")

    @property
    def k(self) -> int:
        return len(self.theta)

    @property
    def y(self) -> float:
        return self.p / self.T

    @property
    def innovation_variances(self) -> np.ndarray:
        """gamma_diag_i * p^((1 - delta_i) / 2): the diagonal of Gamma after strength scaling."""
        return np.asarray(self.gamma_diag) * float(self.p) ** ((1.0 - np.asarray(self.delta)) / 2.0)


@dataclass(frozen=True)
class MCResult:
    scenario: ScenarioSpec
    reps: int
    method: str
    k0: int
    d_T: Optional[float]
    seed: int
    estimates: tuple[int, ...] = field(repr=False)

    @property
    def histogram(self) -> dict[int, float]:
        values, counts = np.unique(np.asarray(self.estimates, dtype=int), return_counts=True)
        return {int(v): float(c) / self.reps for v, c in zip(values, counts)}

    @property
    def frequencies(self) -> dict[str, float]:
        """Decisions relative to k0, an exhaustive partition of the replications."""
        estimates = np.asarray(self.estimates, dtype=int)
        masks = {
            "<=k0-2": estimates <= self.k0 - 2,
            "=k0-1": estimates == self.k0 - 1,
            "=k0": estimates == self.k0,
            "=k0+1": estimates == self.k0 + 1,
            ">=k0+2": estimates >= self.k0 + 2,
        }
        return {label: float(np.count_nonzero(mask)) / self.reps for label, mask in masks.items()}
