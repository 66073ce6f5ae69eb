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
"""Limiting spectral law of the lag-1 noise product matrix: edges, Stieltjes transform, T-transform and density.

All functions are pure and take the aspect ratio y = lim p / T as their last argument.
The law computed here is the companion law F of the T x T matrix; the law F* of the p x p
matrix follows from y * F* - F = (y - 1) * delta_0 (see `noise_law_density`).
"""

import math
from typing import (
    Iterable,
    Union,
)

import numpy as np
import pandas as pd
from scipy import optimize

from ...exceptions import DomainError
from ...types import SpectralLaw
from ..validation import validate_aspect_ratio

__all__ = (
    "lsd_edges",
    "z_of_t",
    "t_at_b_plus",
    "stieltjes_m",
    "t_transform",
    "lsd_density",
    "spectral_law",
    "companion_atom_mass",
    "noise_law_density",
    "t_at_b_plus_curve",
)

# Imaginary offset of the density evaluation; halved and doubled for Richardson extrapolation
DENSITY_EPSILON = 1e-9
CONTINUATION_STEPS = 400


def lsd_edges(y: float) -> tuple[float, float]:
    y = validate_aspect_ratio(y)
    root = (1.0 + 8.0 * y) ** 1.5
    polynomial = -1.0 + 20.0 * y + 8.0 * y * y
    b = (polynomial + root) / 8.0
    a = max((polynomial - root) / 8.0, 0.0) if y >= 1.0 else 0.0
    return a, b


def z_of_t(t: float, y: float) -> float:
    """Functional inverse of the T-transform on (0, T(b+)): (t + 1)(t + y)^2 / t."""
    y = validate_aspect_ratio(y)
    if not math.isfinite(t) or t <= 0:
        raise DomainError("the inverse T-transform", "t > 0", t)
    return (t + 1.0) * (t + y) ** 2 / t


def t_at_b_plus(y: float) -> float:
    """T(b+), the minimizer of z_of_t over t > 0.

    dz/dt = (t + y)(2t^2 + t - y) / t^2, so the minimizer is the positive root of 2t^2 + t - y.
    The root is written in the cancellation-free form 2y / (1 + sqrt(1 + 8y)).
    """
    y = validate_aspect_ratio(y)
    return 2.0 * y / (1.0 + math.sqrt(1.0 + 8.0 * y))


def spectral_law(y: float) -> SpectralLaw:
    a, b = lsd_edges(y)
    return SpectralLaw(y=float(y), a=a, b=b, t_b_plus=t_at_b_plus(y))


def companion_atom_mass(y: float) -> float:
    """Mass of the atom of F at zero; the continuous part carries min(1, y)."""
    y = validate_aspect_ratio(y)
    return max(0.0, 1.0 - y)


def _cubic_coefficients(z: complex, y: float) -> np.ndarray:
    # z^2 m^3 - 2z(y - 1) m^2 + ((y - 1)^2 - z) m - 1 = 0
    return np.array([z * z, -2.0 * z * (y - 1.0), (y - 1.0) ** 2 - z, -1.0])


def _cubic_roots(z: complex, y: float) -> np.ndarray:
    return np.roots(_cubic_coefficients(z, y))


def _polish(m: complex, z: complex, y: float) -> complex:
    coefficients = _cubic_coefficients(z, y)
    derivative = np.polyder(coefficients)
    for _ in range(2):
        slope = np.polyval(derivative, m)
        if slope == 0:
            break
        m = m - np.polyval(coefficients, m) / slope
    return m


def _real_branch(z: float, y: float) -> float:
    """Real z > b: the largest negative real root, which maps to the T-branch in (0, T(b+))."""
    roots = _cubic_roots(z, y)
    scale = max(1.0, float(np.max(np.abs(roots))))
    real_roots = roots.real[np.abs(roots.imag) <= 1e-7 * scale]
    negative = real_roots[real_roots < 0]
    if negative.size == 0:
        # roots coalescing at the edge can leave a tiny imaginary part on the branch
        negative = roots.real[roots.real < 0]
    return float(np.real(_polish(complex(np.max(negative)), z, y)))


def _continue_from_infinity(z: complex, y: float) -> complex:
    """Track the root that behaves like -1/z along a vertical path from high above z down to z (Im z >= 0)."""
    _, b = lsd_edges(y)
    height = 100.0 * (abs(z) + b + 1.0)
    floor = max(z.imag, height * 1e-14)
    current = -1.0 / complex(z.real, height)
    for level in np.geomspace(height, floor, CONTINUATION_STEPS):
        roots = _cubic_roots(complex(z.real, level), y)
        current = roots[np.argmin(np.abs(roots - current))]
    roots = _cubic_roots(z, y)
    current = roots[np.argmin(np.abs(roots - current))]
    if z.imag > 0 and current.imag <= 0:
        current = roots[np.argmax(roots.imag)]
    return complex(current)


def stieltjes_m(z: Union[complex, float], y: float) -> complex:
    y = validate_aspect_ratio(y)
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("the Stieltjes transform", "a finite argument", z)
    a, b = lsd_edges(y)
    if z.imag == 0.0:
        if z.real > b:
            return complex(_real_branch(z.real, y))
        if a <= z.real <= b:
            raise DomainError("the Stieltjes transform", f"a real argument outside the support [{a:.6g}, {b:.6g}]", z)
        return complex(_continue_from_infinity(z, y).real)
    if z.imag < 0:
        return _continue_from_infinity(z.conjugate(), y).conjugate()
    return _continue_from_infinity(z, y)


def t_transform(z: float, y: float) -> float:
    """The unique t in (0, T(b+)) with z_of_t(t, y) = z, for real z > b."""
    y = validate_aspect_ratio(y)
    _, b = lsd_edges(y)
    if not math.isfinite(z) or z <= b:
        raise DomainError("the T-transform", f"a real argument z > b = {b:.6g}", z)
    t_star = t_at_b_plus(y)
    # z_of_t(t) > y^2 / t, so z_of_t(y^2 / z) > z; and y^2 / z < T(b+) whenever z > b
    lower = y * y / z
    return float(
        optimize.brentq(
            lambda t: (t + 1.0) * (t + y) ** 2 / t - z,
            lower,
            t_star,
            xtol=1e-15,
            rtol=4 * np.finfo(float).eps,
            maxiter=500,
        )
    )


def _continuous_imaginary_part(x: float, offset: float, y: float) -> float:
    """Im m(x + i offset) with the zero atom of F removed: m + max(0, 1 - y) / z."""
    z = complex(x, offset)
    upper = np.max(_cubic_roots(z, y).imag)
    return float(upper + (companion_atom_mass(y) / z).imag)


def lsd_density(x: float, y: float) -> float:
    """Density of the continuous part of F at x > 0 (the atom at zero is `companion_atom_mass`)."""
    y = validate_aspect_ratio(y)
    if not math.isfinite(x) or x <= 0:
        raise DomainError("the spectral density", "x > 0", x)
    a, b = lsd_edges(y)
    if x >= b or x <= a:
        return 0.0
    near = _continuous_imaginary_part(x, DENSITY_EPSILON, y)
    far = _continuous_imaginary_part(x, 2.0 * DENSITY_EPSILON, y)
    return max((2.0 * near - far) / math.pi, 0.0)


def noise_law_density(x: float, y: float) -> float:
    """Density of the continuous part of F*, the law of the p x p noise product matrix."""
    return lsd_density(x, y) / validate_aspect_ratio(y)


def t_at_b_plus_curve(ys: Iterable[float]) -> pd.DataFrame:
    rows = [spectral_law(y) for y in ys]
    return pd.DataFrame(
        {
            "y": [law.y for law in rows],
            "t_b_plus": [law.t_b_plus for law in rows],
            "a": [law.a for law in rows],
            "b": [law.b for law in rows],
        },
        columns=["y", "t_b_plus", "a", "b"],
    )
