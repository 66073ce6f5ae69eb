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

import platform
from typing import (
    Any,
    Dict,
    Optional,
)

from autocov_factors.internal import env

__all__ = (
    "AutocovFactorsError",
    "DomainError",
    "InsufficientDataError",
    "PanelFormatError",
    "NonStationaryError",
    "RankExhaustionError",
    "CalibrationFailureError",
    "InputOutputError",
)


class AutocovFactorsError(Exception):
    def __init__(self, message: str, **kwargs: Any) -> None:
        super().__init__(message.format(**kwargs, **_get_styles()))


class DomainError(AutocovFactorsError, ValueError):
    """An argument lies outside the set where the quantity is defined."""

    def __init__(self, quantity: str, constraint: str, value: Any) -> None:
        super().__init__(
            "{h1}DomainError: {quantity} is undefined for {value!r}.{end} Expected {constraint}.",
            quantity=quantity,
            constraint=constraint,
            value=value,
        )


class InsufficientDataError(AutocovFactorsError):
    def __init__(self, n_obs: int) -> None:
        super().__init__(
            """
{h1}InsufficientDataError: The panel has {n_obs} time points.{end}

The lag-1 autocovariance needs at least 3 observations (T = n_obs - 1 >= 2 lag-1 products).
""",
            n_obs=n_obs,
        )


class PanelFormatError(AutocovFactorsError):
    def __init__(self, reason: str, source: Optional[str] = None) -> None:
        super().__init__(
            """
{h1}PanelFormatError: The panel{source} cannot be used.{end}

{reason}

Panels must be rectangular and contain finite numbers only; missing values are not supported.
""",
            reason=reason,
            source=f" read from {source}" if source else "",
        )


class NonStationaryError(AutocovFactorsError):
    def __init__(self, theta: float) -> None:
        super().__init__(
            "{h1}NonStationaryError: AR(1) coefficient {theta} has no stationary law.{end} "
            "Expected |theta| < 1.",
            theta=theta,
        )


class RankExhaustionError(AutocovFactorsError):
    def __init__(self, step: int, removed: int, p: int) -> None:
        super().__init__(
            """
{h1}RankExhaustionError: Step {step} of the multi-step procedure has no directions left to scan.{end}

{removed} directions were already projected out of a panel with p={p} series.
Reduce the number of steps or the search cap.
""",
            step=step,
            removed=removed,
            p=p,
        )


class CalibrationFailureError(AutocovFactorsError):
    def __init__(self, p: int, t: int, q: float) -> None:
        super().__init__(
            """
{h1}CalibrationFailureError: The calibrated quantile for (p={p}, T={t}) is q={q:.6g}.{end}

The lower quantile of T^(2/3) * (nu_2 / nu_1 - 1) must be negative and smaller than T^(2/3) in absolute
value to define a threshold d_T in (0, 1). Increase the number of replications or the quantile level.
""",
            p=p,
            t=t,
            q=q,
        )


class InputOutputError(AutocovFactorsError):
    def __init__(self, path: str, reason: str) -> None:
        super().__init__(
            "{h1}InputOutputError: {path}: {reason}{end}",
            path=path,
            reason=reason,
        )


EMPTY_STYLES = {
    "h1": "",
    "h2": "",
    "python": "",
    "warning": "",
    "bold": "",
    "end": "",
}

UNIX_STYLES = {
    "h1": "\033[95m",
    "h2": "\033[94m",
    "python": "\033[96m",
    "warning": "\033[93m",
    "bold": "\033[1m",
    "end": "\033[0m",
}

_styles = UNIX_STYLES if platform.system() in ["Linux", "Darwin"] else EMPTY_STYLES


def _get_styles() -> Dict[str, str]:
    if env.AUTOCOV_FACTORS_ENABLE_COLORS.get():
        return _styles
    return EMPTY_STYLES
