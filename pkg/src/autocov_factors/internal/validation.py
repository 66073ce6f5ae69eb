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
import os
import pathlib
from typing import (
    Collection,
    Optional,
)

import numpy as np

from ..exceptions import (
    DomainError,
    InputOutputError,
)

SEED_UPPER_BOUND = 2**64


def validate_aspect_ratio(y: float) -> float:
    """Validate the limiting ratio y = p / T and return it as a float."""
    if isinstance(y, bool) or not isinstance(y, (int, float, np.floating, np.integer)):
        raise ValueError(f"y must be a number, got {type(y).__name__}")
    value = float(y)
    if not math.isfinite(value) or value <= 0:
        raise DomainError("the limiting spectral law", "a finite aspect ratio y > 0", y)
    return value


def validate_positive_int(value: int, name: str, minimum: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ValueError(f"{name} must be an integer")
    if value < minimum:
        raise ValueError(f"{name} must be at least {minimum}. Got: {value}")
    return int(value)


def validate_open_interval(value: float, name: str, low: float, high: float) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float, np.floating, np.integer)):
        raise ValueError(f"{name} must be a number")
    number = float(value)
    if not low < number < high:
        raise ValueError(f"{name} must lie in ({low}, {high}). Got: {value}")
    return number


def validate_seed(seed: int) -> int:
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise ValueError("seed must be an integer")
    if not 0 <= seed < SEED_UPPER_BOUND:
        raise ValueError(f"seed must be a 64-bit unsigned integer. Got: {seed}")
    return int(seed)


def validate_allowed_value(value: str, allowed_values: Collection[str], name: str) -> str:
    if not isinstance(value, str) or value not in allowed_values:
        raise ValueError(f"{name} '{value}' is invalid; must be one of: {sorted(allowed_values)}")
    return value


def ensure_readable_file(path: pathlib.Path) -> pathlib.Path:
    if not path.exists():
        raise InputOutputError(str(path), "no such file")
    if not path.is_file():
        raise InputOutputError(str(path), "not a regular file")
    if not os.access(path, os.R_OK):
        raise InputOutputError(str(path), "no read access")
    return path


def ensure_writable_destination(path: Optional[pathlib.Path]) -> Optional[pathlib.Path]:
    """Check that an output file can be created before any computation starts. None means stdout."""
    if path is None:
        return None
    parent = path.parent if str(path.parent) else pathlib.Path(".")
    if not parent.exists():
        try:
            parent.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise InputOutputError(str(parent), f"cannot create directory ({e.strerror})") from e
    if not parent.is_dir():
        raise InputOutputError(str(parent), "not a directory")
    if path.exists() and path.is_dir():
        raise InputOutputError(str(path), "is a directory")
    if not os.access(parent, os.W_OK) or (path.exists() and not os.access(path, os.W_OK)):
        raise InputOutputError(str(path), "no write access")
    return path
