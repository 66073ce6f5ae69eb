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
import os
from typing import (
    Callable,
    Generic,
    TypeVar,
)

__all__ = (
    "AUTOCOV_FACTORS_CALIBRATION_LEVEL",
    "AUTOCOV_FACTORS_CALIBRATION_REPS",
    "AUTOCOV_FACTORS_ENABLE_COLORS",
    "AUTOCOV_FACTORS_LOGGER_LEVEL",
    "AUTOCOV_FACTORS_MAX_WORKERS",
    "AUTOCOV_FACTORS_SHOW_PROGRESS",
)

T = TypeVar("T")


class EnvVariable(Generic[T]):
    _UNSET: T = object()  # type: ignore

    def __init__(self, name: str, value_mapper: Callable[[str], T], default_value: T = _UNSET):
        self.name = name
        self._value_mapper = value_mapper
        self._default_value = default_value

    def get(self) -> T:
        value = os.getenv(self.name)
        if value is None:
            if self._default_value is self._UNSET:
                raise ValueError(f"Environment variable {self.name} is not set")
            return self._default_value
        return self._map_value(value)

    def _map_value(self, value: str) -> T:
        try:
            return self._value_mapper(value)
        except ValueError as e:
            raise ValueError(f"Environment variable {self.name} has an invalid value {value!r}: {e}") from e


def _map_bool(value: str) -> bool:
    return value.lower() in {"true", "1"}


def _map_positive_int(value: str) -> int:
    number = int(value.strip())
    if number <= 0:
        raise ValueError("must be a positive integer")
    return number


def _map_open_unit_interval(value: str) -> float:
    number = float(value.strip())
    if not 0.0 < number < 1.0:
        raise ValueError("must lie strictly between 0 and 1")
    return number


def _map_logging_level(value: str) -> str:
    valid_levels = {"CRITICAL", "FATAL", "ERROR", "WARN", "WARNING", "INFO", "DEBUG", "NOTSET"}
    level = value.strip().upper()
    if level not in valid_levels:
        return "WARN"
    return level


AUTOCOV_FACTORS_CALIBRATION_LEVEL = EnvVariable[float](
    "AUTOCOV_FACTORS_CALIBRATION_LEVEL", _map_open_unit_interval, 0.005
)
AUTOCOV_FACTORS_CALIBRATION_REPS = EnvVariable[int]("AUTOCOV_FACTORS_CALIBRATION_REPS", _map_positive_int, 2000)
AUTOCOV_FACTORS_ENABLE_COLORS = EnvVariable[bool]("AUTOCOV_FACTORS_ENABLE_COLORS", _map_bool, True)
AUTOCOV_FACTORS_LOGGER_LEVEL = EnvVariable[str]("AUTOCOV_FACTORS_LOGGER_LEVEL", _map_logging_level, "WARN")
AUTOCOV_FACTORS_MAX_WORKERS = EnvVariable[int]("AUTOCOV_FACTORS_MAX_WORKERS", _map_positive_int, 8)
AUTOCOV_FACTORS_SHOW_PROGRESS = EnvVariable[bool]("AUTOCOV_FACTORS_SHOW_PROGRESS", _map_bool, False)
