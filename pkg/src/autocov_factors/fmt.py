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
import functools
import sys
from typing import (
    Callable,
    TypeVar,
)

from autocov_factors.exceptions import (
    AutocovFactorsError,
    InputOutputError,
)

__all__ = (
    "EXIT_OK",
    "EXIT_FAILURE",
    "EXIT_USAGE",
    "print_err",
    "exit_codes",
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

F = TypeVar("F", bound=Callable[..., int])


def print_err(*args: object) -> None:
    print(*args, file=sys.stderr)


def _report(error: Exception) -> None:
    if sys.stderr.isatty():
        print_err(f"\n\033[91m{error}\033[0m\n")
    else:
        print_err(f"\nERROR: {error}")


def exit_codes(func: F) -> F:
    """Map exceptions escaping a CLI handler to exit codes: 2 for unusable paths, 1 for computation errors."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):  # type: ignore[no-untyped-def]
        try:
            return func(*args, **kwargs)
        except InputOutputError as e:
            _report(e)
            return EXIT_USAGE
        except (AutocovFactorsError, ValueError) as e:
            _report(e)
            return EXIT_FAILURE

    return wrapper  # type: ignore[return-value]
