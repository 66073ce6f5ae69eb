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
from concurrent.futures import Executor
from typing import Generator

import pytest

from autocov_factors.internal.concurrency import create_thread_pool_executor
from autocov_factors.internal.estimation.calibration import CalibrationCache


@pytest.fixture(scope="session")
def executor() -> Generator[Executor, None, None]:
    with create_thread_pool_executor() as executor:
        yield executor


@pytest.fixture(scope="session")
def calibration_cache() -> CalibrationCache:
    return CalibrationCache()
