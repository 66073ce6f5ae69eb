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
from datetime import timedelta

from hypothesis import (
    HealthCheck,
    settings,
)

# Drawing a panel and taking its SVD dominates every example, so generation is slow by construction
_SLOW_DATA = [HealthCheck.too_slow, HealthCheck.data_too_large]

settings.register_profile(
    "dev",
    max_examples=20,
    deadline=None,
    suppress_health_check=_SLOW_DATA,
)

settings.register_profile(
    "ci-quick",
    settings.get_profile("ci"),
    max_examples=100,
    deadline=timedelta(seconds=10),
    derandomize=True,
    suppress_health_check=_SLOW_DATA,
)

settings.register_profile(
    "ci-nightly",
    settings.get_profile("ci"),
    max_examples=1000,
    deadline=timedelta(seconds=30),
    derandomize=False,
    suppress_health_check=_SLOW_DATA,
)

settings.load_profile(os.getenv("AUTOCOV_FACTORS_HYPOTHESIS_PROFILE", "ci-quick"))
