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


class SaturatedEstimateWarning(UserWarning):
    """Warning for threshold estimates that found no ratio above 1 - d_T within the search cap."""


class NearCriticalWarning(UserWarning):
    """Warning for factors whose transition root lies within rounding distance of T(b+)."""
