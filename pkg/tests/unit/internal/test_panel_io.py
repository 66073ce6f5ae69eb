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
import numpy as np
import pandas as pd
import pytest

from autocov_factors.exceptions import (
    InputOutputError,
    InsufficientDataError,
    PanelFormatError,
)
from autocov_factors.internal.panel_io import (
    panel_from_frame,
    read_panel_csv,
    write_panel_csv,
)
from autocov_factors.types import Panel


def test_read_panel_csv_with_header(tmp_path):
    # given
    path = tmp_path / "panel.csv"
    path.write_text("a,b\n1,10\n2,20\n3,30\n4,40\n")

    # when
    panel = read_panel_csv(path)

    # then
    assert (panel.p, panel.n_obs) == (2, 4)
    np.testing.assert_array_equal(panel.data, [[1, 2, 3, 4], [10, 20, 30, 40]])


def test_read_panel_csv_without_header_transposed_and_demeaned(tmp_path):
    # given
    path = tmp_path / "panel.csv"
    path.write_text("1,2,3,6\n10,20,30,60\n")

    # when
    panel = read_panel_csv(path, transpose=True, demean=True)

    # then
    assert (panel.p, panel.n_obs) == (2, 4)
    np.testing.assert_allclose(panel.data[0], [-2, -1, 0, 3])
    np.testing.assert_allclose(panel.data.mean(axis=1), 0.0, atol=1e-12)


def test_write_then_read_preserves_values(tmp_path):
    # given
    panel = Panel(np.random.default_rng(0).standard_normal((3, 7)))
    path = tmp_path / "panel.csv"

    # when
    write_panel_csv(panel, path)
    restored = read_panel_csv(path)

    # then
    assert pd.read_csv(path).columns.tolist() == ["series_1", "series_2", "series_3"]
    np.testing.assert_allclose(restored.data, panel.data, rtol=1e-15, atol=0)


@pytest.mark.parametrize(
    "content, match",
    [
        ("", "empty"),
        ("a,b\n", "no data rows"),
        ("1,2\n3,\n4,5\n", "row 2, column 2"),
        ("1,2\n3,x\n4,5\n", "'x'"),
        ("1,2\n3,nan\n4,5\n", "row 2, column 2"),
        ("1,2\n3,4,5\n6,7\n", "different numbers of fields"),
    ],
)
def test_read_panel_csv_rejects_malformed_files(tmp_path, content, match):
    # given
    path = tmp_path / "panel.csv"
    path.write_text(content)

    # then
    with pytest.raises(PanelFormatError, match=match):
        read_panel_csv(path)


def test_read_panel_csv_needs_three_time_points(tmp_path):
    # given
    path = tmp_path / "panel.csv"
    path.write_text("1,2\n3,4\n")

    # then
    with pytest.raises(InsufficientDataError):
        read_panel_csv(path)


def test_read_panel_csv_missing_file(tmp_path):
    with pytest.raises(InputOutputError):
        read_panel_csv(tmp_path / "missing.csv")


def test_panel_from_frame_names_source():
    # given
    frame = pd.DataFrame([["1", "2"], ["3", "?"], ["5", "6"]])

    # then
    with pytest.raises(PanelFormatError, match="read from prices.csv"):
        panel_from_frame(frame, source="prices.csv")
