"""Series arithmetic: windowed sums, yearly partition, dense alignment."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from attentionflow import (
    AttentionSeries,
    EventRecord,
    NodeRecord,
    ObservationWindow,
    align_daily,
    canonical_json,
    day,
    day_text,
    window_sum,
    year_partition,
)

from conftest import make_series, window
from oracles import exact_window_sum, naive_year_partition


def test_day_roundtrip():
    assert day_text(day("2020-02-29")) == "2020-02-29"
    assert day("2020-01-03") - day("2020-01-01") == 2
    with pytest.raises(ValueError):
        day("2020-13-01")


def test_series_validation():
    with pytest.raises(ValueError):
        make_series("2020-01-01", [])
    with pytest.raises(ValueError):
        make_series("2020-01-01", [1.0, -0.5])
    with pytest.raises(ValueError):
        AttentionSeries.constant(day("2020-01-01"), -1.0, 5)
    with pytest.raises(ValueError):
        AttentionSeries.constant(day("2020-01-01"), 1.0, 0)


def test_series_support_lookup():
    s = make_series("2020-01-01", [1, 2, 3])
    assert s.end == day("2020-01-03")
    assert s.value_on(day("2020-01-02")) == 2.0
    assert s.value_on(day("2019-12-31")) == 0.0
    assert s.value_on(day("2020-01-04")) == 0.0
    assert len(s) == 3


def test_series_values_are_frozen():
    s = make_series("2020-01-01", [1, 2, 3])
    with pytest.raises(ValueError):
        s.values[0] = 9.0


def test_constant_series_is_compact():
    s = AttentionSeries.constant(day("2020-01-01"), 4.0, 10_000)
    assert s.is_constant
    assert s.values.strides == (0,)
    assert s.value_on(day("2020-05-05")) == 4.0


def test_window_validation():
    with pytest.raises(ValueError):
        window("2020-01-02", "2020-01-01")
    w = window("2020-01-01", "2020-01-03")
    assert w.n_days == 3
    assert day("2020-01-02") in w
    assert day("2020-01-04") not in w


def test_node_created_must_match_series_start():
    s = make_series("2020-01-01", [1])
    with pytest.raises(ValueError):
        NodeRecord("x", "X", day("2020-01-02"), (), s, {})


def test_event_label_required():
    with pytest.raises(ValueError):
        EventRecord("x", day("2020-01-01"), "")


def test_window_sum_full_support():
    s = make_series("2020-01-01", [1, 2, 3])
    assert window_sum(s, window("2020-01-01", "2020-01-03")) == 6.0


def test_window_sum_disjoint_window():
    s = make_series("2020-01-01", [1, 2, 3])
    assert window_sum(s, window("2019-01-01", "2019-12-31")) == 0.0


def test_window_sum_partial_overlap():
    s = make_series("2020-01-01", [1, 2, 3])
    assert window_sum(s, window("2020-01-02", "2020-06-01")) == 5.0


def test_window_sum_constant_fast_path_matches_exact():
    s = AttentionSeries.constant(day("2020-01-01"), 0.1, 365)
    w = window("2019-12-01", "2020-03-01")
    assert window_sum(s, w) == exact_window_sum(s, w)


def test_align_daily_pads_with_zeros():
    s = make_series("2020-01-02", [5])
    assert align_daily(s, window("2020-01-01", "2020-01-03")).tolist() == [0, 5, 0]


def test_align_daily_single_day():
    s = make_series("2020-01-01", [1, 7, 3])
    assert align_daily(s, window("2020-01-02", "2020-01-02")).tolist() == [7.0]


def test_align_daily_right_padding():
    d = "2020-03-01"
    s = make_series(d, [1, 1, 1])
    w = ObservationWindow(day(d), day(d) + 4)
    assert align_daily(s, w).tolist() == [1, 1, 1, 0, 0]


def test_year_partition_eight_years():
    # lifetime spanning 2010-06 .. 2017-03 covers eight calendar years
    length = day("2017-03-15") - day("2010-06-01") + 1
    s = AttentionSeries.constant(day("2010-06-01"), 1.0, length)
    parts = year_partition(s)
    assert [y for y, _ in parts] == list(range(2010, 2018))
    assert len(parts) == 8


def test_year_partition_single_year():
    s = make_series("2016-03-01", [2, 2, 2])
    assert year_partition(s) == [(2016, 6.0)]


def test_year_partition_calendar_boundary():
    s = make_series("2015-12-30", [1.0, 1.0, 1.0, 1.0])
    assert year_partition(s) == [(2015, 2.0), (2016, 2.0)]


def test_year_partition_matches_oracle():
    s = make_series("2019-11-20", list(range(100)))
    assert year_partition(s) == naive_year_partition(s)


def test_canonical_json_is_stable():
    payload = {"b": 1.5, "a": [1, 2], "c": {"y": None, "x": "s"}}
    assert canonical_json(payload) == '{"a":[1,2],"b":1.5,"c":{"x":"s","y":null}}'
    with pytest.raises(ValueError):
        canonical_json({"v": float("nan")})


# -- properties ----------------------------------------------------------------

_series_strategy = st.builds(
    lambda start, values: AttentionSeries(
        day("2015-01-01") + start, np.asarray(values, dtype=np.float64)
    ),
    st.integers(min_value=-200, max_value=400),
    st.lists(
        st.floats(min_value=0, max_value=1e6, allow_nan=False), min_size=1, max_size=120
    ),
)

_window_strategy = st.builds(
    lambda a, b: ObservationWindow(day("2015-01-01") + min(a, b), day("2015-01-01") + max(a, b)),
    st.integers(min_value=-250, max_value=600),
    st.integers(min_value=-250, max_value=600),
)


@settings(max_examples=120)
@given(_series_strategy, _window_strategy)
def test_window_sum_equals_aligned_sum(s, w):
    assert math.isclose(
        window_sum(s, w), float(np.sum(align_daily(s, w))), rel_tol=1e-9, abs_tol=1e-12
    )


@settings(max_examples=120)
@given(_series_strategy)
def test_year_partition_totals_match_full_window(s):
    total = window_sum(s, ObservationWindow(s.start, s.end))
    assert math.isclose(
        math.fsum(v for _, v in year_partition(s)), total, rel_tol=1e-9, abs_tol=1e-12
    )


@settings(max_examples=120)
@given(_series_strategy, _window_strategy, st.integers(min_value=0, max_value=850))
def test_window_sum_is_additive_over_splits(s, w, cut_offset):
    if w.n_days < 2:
        return
    cut = w.start + cut_offset % (w.n_days - 1)
    left = ObservationWindow(w.start, cut)
    right = ObservationWindow(cut + 1, w.end)
    assert math.isclose(
        window_sum(s, w),
        window_sum(s, left) + window_sum(s, right),
        rel_tol=1e-9,
        abs_tol=1e-12,
    )


@settings(max_examples=80)
@given(_series_strategy, _window_strategy)
def test_window_sum_matches_exact_oracle_bitwise(s, w):
    assert window_sum(s, w) == exact_window_sum(s, w)
