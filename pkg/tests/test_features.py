# tests/test_features.py
import math

import numpy as np
import pytest

from config import FEATURE_COLUMNS
from dsp.peaks import detect_peaks
from errors import EmptySeriesError
from features.extraction import extract_features, peak_distances, project, project_rows
from models.adl_label import AdlLabel
from models.dataset_variant import DatasetVariant
from models.signal import PeakSet, ScalarSeries
from tests.helpers import random_rows


def _naive_stats(values):
    n = len(values)
    total = 0.0
    for v in values:
        total += v
    avg = total / n
    var = 0.0
    for v in values:
        var += (v - avg) ** 2
    var /= n
    ordered = sorted(values)
    mid = n // 2
    med = ordered[mid] if n % 2 else (ordered[mid - 1] + ordered[mid]) / 2.0
    return {"avg": avg, "std": math.sqrt(var), "var": var, "med": med,
            "max": max(values), "min": min(values)}


def _naive_features(values, peak_indices, sample_ms):
    gaps = sorted(((b - a) * sample_ms for a, b in zip(peak_indices, peak_indices[1:])), reverse=True)
    gaps = (gaps + [0.0] * 5)[:5]
    if peak_indices:
        pk = _naive_stats([values[i] for i in peak_indices])
    else:
        pk = dict.fromkeys(("avg", "std", "var", "med"), 0.0)
    raw = _naive_stats(list(values))
    return gaps + [pk["avg"], pk["std"], pk["var"], pk["med"],
                   raw["std"], raw["avg"], raw["max"], raw["min"], raw["var"], raw["med"]]


class TestExtractFeatures:
    def test_constant_series(self):
        fv = extract_features(ScalarSeries(100.0, np.full(50, 9.81)), PeakSet.empty(), AdlLabel.Standing)
        assert fv.values[:9].tolist() == [0.0] * 9
        assert fv.raw_std == 0.0 and fv.raw_var == 0.0
        assert fv.raw_avg == fv.raw_max == fv.raw_min == fv.raw_med == 9.81
        assert fv.label == AdlLabel.Standing

    def test_population_statistics(self):
        fv = extract_features(ScalarSeries(100.0, [1.0, 2.0, 3.0, 4.0]), PeakSet.empty(), AdlLabel.Walking)
        assert fv.raw_avg == 2.5
        assert fv.raw_med == 2.5
        assert fv.raw_var == pytest.approx(1.25, rel=1e-12)
        assert fv.raw_std == pytest.approx(math.sqrt(1.25), rel=1e-12)

    def test_evenly_spaced_peaks(self):
        values = np.zeros(500)
        indices = np.arange(25, 500, 50)
        values[indices] = 1.0
        fv = extract_features(ScalarSeries(100.0, values), PeakSet(indices, values[indices]), AdlLabel.Walking)
        assert [fv.d1, fv.d2, fv.d3, fv.d4, fv.d5] == [500.0] * 5
        assert fv.pk_std == 0.0
        assert fv.pk_avg == 1.0

    def test_distances_are_sorted_and_padded(self):
        peaks = PeakSet([0, 10, 40, 45], [1.0, 1.0, 1.0, 1.0])
        np.testing.assert_array_equal(peak_distances(peaks, 10.0), [300.0, 100.0, 50.0, 0.0, 0.0])

    def test_empty_series(self):
        with pytest.raises(EmptySeriesError):
            extract_features(ScalarSeries(100.0, []), PeakSet.empty(), AdlLabel.Running)

    def test_matches_naive_reference(self):
        rng = np.random.default_rng(21)
        for _ in range(1000):
            n = int(rng.integers(2, 200))
            x = rng.normal(9.81, rng.uniform(0.01, 5.0), size=n)
            series = ScalarSeries(100.0, x)
            peaks = detect_peaks(series, float(rng.uniform(0, 300)), 0.0)
            fv = extract_features(series, peaks, AdlLabel.Running)
            expected = _naive_features(x.tolist(), peaks.indices.tolist(), 10.0)
            np.testing.assert_allclose(fv.values, expected, rtol=1e-9, atol=1e-12)

            d = fv.values[:5]
            assert np.all(d[:-1] >= d[1:]) and d[-1] >= 0
            assert fv.raw_min <= fv.raw_avg <= fv.raw_max
            assert fv.raw_min == x.min() and fv.raw_max == x.max()
            assert fv.raw_var == pytest.approx(fv.raw_std ** 2, rel=1e-9, abs=1e-300)
            assert fv.pk_var == pytest.approx(fv.pk_std ** 2, rel=1e-9, abs=1e-300)
            assert np.all(np.isfinite(fv.values))


class TestProjection:
    def test_arities(self):
        assert [v.arity for v in DatasetVariant] == [15, 10, 6, 4, 2]

    def test_nested_columns(self):
        variants = list(DatasetVariant)
        for wider, narrower in zip(variants, variants[1:]):
            assert set(narrower.columns) < set(wider.columns)

    def test_d1_keeps_header_order(self):
        assert list(DatasetVariant.D1.columns) == FEATURE_COLUMNS

    def test_d5_is_raw_std_then_raw_avg(self):
        fv = random_rows(1, seed=3)[0]
        assert project(fv, DatasetVariant.D5).tolist() == [fv.raw_std, fv.raw_avg]
        assert project(fv, DatasetVariant.D4)[:2].tolist() == [fv.raw_std, fv.raw_avg]

    def test_d2_drops_distances(self):
        fv = random_rows(1, seed=4)[0]
        assert project(fv, DatasetVariant.D2).tolist() == fv.values[5:].tolist()

    def test_project_rows(self):
        rows = random_rows(7, seed=5)
        X, y = project_rows(rows, DatasetVariant.D3)
        assert X.shape == (7, 6)
        assert y.tolist() == [0, 1, 2, 3, 4, 0, 1]

    def test_parse(self):
        assert DatasetVariant.parse("d3") == DatasetVariant.D3
