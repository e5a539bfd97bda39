# tests/test_dsp.py
import math

import numpy as np
import pytest
from scipy.signal import freqz

from dsp.filters import lowpass, magnitude
from dsp.peaks import detect_peaks, local_maxima
from errors import AlphaOutOfRangeError, InvalidParamsError
from models.adl_label import AdlLabel
from models.capture import Capture
from models.signal import ScalarSeries
from services.feature_service import FeatureService


def _series(values, rate_hz=100.0):
    return ScalarSeries(rate_hz, values)


def _oracle_peaks(x, min_sep_ms, floor, sample_ms):
    """Straightforward restatement of the peak rule, quadratic in the worst case."""
    n = len(x)
    threshold = float(np.mean(x)) + floor * float(np.std(x))
    candidates = []
    i = 1
    while i < n - 1:
        j = i
        while j + 1 < n and x[j + 1] == x[i]:
            j += 1
        if j < n - 1 and x[i - 1] < x[i] and x[j + 1] < x[i] and x[i] > threshold:
            candidates.append(i)
        i = j + 1
    candidates.sort(key=lambda k: (-x[k], k))
    kept = []
    for k in candidates:
        if all(abs(k - other) * sample_ms >= min_sep_ms for other in kept):
            kept.append(k)
    return sorted(kept)


class TestMagnitude:
    def test_single_axis_and_pythagorean_triple(self):
        capture = Capture(AdlLabel.Standing, 100.0, [0.0, 10.0], [[0, 0, 9.81], [3, 4, 0]])
        series = magnitude(capture)
        assert series.rate_hz == 100.0
        np.testing.assert_allclose(series.values, [9.81, 5.0], rtol=1e-15)

    def test_matches_per_sample_recomputation(self):
        rng = np.random.default_rng(0)
        xyz = rng.normal(0.0, 5.0, size=(100, 3))
        capture = Capture(AdlLabel.Running, 100.0, np.arange(100) * 10.0, xyz)
        expected = [math.sqrt(x * x + y * y + z * z) for x, y, z in xyz]
        np.testing.assert_allclose(magnitude(capture).values, expected, rtol=1e-12)


class TestLowpass:
    @pytest.mark.parametrize("alpha", [0.01, 0.1, 0.5, 1.0])
    def test_constant_series_is_unchanged(self, alpha):
        out = lowpass(_series(np.full(300, 9.81)), alpha)
        np.testing.assert_allclose(out.values, 9.81, rtol=1e-9)

    def test_alpha_one_is_identity(self):
        x = np.random.default_rng(1).normal(size=200)
        np.testing.assert_array_equal(lowpass(_series(x), 1.0).values, x)

    def test_recurrence(self):
        x = np.random.default_rng(2).normal(size=50)
        alpha = 0.3
        expected = [x[0]]
        for value in x[1:]:
            expected.append(alpha * value + (1 - alpha) * expected[-1])
        out = lowpass(_series(x), alpha)
        assert out.values[0] == x[0]
        np.testing.assert_allclose(out.values, expected, rtol=1e-12)
        assert len(out) == len(x) and out.rate_hz == 100.0

    def test_sine_attenuation_matches_single_pole_gain(self):
        alpha, rate, freq = 0.1, 100.0, 20.0
        n = np.arange(3000)
        omega = 2 * math.pi * freq / rate
        out = lowpass(_series(np.sin(omega * n), rate), alpha).values
        # Fit the steady state over a whole number of periods
        tail = out[-2000:]
        phase = omega * n[-2000:]
        amplitude = math.hypot(2 * np.mean(tail * np.sin(phase)), 2 * np.mean(tail * np.cos(phase)))
        _, response = freqz([alpha], [1.0, -(1.0 - alpha)], worN=[omega])
        assert amplitude == pytest.approx(abs(response[0]), abs=1e-3)

    @pytest.mark.parametrize("alpha", [0.0, -0.1, 1.5])
    def test_alpha_out_of_range(self, alpha):
        with pytest.raises(AlphaOutOfRangeError):
            lowpass(_series([1.0, 2.0]), alpha)


class TestPeaks:
    def test_constant_series_has_no_peaks(self):
        assert len(detect_peaks(_series(np.full(100, 3.0)), 250.0, 0.0)) == 0

    def test_two_hertz_sine_has_ten_peaks(self):
        t = np.arange(500) / 100.0
        peaks = detect_peaks(_series(np.sin(2 * math.pi * 2.0 * t)), 200.0, 0.0)
        assert len(peaks) == 10
        assert np.all(np.diff(peaks.indices) * 10.0 >= 200.0)

    def test_plateau_reports_leftmost_index(self):
        assert local_maxima([0, 1, 3, 3, 3, 1, 0]).tolist() == [2]

    def test_endpoints_are_never_peaks(self):
        assert local_maxima([5, 1, 2, 1, 5]).tolist() == [2]

    def test_tie_goes_to_smaller_index(self):
        x = np.array([0, 5, 0, 5, 0, 0, 0], dtype=float)
        peaks = detect_peaks(_series(x), 30.0, 0.0)
        assert peaks.indices.tolist() == [1]

    def test_higher_peak_suppresses_neighbour(self):
        x = np.array([0, 4, 0, 9, 0, 0, 0, 0, 6, 0], dtype=float)
        assert detect_peaks(_series(x), 30.0, 0.0).indices.tolist() == [3, 8]

    def test_floor_raises_threshold(self):
        x = np.concatenate(([0, 1, 0, 10, 0, 1, 0], np.zeros(20)))
        assert detect_peaks(_series(x), 0.0, 0.0).indices.tolist() == [1, 3, 5]
        assert detect_peaks(_series(x), 0.0, 1.0).indices.tolist() == [3]

    def test_negative_separation(self):
        with pytest.raises(InvalidParamsError):
            detect_peaks(_series([0.0, 1.0, 0.0]), -1.0, 0.0)

    def test_matches_exhaustive_oracle(self):
        rng = np.random.default_rng(11)
        for trial in range(1000):
            n = int(rng.integers(2, 120))
            # Small integer values give plenty of plateaus and ties
            x = rng.integers(0, 6, n).astype(float) if trial % 2 else rng.normal(size=n)
            sep = float(rng.choice([0.0, 10.0, 30.0, 250.0]))
            floor = float(rng.choice([-0.5, 0.0, 0.5]))
            peaks = detect_peaks(_series(x), sep, floor)
            assert peaks.indices.tolist() == _oracle_peaks(x, sep, floor, 10.0)
            np.testing.assert_array_equal(peaks.values, x[peaks.indices])

    def test_deterministic(self):
        x = np.random.default_rng(5).normal(size=400)
        assert detect_peaks(_series(x), 250.0, 0.0) == detect_peaks(_series(x.copy()), 250.0, 0.0)


class TestFeatureServiceSettings:
    @pytest.mark.parametrize("alpha", [0.0, -0.1, 1.5, float("nan")])
    def test_bad_alpha_fails_at_construction(self, alpha):
        with pytest.raises(AlphaOutOfRangeError):
            FeatureService(alpha=alpha)

    def test_negative_separation_fails_at_construction(self):
        with pytest.raises(InvalidParamsError):
            FeatureService(peak_separation_ms=-1.0)

    def test_defaults_are_accepted(self):
        service = FeatureService()
        assert service.alpha == 0.1 and service.peak_separation_ms == 250.0
