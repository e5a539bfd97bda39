# dsp/filters.py
import numpy as np
from scipy.signal import lfilter

from errors import AlphaOutOfRangeError
from models.signal import ScalarSeries


def magnitude(capture):
    """Euclidean norm of the three axes at every sample."""
    return ScalarSeries(capture.rate_hz, np.sqrt(np.sum(capture.xyz * capture.xyz, axis=1)))


def check_alpha(alpha):
    if not 0.0 < alpha <= 1.0:
        raise AlphaOutOfRangeError(f"alpha must be in (0, 1], got {alpha}")
    return alpha


def lowpass(series, alpha):
    """Single-pole recursive smoother.

    y[0] = x[0]; y[i] = alpha * x[i] + (1 - alpha) * y[i-1].
    """
    check_alpha(alpha)
    x = series.values
    if len(x) < 2:
        return ScalarSeries(series.rate_hz, x.copy())
    # Seed the filter state so that the first output equals x[0] exactly
    zi = np.array([(1.0 - alpha) * x[0]])
    tail, _ = lfilter([alpha], [1.0, -(1.0 - alpha)], x[1:], zi=zi)
    return ScalarSeries(series.rate_hz, np.concatenate(([x[0]], tail)))
