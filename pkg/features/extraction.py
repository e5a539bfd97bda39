# features/extraction.py
import numpy as np

from errors import EmptySeriesError
from models.feature_vector import FeatureVector

N_DISTANCES = 5


def _stats(values):
    """(avg, std, var, median, max, min) with population variance.

    The mean is clamped into [min, max] and the variance is taken around that
    clamped mean, so constant inputs give exact zeros.
    """
    lo, hi = float(np.min(values)), float(np.max(values))
    avg = min(max(float(np.mean(values)), lo), hi)
    var = float(np.mean((values - avg) ** 2))
    return avg, float(np.sqrt(var)), var, float(np.median(values)), hi, lo


def peak_distances(peaks, sample_ms, count=N_DISTANCES):
    """Largest time gaps (ms) between consecutive peaks, descending, zero-padded."""
    gaps = np.diff(peaks.indices).astype(float) * sample_ms
    top = np.sort(gaps)[::-1][:count]
    return np.concatenate((top, np.zeros(count - len(top))))


def extract_features(series, peaks, label):
    """Compute the fifteen features of one cleaned capture."""
    x = series.values
    if len(x) == 0:
        raise EmptySeriesError("cannot extract features from an empty series")

    distances = peak_distances(peaks, series.sample_ms)
    if len(peaks) > 0:
        pk_avg, pk_std, pk_var, pk_med, _, _ = _stats(peaks.values)
    else:
        pk_avg = pk_std = pk_var = pk_med = 0.0
    raw_avg, raw_std, raw_var, raw_med, raw_max, raw_min = _stats(x)

    values = list(distances) + [
        pk_avg, pk_std, pk_var, pk_med,
        raw_std, raw_avg, raw_max, raw_min, raw_var, raw_med,
    ]
    return FeatureVector(values, label)


def project(features, variant):
    """Select the variant's columns, in table order."""
    return features.values[list(variant.column_indices)]


def project_rows(rows, variant):
    """Stack projected rows into an (n, arity) matrix and a label vector."""
    X = np.array([project(r, variant) for r in rows], dtype=float).reshape(len(rows), variant.arity)
    y = np.array([int(r.label) for r in rows], dtype=np.int64)
    return X, y
