# dsp/peaks.py
import bisect
import logging

import numpy as np

from errors import InvalidParamsError
from models.signal import PeakSet

logger = logging.getLogger(__name__)


def local_maxima(values):
    """Indices of strict local maxima; a flat-topped peak reports its leftmost index.

    Samples at either end of the series are never maxima because they lack a
    neighbor on one side.
    """
    values = np.asarray(values, dtype=float)
    if len(values) < 3:
        return np.array([], dtype=np.int64)
    # Run-length encode so plateaus become single points
    starts = np.concatenate(([0], np.flatnonzero(np.diff(values) != 0) + 1))
    run_values = values[starts]
    if len(run_values) < 3:
        return np.array([], dtype=np.int64)
    inner = run_values[1:-1]
    is_peak = (inner > run_values[:-2]) & (inner > run_values[2:])
    return starts[1:-1][is_peak].astype(np.int64)


def suppress_non_maxima(indices, values, min_separation_ms, sample_ms):
    """Greedy non-maximum suppression.

    Candidates are visited highest first (ties toward the smaller index); one is
    kept only if it lies at least min_separation_ms from every peak kept so far.
    Returns the kept indices in increasing order.
    """
    order = np.lexsort((indices, -values))
    kept = []  # sorted
    for k in order:
        i = int(indices[k])
        pos = bisect.bisect_left(kept, i)
        if pos > 0 and (i - kept[pos - 1]) * sample_ms < min_separation_ms:
            continue
        if pos < len(kept) and (kept[pos] - i) * sample_ms < min_separation_ms:
            continue
        kept.insert(pos, i)
    return np.asarray(kept, dtype=np.int64)


def check_separation(min_separation_ms):
    if not min_separation_ms >= 0:
        raise InvalidParamsError(f"min_separation_ms must be >= 0, got {min_separation_ms}")
    return min_separation_ms


def detect_peaks(series, min_separation_ms, prominence_floor):
    """Maximum peaks of a cleaned series.

    A peak is a local maximum above mean + prominence_floor * std (population
    std), thinned by greedy non-maximum suppression over min_separation_ms.
    """
    check_separation(min_separation_ms)
    x = series.values
    candidates = local_maxima(x)
    if len(candidates) == 0:
        return PeakSet.empty()
    threshold = float(np.mean(x)) + prominence_floor * float(np.std(x))
    candidates = candidates[x[candidates] > threshold]
    if len(candidates) == 0:
        return PeakSet.empty()
    kept = suppress_non_maxima(candidates, x[candidates], min_separation_ms, series.sample_ms)
    logger.debug("Peaks: %d candidates above %.4f, %d kept", len(candidates), threshold, len(kept))
    return PeakSet(kept, x[kept])
