# models/signal.py
import numpy as np


class ScalarSeries:
    """A uniformly sampled scalar signal (m/s^2)."""
    def __init__(self, rate_hz, values):
        self.rate_hz = float(rate_hz)
        self.values = np.asarray(values, dtype=float)

    @property
    def sample_ms(self):
        return 1000.0 / self.rate_hz

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, ScalarSeries):
            return NotImplemented
        return self.rate_hz == other.rate_hz and np.array_equal(self.values, other.values)

    def __repr__(self):
        return f"ScalarSeries(rate_hz={self.rate_hz}, n={len(self.values)})"


class PeakSet:
    """Indices (strictly increasing) and values of the retained maximum peaks."""
    def __init__(self, indices, values):
        self.indices = np.asarray(indices, dtype=np.int64)
        self.values = np.asarray(values, dtype=float)

    @classmethod
    def empty(cls):
        return cls([], [])

    def __len__(self):
        return len(self.indices)

    def __eq__(self, other):
        if not isinstance(other, PeakSet):
            return NotImplemented
        return (np.array_equal(self.indices, other.indices)
                and np.array_equal(self.values, other.values))

    def __repr__(self):
        return f"PeakSet(indices={self.indices.tolist()})"
