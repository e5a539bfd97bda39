# models/capture.py
import numpy as np


class Capture:
    """One labeled tri-axial accelerometer recording."""
    def __init__(self, label, rate_hz, t_ms, xyz):
        self.label = label
        self.rate_hz = float(rate_hz)
        self.t_ms = np.asarray(t_ms, dtype=float)  # shape (n,)
        self.xyz = np.asarray(xyz, dtype=float).reshape(-1, 3)  # shape (n, 3), m/s^2

    @property
    def n_samples(self):
        return len(self.t_ms)

    @property
    def duration_ms(self):
        if self.n_samples < 2:
            return 0.0
        return float(self.t_ms[-1] - self.t_ms[0])

    @property
    def samples(self):
        """Iterate (t_ms, x, y, z) tuples in file order."""
        for t, (x, y, z) in zip(self.t_ms, self.xyz):
            yield float(t), float(x), float(y), float(z)

    def __eq__(self, other):
        if not isinstance(other, Capture):
            return NotImplemented
        return (self.label == other.label
                and self.rate_hz == other.rate_hz
                and np.array_equal(self.t_ms, other.t_ms)
                and np.array_equal(self.xyz, other.xyz))

    def __str__(self):
        return (f"Capture(label={self.label.name}, rate_hz={self.rate_hz}, "
                f"samples={self.n_samples})")

    def __repr__(self):
        return self.__str__()
