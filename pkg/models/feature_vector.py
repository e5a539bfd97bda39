# models/feature_vector.py
import numpy as np

from config import FEATURE_COLUMNS


class FeatureVector:
    """The fifteen per-capture features plus the ADL label.

    Values are kept in FEATURE_COLUMNS order; each feature is also reachable
    as an attribute (``fv.raw_std``).
    """
    def __init__(self, values, label):
        values = np.asarray(values, dtype=float)
        if values.shape != (len(FEATURE_COLUMNS),):
            raise ValueError(f"expected {len(FEATURE_COLUMNS)} feature values, got {values.shape}")
        self.values = values
        self.label = label

    def __getattr__(self, name):
        # Only called when normal lookup fails
        if name in FEATURE_COLUMNS:
            return float(self.values[FEATURE_COLUMNS.index(name)])
        raise AttributeError(name)

    def __eq__(self, other):
        if not isinstance(other, FeatureVector):
            return NotImplemented
        return self.label == other.label and np.array_equal(self.values, other.values)

    def __repr__(self):
        return f"FeatureVector(label={self.label.name}, values={self.values.tolist()})"
