# tests/helpers.py
import numpy as np

from config import FEATURE_COLUMNS
from models.adl_label import AdlLabel
from models.capture import Capture
from models.feature_vector import FeatureVector


def make_capture(label=AdlLabel.Walking, n=500, gap_ms=10.0, rate_hz=100.0, seed=0):
    rng = np.random.default_rng(seed)
    t_ms = np.arange(n) * gap_ms
    xyz = rng.normal(0.0, 1.0, size=(n, 3)) + [0.0, 0.0, 9.81]
    return Capture(label, rate_hz, t_ms, xyz)


def blob_rows(per_class, seed, spread=0.3):
    """Five well separated 2-D clusters stored in the raw_std/raw_avg columns."""
    centers = {AdlLabel.Running: (0.0, 0.0), AdlLabel.Walking: (5.0, 0.0),
               AdlLabel.GoingUpstairs: (0.0, 5.0), AdlLabel.GoingDownstairs: (5.0, 5.0),
               AdlLabel.Standing: (2.5, 2.5)}
    rng = np.random.default_rng(seed)
    std_col, avg_col = FEATURE_COLUMNS.index("raw_std"), FEATURE_COLUMNS.index("raw_avg")
    rows = []
    for label, (cx, cy) in centers.items():
        for _ in range(per_class):
            values = np.zeros(len(FEATURE_COLUMNS))
            values[std_col] = cx + rng.normal(0.0, spread)
            values[avg_col] = cy + rng.normal(0.0, spread)
            rows.append(FeatureVector(values, label))
    return rows


def random_rows(n, seed):
    """Rows with random positive features, labels cycling through every ADL."""
    rng = np.random.default_rng(seed)
    return [FeatureVector(rng.uniform(0.0, 20.0, len(FEATURE_COLUMNS)), AdlLabel(i % 5))
            for i in range(n)]
