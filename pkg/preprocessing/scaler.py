# preprocessing/scaler.py
import numpy as np

from errors import ArityMismatchError, EmptyFitSetError
from models.scaler_params import ScalerKind, ScalerParams


def fit(kind, rows):
    """Fit per-column parameters on training rows only."""
    X = np.asarray(rows, dtype=float)
    if X.ndim != 2 or X.shape[0] == 0:
        raise EmptyFitSetError("need at least one row to fit a scaler")
    if kind == ScalerKind.MinMax:
        a, b = X.min(axis=0), X.max(axis=0)
    elif kind == ScalerKind.ZScore:
        # Sorted columns make the sums independent of row order
        S = np.sort(X, axis=0)
        a = S.mean(axis=0)
        b = np.sqrt(np.sort((S - a) ** 2, axis=0).mean(axis=0))
    else:
        a, b = np.zeros(X.shape[1]), np.ones(X.shape[1])
    return ScalerParams(ScalerKind(kind), a, b)


def apply(params, v):
    """Map one vector (or a row matrix) through the fitted parameters.

    Degenerate columns (max == min, or std == 0) map to 0. Outputs are not
    clamped, so held-out rows can leave [0, 1].
    """
    x = np.asarray(v, dtype=float)
    if x.shape[-1] != params.n_columns:
        raise ArityMismatchError(f"expected {params.n_columns} columns, got {x.shape[-1]}")
    if params.kind == ScalerKind.Identity:
        return x.copy()
    a, b = params.a, params.b
    scale = b - a if params.kind == ScalerKind.MinMax else b
    degenerate = scale == 0
    safe = np.where(degenerate, 1.0, scale)
    return np.where(degenerate, 0.0, (x - a) / safe)
