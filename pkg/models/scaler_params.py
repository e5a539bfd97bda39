# models/scaler_params.py
from dataclasses import dataclass
from enum import IntEnum

import numpy as np


class ScalerKind(IntEnum):
    Identity = 0
    MinMax = 1
    ZScore = 2


@dataclass(frozen=True, eq=False)
class ScalerParams:
    """Per-column normalization parameters, frozen after fitting.

    MinMax: a=min, b=max. ZScore: a=mean, b=population std. Identity keeps
    the arrays only to carry the column count.
    """
    kind: ScalerKind
    a: np.ndarray
    b: np.ndarray

    @property
    def n_columns(self):
        return len(self.a)

    def __eq__(self, other):
        if not isinstance(other, ScalerParams):
            return NotImplemented
        return (self.kind == other.kind
                and np.array_equal(self.a, other.a)
                and np.array_equal(self.b, other.b))
