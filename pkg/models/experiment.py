# models/experiment.py
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Dict, List, Optional

import numpy as np
from sklearn.metrics import confusion_matrix

from config import LOSS_HISTORY_POINTS, NUM_CLASSES
from errors import ConfigError, InvalidBudgetError
from models.dataset_variant import DatasetVariant
from models.network import Preset
from models.scaler_params import ScalerKind


class Normalization(IntEnum):
    """The two arms each preset is trained in."""
    Raw = 0
    Normalized = 1

    @property
    def slug(self):
        return self.name.lower()

    @classmethod
    def parse(cls, text):
        key = text.strip().lower()
        for arm in cls:
            if arm.slug == key:
                return arm
        raise ConfigError(f"unknown normalization arm '{text}'")

    def scaler_kind(self, preset):
        """Shallow presets pair Raw/MinMax; Deep pairs L2 alone / L2 + ZScore."""
        if self == Normalization.Raw:
            return ScalerKind.Identity
        return ScalerKind.ZScore if preset == Preset.Deep else ScalerKind.MinMax


@dataclass(frozen=True)
class TrainingBudget:
    max_updates: int

    def __post_init__(self):
        if int(self.max_updates) < 1:
            raise InvalidBudgetError(f"budget must be >= 1 update, got {self.max_updates}")

    @property
    def log_every(self):
        return max(1, self.max_updates // LOSS_HISTORY_POINTS)


@dataclass(frozen=True, eq=False)
class EvalResult:
    """Confusion matrix (rows = truth, columns = prediction) and accuracy."""
    confusion: np.ndarray

    @classmethod
    def from_pairs(cls, truths, predictions):
        truths = np.asarray([int(t) for t in truths], dtype=np.int64)
        predictions = np.asarray([int(p) for p in predictions], dtype=np.int64)
        if truths.size == 0:
            return cls(np.zeros((NUM_CLASSES, NUM_CLASSES), dtype=np.int64))
        confusion = confusion_matrix(truths, predictions, labels=list(range(NUM_CLASSES)))
        return cls(confusion.astype(np.int64))

    @property
    def total(self):
        return int(self.confusion.sum())

    @property
    def accuracy(self):
        total = self.total
        return float(np.trace(self.confusion)) / total if total else 0.0

    def per_class_recall(self):
        support = self.confusion.sum(axis=1)
        with np.errstate(invalid="ignore", divide="ignore"):
            recall = np.where(support > 0, np.diag(self.confusion) / np.maximum(support, 1), np.nan)
        return recall

    def __eq__(self, other):
        if not isinstance(other, EvalResult):
            return NotImplemented
        return np.array_equal(self.confusion, other.confusion)


@dataclass(frozen=True, order=True)
class CellKey:
    preset: Preset
    variant_index: int
    normalization: Normalization
    budget: int

    @property
    def variant(self):
        return list(DatasetVariant)[self.variant_index]

    @classmethod
    def of(cls, preset, variant, normalization, budget):
        return cls(preset, variant.index, normalization, int(budget))

    def __str__(self):
        return f"{self.preset.slug}/{self.variant.ident}/{self.normalization.slug}/{self.budget}"


@dataclass
class CellResult:
    key: CellKey
    seed: int
    result: Optional[EvalResult] = None
    error: Optional[str] = None

    @property
    def accuracy(self):
        return self.result.accuracy if self.result is not None else float("nan")

    @property
    def ok(self):
        return self.result is not None


@dataclass
class GridResult:
    cells: Dict[CellKey, CellResult] = field(default_factory=dict)
    expected_cells: int = 0

    def add(self, cell):
        self.cells[cell.key] = cell

    def ordered(self) -> List[CellResult]:
        return [self.cells[k] for k in sorted(self.cells)]

    @property
    def complete(self):
        return len(self.cells) >= self.expected_cells

    def failures(self):
        return [c for c in self.ordered() if not c.ok]
