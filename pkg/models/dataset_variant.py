# models/dataset_variant.py
from enum import Enum

from config import FEATURE_COLUMNS
from errors import ConfigError

_RAW = ["raw_std", "raw_avg", "raw_max", "raw_min", "raw_var", "raw_med"]


class DatasetVariant(Enum):
    """The five nested feature subsets, widest first."""
    D1 = ("D1", tuple(FEATURE_COLUMNS))
    D2 = ("D2", tuple(FEATURE_COLUMNS[5:]))
    D3 = ("D3", tuple(_RAW))
    D4 = ("D4", ("raw_std", "raw_avg", "raw_var", "raw_med"))
    D5 = ("D5", ("raw_std", "raw_avg"))

    def __init__(self, ident, columns):
        self.ident = ident
        self.columns = columns
        self.column_indices = tuple(FEATURE_COLUMNS.index(c) for c in columns)

    @property
    def arity(self):
        return len(self.columns)

    @property
    def index(self):
        return list(DatasetVariant).index(self)

    @classmethod
    def parse(cls, text):
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise ConfigError(f"unknown dataset variant '{text}'") from None
