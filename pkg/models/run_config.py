# models/run_config.py
import logging
from dataclasses import dataclass, field, fields, replace
from typing import List, Optional

from config import (
    DEFAULT_BUDGETS, DEFAULT_FILTER_ALPHA, DEFAULT_MASTER_SEED, DEFAULT_PEAK_FLOOR,
    DEFAULT_PEAK_SEPARATION_MS, DEFAULT_PER_CLASS, DEFAULT_PRESETS,
    DEFAULT_NORMALIZATIONS, DEFAULT_TEST_FRACTION, DEFAULT_VARIANTS,
)
from errors import ConfigError

logger = logging.getLogger(__name__)


@dataclass
class RunConfig:
    """Runtime settings: config.py defaults, then a key=value file, then flags."""
    corpus_dir: Optional[str] = None
    features: Optional[str] = None
    model: Optional[str] = None
    output_dir: Optional[str] = None
    alpha: float = DEFAULT_FILTER_ALPHA
    peak_separation_ms: float = DEFAULT_PEAK_SEPARATION_MS
    peak_floor: float = DEFAULT_PEAK_FLOOR
    variant: str = "D1"
    preset: str = "deep"
    normalization: str = "normalized"
    budget: int = DEFAULT_BUDGETS[-1]
    presets: List[str] = field(default_factory=lambda: list(DEFAULT_PRESETS))
    variants: List[str] = field(default_factory=lambda: list(DEFAULT_VARIANTS))
    budgets: List[int] = field(default_factory=lambda: list(DEFAULT_BUDGETS))
    normalizations: List[str] = field(default_factory=lambda: list(DEFAULT_NORMALIZATIONS))
    seed: int = DEFAULT_MASTER_SEED
    split_seed: Optional[int] = None  # falls back to seed
    test_fraction: float = DEFAULT_TEST_FRACTION
    per_class: int = DEFAULT_PER_CLASS
    jobs: int = 1

    @classmethod
    def keys(cls):
        return [f.name for f in fields(cls)]

    @property
    def effective_split_seed(self):
        return self.seed if self.split_seed is None else self.split_seed

    @classmethod
    def from_text(cls, text, base=None):
        """Parse key=value lines on top of ``base`` (defaults if omitted)."""
        values = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"expected key=value, got '{line}'", line=lineno)
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in cls.keys():
                raise ConfigError(f"unknown key '{key}'", line=lineno)
            values[key] = value
        return (base or cls()).override(**values)

    @classmethod
    def load(cls, path, base=None):
        with open(path, "r", encoding="utf-8") as fh:
            config = cls.from_text(fh.read(), base)
        logger.debug("Loaded run config from %s", path)
        return config

    def override(self, **values):
        """Return a copy with the given (string or typed) values applied; None is skipped."""
        converted = {}
        known = set(self.keys())
        for key, value in values.items():
            if value is None:
                continue
            if key not in known:
                raise ConfigError(f"unknown key '{key}'")
            converted[key] = self._convert(key, value)
        return replace(self, **converted)

    @staticmethod
    def _convert(key, value):
        try:
            if key in ("budgets",):
                items = value.split(",") if isinstance(value, str) else value
                return [int(str(v).strip().replace("_", "")) for v in items if str(v).strip()]
            if key in ("presets", "variants", "normalizations"):
                items = value.split(",") if isinstance(value, str) else value
                return [str(v).strip() for v in items if str(v).strip()]
            if key in ("alpha", "peak_separation_ms", "peak_floor", "test_fraction"):
                return float(value)
            if key in ("budget", "seed", "split_seed", "per_class", "jobs"):
                return int(str(value).replace("_", ""))
            return str(value)
        except ValueError:
            raise ConfigError(f"bad value for {key}: '{value}'") from None

    def to_text(self):
        lines = []
        for f in fields(self):
            value = getattr(self, f.name)
            if value is None:
                continue
            if isinstance(value, list):
                value = ",".join(str(v) for v in value)
            lines.append(f"{f.name}={value}")
        return "\n".join(lines) + "\n"
