# synth/generator.py
import logging
import math
import os
from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from config import (
    CAPTURE_EXTENSION, DEFAULT_SYNTH_CLASSES, DEFAULT_SYNTH_JITTER, GRAVITY,
    HARMONIC_WEIGHT, NOMINAL_DURATION_MS, NOMINAL_RATE_HZ, SYNTH_X_RATIO, SYNTH_Y_RATIO,
)
from errors import InvalidParamsError
from ingest.capture_io import write_capture_file
from models.adl_label import AdlLabel
from models.capture import Capture
from seeding import derive_seed, make_rng

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassParams:
    frequency_hz: float
    amplitude: float  # vertical, m/s^2
    bias: float  # vertical offset, m/s^2
    noise_std: float


def _default_classes():
    return {AdlLabel.from_name(name): ClassParams(*values)
            for name, values in DEFAULT_SYNTH_CLASSES.items()}


@dataclass(frozen=True)
class SynthParams:
    """Generative settings for the stand-in corpus."""
    classes: Dict[AdlLabel, ClassParams] = field(default_factory=_default_classes)
    harmonic_weight: float = HARMONIC_WEIGHT
    frequency_jitter: float = DEFAULT_SYNTH_JITTER
    phase_jitter: float = DEFAULT_SYNTH_JITTER
    rate_hz: float = NOMINAL_RATE_HZ
    duration_ms: float = NOMINAL_DURATION_MS

    def validate(self):
        missing = [label.name for label in AdlLabel if label not in self.classes]
        if missing:
            raise InvalidParamsError(f"no parameters for {', '.join(missing)}")
        for label, cp in self.classes.items():
            values = (cp.frequency_hz, cp.amplitude, cp.bias, cp.noise_std)
            if not all(math.isfinite(v) for v in values):
                raise InvalidParamsError(f"{label.name}: non-finite parameter")
            if cp.frequency_hz < 0 or cp.amplitude < 0 or cp.noise_std < 0:
                raise InvalidParamsError(f"{label.name}: frequency, amplitude and noise must be >= 0")
        for name in ("frequency_jitter", "phase_jitter"):
            if not 0.0 <= getattr(self, name) <= 0.5:
                raise InvalidParamsError(f"{name} must be in [0, 0.5]")
        if self.harmonic_weight < 0 or self.rate_hz <= 0 or self.duration_ms <= 0:
            raise InvalidParamsError("harmonic weight, rate and duration must be positive")
        return self


def generate_capture(label, params, seed):
    """One 5 s capture whose cadence and amplitude depend on the ADL.

    z = g + bias + amp * (sin(2*pi*f*t + phi) + w * sin(4*pi*f*t + phi2)) + noise;
    x and y carry smaller phase-shifted copies of the fundamental plus noise.
    """
    params.validate()
    cp = params.classes[label]
    rng = make_rng(seed)

    n = int(round(params.duration_ms / 1000.0 * params.rate_hz))
    t_ms = np.arange(n) * (1000.0 / params.rate_hz)
    t = t_ms / 1000.0

    f = cp.frequency_hz * (1.0 + params.frequency_jitter * rng.uniform(-1.0, 1.0))
    phi = rng.uniform(0.0, 2.0 * math.pi)
    phi2 = 2.0 * phi + 2.0 * math.pi * params.phase_jitter * rng.uniform(-1.0, 1.0)
    shift_x, shift_y = rng.uniform(0.0, 2.0 * math.pi, size=2)
    noise = rng.normal(0.0, cp.noise_std, size=(n, 3))

    w = 2.0 * math.pi * f * t
    vertical = cp.amplitude * (np.sin(w + phi) + params.harmonic_weight * np.sin(2.0 * w + phi2))
    x = SYNTH_X_RATIO * cp.amplitude * np.sin(w + phi + shift_x) + noise[:, 0]
    y = SYNTH_Y_RATIO * cp.amplitude * np.sin(w + phi + shift_y) + noise[:, 1]
    z = GRAVITY + cp.bias + vertical + noise[:, 2]
    return Capture(label, params.rate_hz, t_ms, np.column_stack((x, y, z)))


def capture_seed(master_seed, label, index):
    return derive_seed(master_seed, "capture", label.name, index)


def generate_corpus(per_class, params, master_seed, start_index=0):
    """per_class captures for every ADL, each from its own derived seed.

    Returns a list of (label, index, Capture) in label-code then index order.
    """
    if per_class < 1:
        raise InvalidParamsError(f"per_class must be >= 1, got {per_class}")
    params.validate()
    corpus = []
    for label in AdlLabel:
        for index in range(start_index, start_index + per_class):
            capture = generate_capture(label, params, capture_seed(master_seed, label, index))
            corpus.append((label, index, capture))
    logger.info("Generated %d synthetic captures (%d per class)", len(corpus), per_class)
    return corpus


def capture_file_name(label, index):
    return f"{label.name}_{index:05d}{CAPTURE_EXTENSION}"


def write_corpus(corpus, out_dir):
    """Write each capture in the ingest text format; returns the paths."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for label, index, capture in corpus:
        path = os.path.join(out_dir, capture_file_name(label, index))
        write_capture_file(capture, path)
        paths.append(path)
    logger.info("Wrote %d capture files to %s", len(paths), out_dir)
    return paths
