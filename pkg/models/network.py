# models/network.py
from dataclasses import dataclass
from enum import IntEnum
from typing import List, Tuple

import numpy as np

from config import (
    DEEP_HIDDEN_LAYERS, DEFAULT_DEEP_LEARNING_RATE, DEFAULT_L2_LAMBDA,
    DEFAULT_SHALLOW_LEARNING_RATE, NUM_CLASSES,
)
from errors import ConfigError
from models.dataset_variant import DatasetVariant
from models.scaler_params import ScalerParams


class Preset(IntEnum):
    """The three network families compared in the grid."""
    MlpBp = 0
    FfBp = 1
    Deep = 2

    @property
    def slug(self):
        return {Preset.MlpBp: "mlp_bp", Preset.FfBp: "ff_bp", Preset.Deep: "deep"}[self]

    @classmethod
    def parse(cls, text):
        key = text.strip().replace("_", "").replace("-", "").lower()
        for preset in cls:
            if preset.name.lower() == key:
                return preset
        raise ConfigError(f"unknown preset '{text}'")


class Activation(IntEnum):
    Sigmoid = 0
    Relu = 1


@dataclass(frozen=True)
class NetworkSpec:
    preset: Preset
    input_arity: int
    hidden_layers: Tuple[int, ...]
    activations: Tuple[Activation, ...]  # one per hidden layer; output is always softmax
    learning_rate: float
    l2_lambda: float
    seed: int
    output_width: int = NUM_CLASSES

    @property
    def layer_sizes(self):
        return (self.input_arity,) + tuple(self.hidden_layers) + (self.output_width,)

    @classmethod
    def for_preset(cls, preset, input_arity, seed, learning_rate=None, l2_lambda=None):
        """Build the default topology for a preset.

        MlpBp: one sigmoid layer of 2*arity. FfBp: sigmoid (2*arity, arity).
        Deep: ReLU (32, 16, 8) with L2.
        """
        if preset == Preset.MlpBp:
            hidden = (2 * input_arity,)
        elif preset == Preset.FfBp:
            hidden = (2 * input_arity, input_arity)
        else:
            hidden = tuple(DEEP_HIDDEN_LAYERS)
        act = Activation.Relu if preset == Preset.Deep else Activation.Sigmoid
        if learning_rate is None:
            learning_rate = (DEFAULT_DEEP_LEARNING_RATE if preset == Preset.Deep
                             else DEFAULT_SHALLOW_LEARNING_RATE)
        if l2_lambda is None:
            l2_lambda = DEFAULT_L2_LAMBDA if preset == Preset.Deep else 0.0
        return cls(preset=preset, input_arity=input_arity, hidden_layers=hidden,
                   activations=(act,) * len(hidden), learning_rate=float(learning_rate),
                   l2_lambda=float(l2_lambda), seed=int(seed))


@dataclass(frozen=True, eq=False)
class Model:
    """A network spec with its learned parameters and the preprocessing it expects.

    weights[k] has shape (layer_sizes[k], layer_sizes[k+1]); biases[k] has
    shape (layer_sizes[k+1],). Arrays are never mutated after construction.
    """
    spec: NetworkSpec
    weights: List[np.ndarray]
    biases: List[np.ndarray]
    scaler: ScalerParams
    variant: DatasetVariant

    def replace_parameters(self, weights, biases):
        return Model(self.spec, weights, biases, self.scaler, self.variant)

    def squared_weight_norm(self):
        return float(sum(np.sum(w * w) for w in self.weights))

    def __eq__(self, other):
        if not isinstance(other, Model):
            return NotImplemented
        return (self.spec == other.spec
                and self.variant == other.variant
                and self.scaler == other.scaler
                and len(self.weights) == len(other.weights)
                and all(np.array_equal(a, b) for a, b in zip(self.weights, other.weights))
                and all(np.array_equal(a, b) for a, b in zip(self.biases, other.biases)))
