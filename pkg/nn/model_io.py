# nn/model_io.py
"""Binary model files.

Layout (all little-endian, reals are float64):

    magic    4 bytes  b"ADLM"
    version  u32
    spec     preset u8, input_arity u32, n_hidden u32, widths u32[n_hidden],
             activations u8[n_hidden], learning_rate f64, l2_lambda f64, seed u64
    variant  u8 (0..4 for D1..D5)
    scaler   kind u8, n_columns u32, a f64[n], b f64[n]
    layers   n_layers u32, then per layer rows u32, cols u32,
             weights f64[rows*cols] (row-major), biases f64[cols]
"""
import struct

import numpy as np

from config import MODEL_MAGIC, MODEL_VERSION
from errors import BadMagicError, InvalidSpecError, TruncatedFileError, VersionMismatchError
from models.dataset_variant import DatasetVariant
from models.network import Activation, Model, NetworkSpec, Preset
from models.scaler_params import ScalerKind, ScalerParams

_F64 = np.dtype("<f8")


class _Reader:
    def __init__(self, data):
        self.data = bytes(data)
        self.pos = 0

    def take(self, fmt):
        size = struct.calcsize(fmt)
        if self.pos + size > len(self.data):
            raise TruncatedFileError(f"needed {size} bytes at offset {self.pos}, "
                                     f"file has {len(self.data)}")
        values = struct.unpack_from(fmt, self.data, self.pos)
        self.pos += size
        return values

    def reals(self, count):
        size = count * _F64.itemsize
        if self.pos + size > len(self.data):
            raise TruncatedFileError(f"needed {size} bytes at offset {self.pos}, "
                                     f"file has {len(self.data)}")
        values = np.frombuffer(self.data, dtype=_F64, count=count, offset=self.pos)
        self.pos += size
        return values.astype(float)


def save_model(model):
    spec = model.spec
    n_hidden = len(spec.hidden_layers)
    parts = [
        MODEL_MAGIC,
        struct.pack("<I", MODEL_VERSION),
        struct.pack("<BII", int(spec.preset), spec.input_arity, n_hidden),
        struct.pack(f"<{n_hidden}I", *spec.hidden_layers),
        struct.pack(f"<{n_hidden}B", *(int(a) for a in spec.activations)),
        struct.pack("<ddQ", spec.learning_rate, spec.l2_lambda, spec.seed),
        struct.pack("<B", model.variant.index),
        struct.pack("<BI", int(model.scaler.kind), model.scaler.n_columns),
        np.asarray(model.scaler.a, dtype=_F64).tobytes(),
        np.asarray(model.scaler.b, dtype=_F64).tobytes(),
        struct.pack("<I", len(model.weights)),
    ]
    for W, b in zip(model.weights, model.biases):
        parts.append(struct.pack("<II", *W.shape))
        parts.append(np.ascontiguousarray(W, dtype=_F64).tobytes())
        parts.append(np.asarray(b, dtype=_F64).tobytes())
    return b"".join(parts)


def load_model(data):
    reader = _Reader(data)
    if len(reader.data) < len(MODEL_MAGIC):
        raise TruncatedFileError("file shorter than the magic number")
    magic = reader.data[:len(MODEL_MAGIC)]
    if magic != MODEL_MAGIC:
        raise BadMagicError(f"expected {MODEL_MAGIC!r}, got {magic!r}")
    reader.pos = len(MODEL_MAGIC)
    (version,) = reader.take("<I")
    if version != MODEL_VERSION:
        raise VersionMismatchError(f"file version {version}, reader supports {MODEL_VERSION}")

    preset_code, input_arity, n_hidden = reader.take("<BII")
    hidden = reader.take(f"<{n_hidden}I")
    activations = reader.take(f"<{n_hidden}B")
    learning_rate, l2_lambda, seed = reader.take("<ddQ")
    try:
        spec = NetworkSpec(preset=Preset(preset_code), input_arity=input_arity,
                           hidden_layers=tuple(hidden),
                           activations=tuple(Activation(a) for a in activations),
                           learning_rate=learning_rate, l2_lambda=l2_lambda, seed=seed)
        (variant_code,) = reader.take("<B")
        variant = list(DatasetVariant)[variant_code]
        kind_code, n_columns = reader.take("<BI")
        kind = ScalerKind(kind_code)
    except (ValueError, IndexError) as e:
        raise InvalidSpecError(f"corrupt model header: {e}") from None
    scaler = ScalerParams(kind, reader.reals(n_columns), reader.reals(n_columns))

    (n_layers,) = reader.take("<I")
    weights, biases = [], []
    for _ in range(n_layers):
        rows, cols = reader.take("<II")
        weights.append(reader.reals(rows * cols).reshape(rows, cols))
        biases.append(reader.reals(cols))
    if reader.pos != len(reader.data):
        raise TruncatedFileError(f"{len(reader.data) - reader.pos} unexpected bytes after the last layer")
    return Model(spec, weights, biases, scaler, variant)


def write_model_file(model, path):
    with open(path, "wb") as fh:
        fh.write(save_model(model))


def read_model_file(path):
    with open(path, "rb") as fh:
        return load_model(fh.read())
