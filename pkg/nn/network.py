# nn/network.py
import math

import numpy as np
from scipy.special import expit, logsumexp

from config import NUM_CLASSES
from errors import ArityMismatchError, InvalidSpecError, NonFiniteLossError
from models.adl_label import AdlLabel
from models.dataset_variant import DatasetVariant
from models.network import Activation, Model, Preset
from models.scaler_params import ScalerKind, ScalerParams
from seeding import make_rng


def _variant_for_arity(arity):
    for variant in DatasetVariant:
        if variant.arity == arity:
            return variant
    raise InvalidSpecError(f"no dataset variant has input arity {arity}")


def validate_spec(spec):
    if spec.output_width != NUM_CLASSES:
        raise InvalidSpecError(f"output width must be {NUM_CLASSES}, got {spec.output_width}")
    if spec.input_arity < 1:
        raise InvalidSpecError(f"input arity must be >= 1, got {spec.input_arity}")
    if any(w < 1 for w in spec.hidden_layers):
        raise InvalidSpecError(f"hidden widths must be >= 1, got {list(spec.hidden_layers)}")
    if len(spec.activations) != len(spec.hidden_layers):
        raise InvalidSpecError("need exactly one activation per hidden layer")
    if not (math.isfinite(spec.learning_rate) and spec.learning_rate >= 0):
        raise InvalidSpecError(f"learning rate must be >= 0, got {spec.learning_rate}")
    if not (math.isfinite(spec.l2_lambda) and spec.l2_lambda >= 0):
        raise InvalidSpecError(f"l2_lambda must be >= 0, got {spec.l2_lambda}")
    if spec.l2_lambda > 0 and spec.preset != Preset.Deep:
        raise InvalidSpecError("L2 regularization is only available for the Deep preset")
    if not 0 <= spec.seed < 2 ** 64:
        raise InvalidSpecError(f"seed must fit in 64 bits, got {spec.seed}")


def init_model(spec, variant=None, scaler=None):
    """Glorot-uniform weights from a PCG64 stream seeded with spec.seed; zero biases."""
    validate_spec(spec)
    if variant is None:
        variant = _variant_for_arity(spec.input_arity)
    elif variant.arity != spec.input_arity:
        raise InvalidSpecError(f"variant {variant.ident} has arity {variant.arity}, "
                               f"spec expects {spec.input_arity}")
    if scaler is None:
        scaler = ScalerParams(ScalerKind.Identity, np.zeros(spec.input_arity), np.ones(spec.input_arity))

    rng = make_rng(spec.seed)
    sizes = spec.layer_sizes
    weights, biases = [], []
    for fan_in, fan_out in zip(sizes[:-1], sizes[1:]):
        limit = math.sqrt(6.0 / (fan_in + fan_out))
        weights.append(rng.uniform(-limit, limit, size=(fan_in, fan_out)))
        biases.append(np.zeros(fan_out))
    return Model(spec, weights, biases, scaler, variant)


def _activate(kind, z):
    if kind == Activation.Relu:
        return np.maximum(z, 0.0)
    return expit(z)


def _activation_grad(kind, z, a):
    if kind == Activation.Relu:
        return (z > 0).astype(float)
    return a * (1.0 - a)


def softmax(z):
    shifted = z - np.max(z, axis=-1, keepdims=True)
    e = np.exp(shifted)
    return e / np.sum(e, axis=-1, keepdims=True)


def _check_arity(model, x):
    if x.shape[-1] != model.spec.input_arity:
        raise ArityMismatchError(f"expected {model.spec.input_arity} inputs, got {x.shape[-1]}")


def _forward_cache(model, x):
    """Run the network keeping pre-activations and activations for backprop."""
    zs, acts = [], [x]
    h = x
    for W, b, kind in zip(model.weights[:-1], model.biases[:-1], model.spec.activations):
        z = h @ W + b
        h = _activate(kind, z)
        zs.append(z)
        acts.append(h)
    logits = h @ model.weights[-1] + model.biases[-1]
    return zs, acts, logits


def layer_trace(model, x):
    """Input and pre-activation of every layer for one input vector."""
    x = np.asarray(x, dtype=float)
    _check_arity(model, x)
    zs, acts, logits = _forward_cache(model, x)
    return acts, zs + [logits]


def finish_forward(model, k, z):
    """Logits given layer k's pre-activations, one row per case."""
    h = z
    for j in range(k, len(model.weights) - 1):
        h = _activate(model.spec.activations[j], h) @ model.weights[j + 1] + model.biases[j + 1]
    return h


def forward(model, x):
    """Class probabilities for one input vector (or a row matrix)."""
    x = np.asarray(x, dtype=float)
    _check_arity(model, x)
    _, _, logits = _forward_cache(model, x)
    return softmax(logits)


def loss(model, x, y):
    """Cross-entropy of the true class plus (lambda/2) * sum of squared weights."""
    x = np.asarray(x, dtype=float)
    _check_arity(model, x)
    _, _, logits = _forward_cache(model, x)
    data_loss = float(logsumexp(logits) - logits[int(y)])
    return data_loss + 0.5 * model.spec.l2_lambda * model.squared_weight_norm()


def compute_gradients(model, x, y):
    """Analytic gradients of ``loss`` for a single example.

    Returns (weight_grads, bias_grads, loss). Biases are not regularized.
    """
    x = np.asarray(x, dtype=float)
    _check_arity(model, x)
    zs, acts, logits = _forward_cache(model, x)
    y = int(y)
    lam = model.spec.l2_lambda

    data_loss = float(logsumexp(logits) - logits[y])
    total = data_loss + 0.5 * lam * model.squared_weight_norm() if lam else data_loss

    delta = softmax(logits)
    delta[y] -= 1.0
    n_layers = len(model.weights)
    w_grads, b_grads = [None] * n_layers, [None] * n_layers
    for k in range(n_layers - 1, -1, -1):
        W = model.weights[k]
        w_grads[k] = np.outer(acts[k], delta)
        if lam:
            w_grads[k] += lam * W
        b_grads[k] = delta
        if k > 0:
            kind = model.spec.activations[k - 1]
            delta = (W @ delta) * _activation_grad(kind, zs[k - 1], acts[k])
    return w_grads, b_grads, total


def backprop_step(model, x, y):
    """One SGD update on a single example; returns (new model, loss before the update)."""
    w_grads, b_grads, total = compute_gradients(model, x, y)
    if not math.isfinite(total):
        raise NonFiniteLossError(f"loss became {total}")
    lr = model.spec.learning_rate
    weights = [W - lr * g for W, g in zip(model.weights, w_grads)]
    biases = [b - lr * g for b, g in zip(model.biases, b_grads)]
    return model.replace_parameters(weights, biases), total


def predict(model, x):
    """Most probable class code; ties go to the smaller code."""
    return AdlLabel(int(np.argmax(forward(model, x))))


def predict_batch(model, X):
    return np.argmax(forward(model, np.atleast_2d(X)), axis=1)
