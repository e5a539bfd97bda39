# nn/gradcheck.py
import logging

import numpy as np
from scipy.special import logsumexp

from config import GRADCHECK_STEP
from models.dataset_variant import DatasetVariant
from models.network import NetworkSpec
from nn.network import compute_gradients, finish_forward, init_model, layer_trace
from seeding import make_rng

logger = logging.getLogger(__name__)

# Below this magnitude gradients are compared in absolute terms
RELATIVE_FLOOR = 1e-6


def _relative_error(analytic, numeric):
    scale = np.maximum(np.maximum(np.abs(analytic), np.abs(numeric)), RELATIVE_FLOOR)
    return np.abs(analytic - numeric) / scale


def _batch_losses(model, k, z, y, weight_norms):
    logits = finish_forward(model, k, z)
    data_loss = logsumexp(logits, axis=1) - logits[:, y]
    return data_loss + 0.5 * model.spec.l2_lambda * weight_norms


def numeric_gradients(model, x, y, h=GRADCHECK_STEP):
    """Central finite differences of the loss for every weight and bias.

    Nudging a parameter of layer k only moves that layer's pre-activations,
    so every nudge of one layer is evaluated as a single batch from layer k on.
    """
    y = int(y)
    inputs, pre = layer_trace(model, x)
    norm = model.squared_weight_norm()
    w_grads, b_grads = [], []
    for k, W in enumerate(model.weights):
        fan_out = W.shape[1]
        # Row p nudges W.flat[p] = W[p // fan_out, p % fan_out]
        rows, cols = np.divmod(np.arange(W.size), fan_out)
        shift = np.zeros((W.size, fan_out))
        shift[np.arange(W.size), cols] = inputs[k][rows]
        w = W.ravel()
        plus = _batch_losses(model, k, pre[k] + h * shift, y, norm - w * w + (w + h) ** 2)
        minus = _batch_losses(model, k, pre[k] - h * shift, y, norm - w * w + (w - h) ** 2)
        w_grads.append(((plus - minus) / (2.0 * h)).reshape(W.shape))

        eye = np.eye(fan_out)
        flat = np.full(fan_out, norm)
        plus = _batch_losses(model, k, pre[k] + h * eye, y, flat)
        minus = _batch_losses(model, k, pre[k] - h * eye, y, flat)
        b_grads.append((plus - minus) / (2.0 * h))
    return w_grads, b_grads


def grad_check(model, x, y, h=GRADCHECK_STEP, gradient_fn=compute_gradients):
    """Worst relative error between analytic and finite-difference gradients."""
    w_analytic, b_analytic, _ = gradient_fn(model, x, y)
    w_numeric, b_numeric = numeric_gradients(model, x, y, h)
    worst = 0.0
    for a, n in zip(list(w_analytic) + list(b_analytic), w_numeric + b_numeric):
        worst = max(worst, float(np.max(_relative_error(a, n))))
    return worst


def random_trial(preset, rng):
    """A random (model, input, label) triple for one preset.

    Arity cycles over the dataset variants; biases are drawn too so their
    gradients are exercised away from zero.
    """
    variant = list(DatasetVariant)[int(rng.integers(len(DatasetVariant)))]
    spec = NetworkSpec.for_preset(preset, variant.arity, seed=int(rng.integers(2 ** 63)))
    model = init_model(spec, variant)
    biases = [rng.normal(0.0, 0.1, size=b.shape) for b in model.biases]
    model = model.replace_parameters(model.weights, biases)
    x = rng.normal(0.0, 1.0, size=variant.arity)
    y = int(rng.integers(len(model.biases[-1])))
    return model, x, y


def random_grad_check(preset, trials, seed):
    """Worst grad_check error over ``trials`` random triples of one preset."""
    rng = make_rng(seed)
    worst = 0.0
    for trial in range(trials):
        model, x, y = random_trial(preset, rng)
        error = grad_check(model, x, y)
        logger.debug("gradcheck %s trial %d: %.3e", preset.name, trial, error)
        worst = max(worst, error)
    logger.info("gradcheck %s: worst relative error %.3e over %d trials", preset.name, worst, trials)
    return worst
