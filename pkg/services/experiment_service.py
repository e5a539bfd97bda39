# services/experiment_service.py
import itertools
import logging
from collections import defaultdict
from multiprocessing import Pool

from config import DEFAULT_BUDGETS
from errors import ClassTooSmallError, InvalidParamsError, NonFiniteLossError, PipelineError
from features.extraction import project_rows
from models.dataset_variant import DatasetVariant
from models.experiment import CellKey, CellResult, EvalResult, GridResult, Normalization, TrainingBudget
from models.network import NetworkSpec, Preset
from nn.network import backprop_step, init_model, predict_batch
from preprocessing.scaler import apply, fit
from seeding import derive_seed, make_rng

logger = logging.getLogger(__name__)

FULL_GRID_CELLS = len(Preset) * len(DatasetVariant) * len(Normalization) * len(DEFAULT_BUDGETS)


def stratified_split(rows, test_fraction, seed):
    """Per-class proportional train/test split from a seeded shuffle.

    Each class present must keep at least one row on both sides.
    """
    if not 0.0 < test_fraction < 1.0:
        raise InvalidParamsError(f"test_fraction must be in (0, 1), got {test_fraction}")
    by_class = defaultdict(list)
    for row in rows:
        by_class[row.label].append(row)

    train, test = [], []
    for label in sorted(by_class):
        members = by_class[label]
        n_test = int(round(len(members) * test_fraction))
        if n_test < 1 or len(members) - n_test < 1:
            raise ClassTooSmallError(
                f"{label.name} has {len(members)} rows; cannot put one on each side")
        order = make_rng(derive_seed(seed, "split", label.name)).permutation(len(members))
        test.extend(members[i] for i in order[:n_test])
        train.extend(members[i] for i in order[n_test:])
    return train, test


def train(spec, variant, normalization, train_rows, budget, context=""):
    """Fit the arm's scaler on train_rows, then run budget.max_updates SGD steps.

    Examples are visited cyclically in one seeded shuffle. Returns the model
    (with its scaler embedded) and the loss history as (step, loss) pairs.
    """
    if not isinstance(budget, TrainingBudget):
        budget = TrainingBudget(int(budget))
    X, y = project_rows(train_rows, variant)
    scaler = fit(normalization.scaler_kind(spec.preset), X)
    X = apply(scaler, X)

    model = init_model(spec, variant, scaler)
    order = make_rng(derive_seed(spec.seed, "shuffle")).permutation(len(X))
    history = []
    log_every = budget.log_every
    for step in range(budget.max_updates):
        i = order[step % len(order)]
        try:
            model, step_loss = backprop_step(model, X[i], y[i])
        except NonFiniteLossError as e:
            raise NonFiniteLossError(f"{context or spec.preset.name} at update {step + 1}: {e}") from None
        if (step + 1) % log_every == 0:
            history.append((step + 1, step_loss))
    logger.debug("Trained %s for %d updates, final loss %.4f",
                 context or spec.preset.name, budget.max_updates, history[-1][1] if history else float("nan"))
    return model, history


def evaluate(model, test_rows, predict_fn=predict_batch):
    """Scale with the model's embedded scaler, predict, and tally the confusion matrix."""
    X, y = project_rows(test_rows, model.variant)
    predictions = predict_fn(model, apply(model.scaler, X)) if len(X) else []
    return EvalResult.from_pairs(y, predictions)


def cell_seed(master_seed, key):
    return derive_seed(master_seed, key.preset.slug, key.variant.ident, key.normalization.slug, key.budget)


def run_cell(key, seed, train_rows, test_rows):
    """Train and evaluate one grid cell; failures are recorded, not raised."""
    spec = NetworkSpec.for_preset(key.preset, key.variant.arity, seed)
    try:
        model, _ = train(spec, key.variant, key.normalization, train_rows,
                         TrainingBudget(key.budget), context=str(key))
        result = evaluate(model, test_rows)
    except PipelineError as e:
        logger.warning("Cell %s failed: %s: %s", key, e.kind, e)
        return CellResult(key, seed, error=f"{e.kind}: {e}")
    logger.info("Cell %s: accuracy %.4f", key, result.accuracy)
    return CellResult(key, seed, result=result)


# Worker-side copy of the split, set once per process
_worker_rows = {}


def _init_worker(train_rows, test_rows):
    _worker_rows["train"] = train_rows
    _worker_rows["test"] = test_rows


def _run_cell_in_worker(args):
    key, seed = args
    return run_cell(key, seed, _worker_rows["train"], _worker_rows["test"])


class ExperimentService:
    """Runs the preset x variant x normalization x budget grid on one feature table."""
    def __init__(self, rows, master_seed, test_fraction, split_seed=None):
        self.master_seed = int(master_seed)
        self.split_seed = self.master_seed if split_seed is None else int(split_seed)
        self.train_rows, self.test_rows = stratified_split(rows, test_fraction, self.split_seed)
        logger.info("Split %d rows into %d train / %d test",
                    len(rows), len(self.train_rows), len(self.test_rows))

    @staticmethod
    def cell_keys(presets, variants, normalizations, budgets):
        return [CellKey.of(p, v, n, b)
                for p, v, n, b in itertools.product(presets, variants, normalizations, budgets)]

    def run_grid(self, presets=tuple(Preset), variants=tuple(DatasetVariant),
                 normalizations=tuple(Normalization), budgets=tuple(DEFAULT_BUDGETS), jobs=1):
        """Train and evaluate every cell; each cell's seed depends only on its coordinates."""
        keys = self.cell_keys(presets, variants, normalizations, budgets)
        tasks = [(key, cell_seed(self.master_seed, key)) for key in keys]
        grid = GridResult(expected_cells=FULL_GRID_CELLS)
        logger.info("Running %d grid cells with %d job(s)", len(tasks), jobs)
        if jobs > 1 and len(tasks) > 1:
            with Pool(jobs, initializer=_init_worker, initargs=(self.train_rows, self.test_rows)) as pool:
                for cell in pool.imap(_run_cell_in_worker, tasks):
                    grid.add(cell)
        else:
            for key, seed in tasks:
                grid.add(run_cell(key, seed, self.train_rows, self.test_rows))
        return grid

    def train_single(self, preset, variant, normalization, budget, seed):
        spec = NetworkSpec.for_preset(preset, variant.arity, seed)
        return train(spec, variant, normalization, self.train_rows, budget)
