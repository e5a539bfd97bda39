# cli/commands.py
import logging
import os
import sys

from config import DEFAULT_GRADCHECK_TRIALS, GRADCHECK_TOLERANCE, GRID_FILE
from errors import ConfigError, GradCheckFailedError
from ingest.capture_io import read_capture_file
from ingest.feature_table import load_feature_table, save_feature_table
from models.adl_label import AdlLabel
from models.dataset_variant import DatasetVariant
from models.experiment import Normalization, TrainingBudget
from models.network import Preset
from nn.gradcheck import random_grad_check
from nn.model_io import read_model_file, write_model_file
from services.experiment_service import ExperimentService, evaluate, stratified_split
from services.feature_service import FeatureService
from services.report_service import eval_csv, eval_text, read_grid_csv, write_reports
from synth.generator import SynthParams, generate_corpus, write_corpus

logger = logging.getLogger(__name__)


def _require(config, *keys):
    missing = [k for k in keys if getattr(config, k) in (None, "")]
    if missing:
        raise ConfigError(f"missing required setting(s): {', '.join(missing)}")


def _feature_service(config):
    return FeatureService(config.alpha, config.peak_separation_ms, config.peak_floor)


def cmd_synth(config, args):
    _require(config, "corpus_dir")
    corpus = generate_corpus(config.per_class, SynthParams(), config.seed)
    write_corpus(corpus, config.corpus_dir)
    print(f"wrote {len(corpus)} captures to {config.corpus_dir}")
    return 0


def cmd_featurize(config, args):
    _require(config, "corpus_dir", "features")
    rows = _feature_service(config).featurize_corpus(config.corpus_dir)
    save_feature_table(rows, config.features)
    print(f"wrote {len(rows)} feature rows to {config.features}")
    return 0


def cmd_train(config, args):
    _require(config, "features", "model")
    rows = load_feature_table(config.features)
    service = ExperimentService(rows, config.seed, config.test_fraction, config.effective_split_seed)
    preset = Preset.parse(config.preset)
    variant = DatasetVariant.parse(config.variant)
    normalization = Normalization.parse(config.normalization)
    model, history = service.train_single(preset, variant, normalization,
                                          TrainingBudget(config.budget), config.seed)
    write_model_file(model, config.model)
    with open(config.model + ".loss.csv", "w", encoding="utf-8", newline="\n") as fh:
        fh.write("step,loss\n")
        fh.writelines(f"{step},{loss!r}\n" for step, loss in history)
    logger.debug("wrote %d loss samples to %s.loss.csv", len(history), config.model)
    print(f"trained {preset.slug}/{variant.ident}/{normalization.slug} for {config.budget} updates "
          f"-> {config.model}")
    return 0


def cmd_eval(config, args):
    _require(config, "features", "model")
    model = read_model_file(config.model)
    rows = load_feature_table(config.features)
    _, test = stratified_split(rows, config.test_fraction, config.effective_split_seed)
    result = evaluate(model, test)
    sys.stdout.write(eval_text(result))
    csv_bytes = eval_csv(result)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(csv_bytes)
    else:
        sys.stdout.write(csv_bytes.decode("utf-8"))
    return 0


def _parse_list(values, parser):
    return [parser(v) for v in values]


def cmd_grid(config, args):
    _require(config, "features", "output_dir")
    rows = load_feature_table(config.features)
    service = ExperimentService(rows, config.seed, config.test_fraction, config.effective_split_seed)
    grid = service.run_grid(presets=_parse_list(config.presets, Preset.parse),
                            variants=_parse_list(config.variants, DatasetVariant.parse),
                            normalizations=_parse_list(config.normalizations, Normalization.parse),
                            budgets=config.budgets, jobs=max(1, config.jobs))
    names = write_reports(grid, config.output_dir)
    failed = len(grid.failures())
    print(f"{len(grid.cells)} cells ({failed} failed); wrote {', '.join(names)} to {config.output_dir}")
    return 0


def cmd_gradcheck(config, args):
    presets = list(Preset) if args.preset == "all" else [Preset.parse(args.preset or config.preset)]
    trials = args.trials if args.trials is not None else DEFAULT_GRADCHECK_TRIALS
    worst = 0.0
    for preset in presets:
        error = random_grad_check(preset, trials, config.seed)
        print(f"{preset.slug}: worst relative error {error:.3e} over {trials} trials")
        worst = max(worst, error)
    if worst >= GRADCHECK_TOLERANCE:
        raise GradCheckFailedError(f"worst relative error {worst:.3e} >= {GRADCHECK_TOLERANCE:g}")
    return 0


def cmd_classify(config, args):
    _require(config, "model")
    model = read_model_file(config.model)
    capture = read_capture_file(args.capture)
    label, probabilities = _feature_service(config).classify(model, capture)
    print(f"predicted: {label.name}")
    for other, p in zip(AdlLabel, probabilities):
        print(f"  {other.name:<16}{p:.6f}")
    return 0


def cmd_plot(config, args):
    _require(config, "output_dir")
    # Deferred so the other subcommands never load matplotlib
    from cli.figures import render_figures
    grid_path = args.grid or os.path.join(config.output_dir, GRID_FILE)
    with open(grid_path, "rb") as fh:
        accuracy = read_grid_csv(fh.read())
    for path in render_figures(accuracy, config.output_dir):
        print(path)
    return 0


COMMANDS = {
    "synth": cmd_synth,
    "featurize": cmd_featurize,
    "train": cmd_train,
    "eval": cmd_eval,
    "grid": cmd_grid,
    "gradcheck": cmd_gradcheck,
    "classify": cmd_classify,
    "plot": cmd_plot,
}
