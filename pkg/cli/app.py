# cli/app.py
import argparse
import logging
import sys

from cli.commands import COMMANDS
from errors import PipelineError
from models.run_config import RunConfig

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """argparse with the toolkit's error line and exit code 1 for usage errors."""
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: Usage: {message}\n")
        sys.exit(1)


def _common(parser):
    parser.add_argument("--config", help="key=value run config file; flags override it")
    parser.add_argument("--seed", type=int, help="master seed for all randomness")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")


def _peak_flags(parser):
    parser.add_argument("--alpha", type=float, help="low-pass smoothing factor in (0, 1]")
    parser.add_argument("--peak-separation-ms", dest="peak_separation_ms", type=float,
                        help="minimum distance between retained peaks")
    parser.add_argument("--peak-floor", dest="peak_floor", type=float,
                        help="peak threshold in standard deviations above the mean")


def _split_flags(parser):
    parser.add_argument("--split-seed", dest="split_seed", type=int,
                        help="seed for the train/test split (defaults to --seed)")
    parser.add_argument("--test-fraction", dest="test_fraction", type=float,
                        help="held-out fraction per class")


def build_parser():
    parser = _Parser(prog="adl", description="ADL recognition from accelerometer captures")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("synth", help="generate a synthetic labeled corpus")
    _common(p)
    p.add_argument("--per-class", dest="per_class", type=int, help="captures per ADL")
    p.add_argument("--out-dir", dest="corpus_dir", help="directory for capture files")

    p = sub.add_parser("featurize", help="extract the feature table from a capture directory")
    _common(p)
    _peak_flags(p)
    p.add_argument("--in-dir", dest="corpus_dir", help="directory of capture files")
    p.add_argument("--out", dest="features", help="feature table CSV to write")

    p = sub.add_parser("train", help="train one network on the training split")
    _common(p)
    _split_flags(p)
    p.add_argument("--features", help="feature table CSV")
    p.add_argument("--variant", help="dataset variant D1..D5")
    p.add_argument("--preset", help="mlp_bp, ff_bp or deep")
    p.add_argument("--norm", dest="normalization", help="raw or normalized")
    p.add_argument("--budget", type=int, help="number of single-example updates")
    p.add_argument("--out", dest="model", help="model file to write")

    p = sub.add_parser("eval", help="evaluate a model on the held-out split")
    _common(p)
    _split_flags(p)
    p.add_argument("--model", help="model file")
    p.add_argument("--features", help="feature table CSV")
    p.add_argument("--out", help="write the confusion matrix CSV here instead of stdout")

    p = sub.add_parser("grid", help="run the full preset x variant x arm x budget grid")
    _common(p)
    _split_flags(p)
    p.add_argument("--features", help="feature table CSV")
    p.add_argument("--out-dir", dest="output_dir", help="directory for grid/best/figure CSVs")
    p.add_argument("--presets", help="comma separated presets")
    p.add_argument("--variants", help="comma separated variants")
    p.add_argument("--normalizations", help="comma separated arms")
    p.add_argument("--budgets", help="comma separated update budgets")
    p.add_argument("--jobs", type=int, help="parallel worker processes")

    p = sub.add_parser("gradcheck", help="compare analytic and finite-difference gradients")
    _common(p)
    p.add_argument("--preset", help="mlp_bp, ff_bp, deep or all")
    p.add_argument("--trials", type=int, help="random (model, input, label) triples")

    p = sub.add_parser("classify", help="predict the ADL of one capture file")
    _common(p)
    _peak_flags(p)
    p.add_argument("--model", help="model file")
    p.add_argument("--capture", required=True, help="capture file")

    p = sub.add_parser("plot", help="render accuracy figures from a grid.csv")
    _common(p)
    p.add_argument("--grid", help="grid.csv to read (defaults to <out-dir>/grid.csv)")
    p.add_argument("--out-dir", dest="output_dir", help="directory for the PNG files")
    return parser


# Flags that are not RunConfig keys
_NON_CONFIG = {"command", "config", "verbose", "quiet", "out", "capture", "grid", "trials"}


def resolve_config(args):
    """config.py defaults, then --config file, then explicit flags."""
    config = RunConfig.load(args.config) if args.config else RunConfig()
    flags = {k: v for k, v in vars(args).items() if k not in _NON_CONFIG}
    if args.command == "gradcheck":
        flags.pop("preset", None)
    return config.override(**flags)


def configure_logging(args):
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def main(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(args)
    try:
        config = resolve_config(args)
        logger.debug("resolved settings: %s", config)
        return COMMANDS[args.command](config, args)
    except PipelineError as e:
        sys.stderr.write(f"error: {e.kind}: {e}\n")
        return e.exit_code
    except OSError as e:
        sys.stderr.write(f"error: IO: {e}\n")
        return 1
