# services/report_service.py
import csv
import io
import logging
import math
import os

from config import ACCURACY_DECIMALS, BEST_FILE, FIGURE_PRESETS, GRID_FILE
from models.adl_label import AdlLabel
from models.dataset_variant import DatasetVariant
from models.experiment import CellKey, Normalization
from models.network import Preset

logger = logging.getLogger(__name__)

GRID_HEADER = ["preset", "variant", "normalization", "budget", "accuracy", "seed"]
BEST_HEADER = ["normalization", "preset", "variant", "budget", "accuracy"]


def format_accuracy(value):
    if value is None or math.isnan(value):
        return "nan"
    return f"{value:.{ACCURACY_DECIMALS}f}"


def _csv_bytes(comments, header, rows):
    buffer = io.StringIO()
    for line in comments:
        buffer.write(f"# {line}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().encode("utf-8")


def _grid_comments(grid):
    comments = []
    if not grid.complete:
        comments.append(f"warning: IncompleteGrid: {len(grid.cells)} of {grid.expected_cells} cells")
    for cell in grid.failures():
        comments.append(f"failed: {cell.key}: {cell.error}")
    return comments


def grid_csv(grid):
    rows = [[c.key.preset.slug, c.key.variant.ident, c.key.normalization.slug, c.key.budget,
             format_accuracy(c.accuracy), c.seed] for c in grid.ordered()]
    return _csv_bytes(_grid_comments(grid), GRID_HEADER, rows)


def best_cells(grid):
    """Best cell per (normalization, preset), Raw arm first.

    Highest accuracy wins; ties go to the smaller budget, then the smaller
    variant index. Groups where every cell failed are left out.
    """
    best = {}
    for cell in grid.ordered():
        if not cell.ok:
            continue
        group = (cell.key.normalization, cell.key.preset)
        rank = (-cell.accuracy, cell.key.budget, cell.key.variant_index)
        if group not in best or rank < best[group][0]:
            best[group] = (rank, cell)
    return [best[g][1] for g in sorted(best)]


def best_csv(grid):
    rows = [[c.key.normalization.slug, c.key.preset.slug, c.key.variant.ident, c.key.budget,
             format_accuracy(c.accuracy)] for c in best_cells(grid)]
    comments = _grid_comments(grid)
    present = {(c.key.normalization, c.key.preset) for c in grid.ordered()}
    chosen = {(c.key.normalization, c.key.preset) for c in best_cells(grid)}
    for norm, preset in sorted(present - chosen):
        comments.append(f"no successful cell for {norm.slug}/{preset.slug}")
    return _csv_bytes(comments, BEST_HEADER, rows)


def figure_name(preset, normalization):
    return f"fig{FIGURE_PRESETS[preset.slug]}_{normalization.slug}.csv"


def figure_series(grid):
    """One table per (preset, arm): variant down the rows, one column per budget."""
    accuracy = {c.key: c.accuracy for c in grid.ordered()}
    budgets = sorted({k.budget for k in accuracy})
    files = {}
    for preset in sorted({k.preset for k in accuracy}):
        for norm in sorted({k.normalization for k in accuracy if k.preset == preset}):
            rows = []
            for variant in DatasetVariant:
                values = [accuracy.get(CellKey.of(preset, variant, norm, b)) for b in budgets]
                if all(v is None for v in values):
                    continue
                rows.append([variant.ident] + [format_accuracy(v) for v in values])
            header = ["variant"] + [str(b) for b in budgets]
            comments = [f"{preset.name} {norm.name}: accuracy by dataset variant, one series per budget"]
            files[figure_name(preset, norm)] = _csv_bytes(comments, header, rows)
    return files


def report(grid):
    """All report files as {file name: bytes}."""
    files = {GRID_FILE: grid_csv(grid), BEST_FILE: best_csv(grid)}
    files.update(figure_series(grid))
    return files


def write_reports(grid, out_dir):
    os.makedirs(out_dir, exist_ok=True)
    files = report(grid)
    for name, data in files.items():
        with open(os.path.join(out_dir, name), "wb") as fh:
            fh.write(data)
    logger.info("Wrote %d report files to %s", len(files), out_dir)
    return sorted(files)


def read_grid_csv(data):
    """Accuracy per (preset, variant, normalization, budget) from a grid.csv."""
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    lines = [line for line in text.splitlines() if line and not line.startswith("#")]
    accuracy = {}
    for record in csv.DictReader(lines):
        key = (Preset.parse(record["preset"]), DatasetVariant.parse(record["variant"]),
               Normalization.parse(record["normalization"]), int(record["budget"]))
        accuracy[key] = float(record["accuracy"])
    return accuracy


def eval_text(result):
    """Human-readable accuracy, confusion matrix and per-class recall."""
    names = [label.name for label in AdlLabel]
    width = max(len(n) for n in names) + 2
    lines = [f"accuracy: {format_accuracy(result.accuracy)} ({int(result.confusion.trace())}/{result.total})",
             "confusion (rows = truth, columns = prediction):",
             " " * width + "".join(f"{n[:8]:>10}" for n in names)]
    for label, row in zip(names, result.confusion):
        lines.append(f"{label:<{width}}" + "".join(f"{int(v):>10}" for v in row))
    lines.append("recall:")
    for label, recall in zip(names, result.per_class_recall()):
        lines.append(f"  {label:<{width}}{format_accuracy(float(recall))}")
    return "\n".join(lines) + "\n"


def eval_csv(result):
    """Confusion matrix as CSV with the accuracy in a comment line."""
    names = [label.name for label in AdlLabel]
    rows = [[name] + [int(v) for v in row] for name, row in zip(names, result.confusion)]
    return _csv_bytes([f"accuracy={format_accuracy(result.accuracy)}"], ["truth"] + names, rows)
