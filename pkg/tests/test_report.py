# tests/test_report.py
import math

import numpy as np

from models.dataset_variant import DatasetVariant
from models.experiment import CellKey, CellResult, EvalResult, GridResult, Normalization
from models.network import Preset
from services.report_service import (
    BEST_HEADER, GRID_HEADER, best_cells, best_csv, eval_csv, eval_text, figure_name,
    figure_series, format_accuracy, grid_csv, read_grid_csv, report,
)


def _result(correct, total=10):
    """EvalResult with `correct` hits out of `total`, all on class 0."""
    confusion = np.zeros((5, 5), dtype=np.int64)
    confusion[0, 0] = correct
    confusion[0, 1] = total - correct
    return EvalResult(confusion)


def _cell(preset, variant, norm, budget, correct=None, error=None):
    key = CellKey.of(preset, variant, norm, budget)
    result = _result(correct) if correct is not None else None
    return CellResult(key, seed=123, result=result, error=error)


def _grid(*cells, expected=90):
    grid = GridResult(expected_cells=expected)
    for cell in cells:
        grid.add(cell)
    return grid


def _lines(data):
    return data.decode("utf-8").splitlines()


class TestGridCsv:
    def test_rows_are_ordered_and_formatted(self):
        grid = _grid(_cell(Preset.Deep, DatasetVariant.D1, Normalization.Normalized, 40_000, 9),
                     _cell(Preset.MlpBp, DatasetVariant.D2, Normalization.Raw, 10_000, 7),
                     expected=2)
        lines = _lines(grid_csv(grid))
        assert lines[0] == ",".join(GRID_HEADER)
        assert lines[1] == "mlp_bp,D2,raw,10000,0.700000,123"
        assert lines[2] == "deep,D1,normalized,40000,0.900000,123"

    def test_incomplete_grid_and_failures_become_comments(self):
        grid = _grid(_cell(Preset.Deep, DatasetVariant.D1, Normalization.Raw, 10_000,
                           error="NonFiniteLoss: loss became nan"))
        lines = _lines(grid_csv(grid))
        assert lines[0] == "# warning: IncompleteGrid: 1 of 90 cells"
        assert lines[1] == "# failed: deep/D1/raw/10000: NonFiniteLoss: loss became nan"
        assert lines[-1].endswith(",nan,123")

    def test_lf_newlines(self):
        data = grid_csv(_grid(_cell(Preset.Deep, DatasetVariant.D1, Normalization.Raw, 10, 5)))
        assert b"\r" not in data and data.endswith(b"\n")

    def test_read_back(self):
        grid = _grid(_cell(Preset.FfBp, DatasetVariant.D4, Normalization.Normalized, 20_000, 6),
                     _cell(Preset.Deep, DatasetVariant.D1, Normalization.Raw, 10_000, error="x"))
        accuracy = read_grid_csv(grid_csv(grid))
        assert accuracy[(Preset.FfBp, DatasetVariant.D4, Normalization.Normalized, 20_000)] == 0.6
        assert math.isnan(accuracy[(Preset.Deep, DatasetVariant.D1, Normalization.Raw, 10_000)])


class TestBest:
    def test_argmax_is_selected(self):
        grid = _grid(_cell(Preset.Deep, DatasetVariant.D1, Normalization.Normalized, 40_000, 9),
                     _cell(Preset.Deep, DatasetVariant.D2, Normalization.Normalized, 40_000, 8),
                     _cell(Preset.Deep, DatasetVariant.D1, Normalization.Normalized, 10_000, 7))
        (best,) = best_cells(grid)
        assert best.key == CellKey.of(Preset.Deep, DatasetVariant.D1, Normalization.Normalized, 40_000)

    def test_ties_prefer_smaller_budget_then_smaller_variant(self):
        grid = _grid(_cell(Preset.MlpBp, DatasetVariant.D1, Normalization.Raw, 40_000, 8),
                     _cell(Preset.MlpBp, DatasetVariant.D3, Normalization.Raw, 20_000, 8),
                     _cell(Preset.MlpBp, DatasetVariant.D2, Normalization.Raw, 20_000, 8))
        (best,) = best_cells(grid)
        assert (best.key.variant, best.key.budget) == (DatasetVariant.D2, 20_000)

    def test_one_row_per_arm_and_preset(self):
        cells = [_cell(p, DatasetVariant.D1, n, 10_000, 5) for p in Preset for n in Normalization]
        lines = _lines(best_csv(_grid(*cells)))
        body = [line for line in lines if not line.startswith("#")]
        assert body[0] == ",".join(BEST_HEADER)
        assert len(body) == 7
        assert [line.split(",")[:2] for line in body[1:4]] == [
            ["raw", "mlp_bp"], ["raw", "ff_bp"], ["raw", "deep"]]

    def test_failed_group_is_reported(self):
        grid = _grid(_cell(Preset.Deep, DatasetVariant.D1, Normalization.Raw, 10_000, error="boom"),
                     _cell(Preset.Deep, DatasetVariant.D1, Normalization.Normalized, 10_000, 9))
        lines = _lines(best_csv(grid))
        assert "# no successful cell for raw/deep" in lines
        assert lines[-1] == "normalized,deep,D1,10000,0.900000"


class TestFigures:
    def test_series_layout(self):
        cells = [_cell(Preset.FfBp, v, Normalization.Raw, b, 5)
                 for v in DatasetVariant for b in (10_000, 20_000)]
        files = figure_series(_grid(*cells))
        assert list(files) == ["fig2_raw.csv"]
        lines = _lines(files["fig2_raw.csv"])
        assert lines[0].startswith("#")
        assert lines[1] == "variant,10000,20000"
        assert lines[2] == "D1,0.500000,0.500000"
        assert len(lines) == 7

    def test_names(self):
        assert figure_name(Preset.MlpBp, Normalization.Normalized) == "fig1_normalized.csv"
        assert figure_name(Preset.Deep, Normalization.Raw) == "fig3_raw.csv"

    def test_report_bundles_every_file(self):
        cells = [_cell(p, DatasetVariant.D5, n, 10, 3) for p in Preset for n in Normalization]
        files = report(_grid(*cells))
        assert sorted(files) == sorted(["grid.csv", "best.csv", "fig1_raw.csv", "fig1_normalized.csv",
                                        "fig2_raw.csv", "fig2_normalized.csv", "fig3_raw.csv",
                                        "fig3_normalized.csv"])


class TestEvalOutput:
    def test_text_and_csv(self):
        result = _result(7)
        text = eval_text(result)
        assert text.startswith("accuracy: 0.700000 (7/10)")
        assert "Running" in text and "recall:" in text
        lines = _lines(eval_csv(result))
        assert lines[0] == "# accuracy=0.700000"
        assert lines[1] == "truth,Running,Walking,GoingUpstairs,GoingDownstairs,Standing"
        assert lines[2] == "Running,7,3,0,0,0"

    def test_format_accuracy(self):
        assert format_accuracy(0.8589) == "0.858900"
        assert format_accuracy(float("nan")) == "nan"
        assert format_accuracy(None) == "nan"
