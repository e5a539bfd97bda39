# cli/figures.py
import logging
import math
import os

import numpy as np
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from config import FIGURE_PRESETS
from models.dataset_variant import DatasetVariant
from models.experiment import Normalization

logger = logging.getLogger(__name__)


def _plot_arm(ax, accuracy, preset, norm, budgets):
    """Grouped bars: variant on the x axis, one bar per budget, accuracy in %."""
    variants = list(DatasetVariant)
    x = np.arange(len(variants))
    width = 0.8 / max(len(budgets), 1)
    for i, budget in enumerate(budgets):
        heights = []
        for variant in variants:
            value = accuracy.get((preset, variant, norm, budget), float("nan"))
            heights.append(0.0 if math.isnan(value) else 100.0 * value)
        ax.bar(x + (i - (len(budgets) - 1) / 2) * width, heights, width, label=f"{budget:,} updates")
    ax.set_xticks(x)
    ax.set_xticklabels([v.ident for v in variants])
    ax.set_ylim(0, 100)
    ax.set_xlabel("Dataset")
    ax.set_ylabel("Accuracy (%)")
    ax.set_title(f"{norm.name} data")
    ax.grid(True, axis="y", linestyle="--", alpha=0.6)
    ax.legend(fontsize="small")


def render_figures(accuracy, out_dir):
    """One PNG per preset with a Raw and a Normalized panel.

    ``accuracy`` maps (preset, variant, normalization, budget) to a fraction;
    missing or failed cells are drawn as empty bars.
    """
    os.makedirs(out_dir, exist_ok=True)
    budgets = sorted({key[3] for key in accuracy})
    paths = []
    for preset in sorted({key[0] for key in accuracy}):
        fig = Figure(figsize=(12, 4.5), dpi=100)
        FigureCanvasAgg(fig)
        axes = fig.subplots(1, len(Normalization), squeeze=False)[0]
        for ax, norm in zip(axes, Normalization):
            _plot_arm(ax, accuracy, preset, norm, budgets)
        fig.suptitle(f"{preset.name}: accuracy by dataset and training budget")
        fig.tight_layout()
        path = os.path.join(out_dir, f"fig{FIGURE_PRESETS[preset.slug]}_{preset.slug}.png")
        fig.savefig(path)
        paths.append(path)
        logger.info("Rendered %s", path)
    return paths
