import os.path as osp
from collections import OrderedDict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from ..exceptions import IOFailure, ReportError
from ..utils.meta import get_logger, mkdir_or_exist


# family name -> (title, labels, semilog companion)
FIGURE_FAMILIES = OrderedDict(
    ppt=("States satisfying PPT", ["ppt"], True),
    reduction=("States satisfying the reduction criterion", ["reduction"], False),
    entropic=("Majorization and entropic criteria", ["majorization", "q_entropic_inf", "q_entropic"], False),
    agreement_ppt=("Agreement with PPT", ["agree_ppt_reduction", "agree_ppt_majorization", "agree_ppt_qent"], False),
    agreement_pairs=(
        "Agreement between reduction, majorization and entropic criteria",
        ["agree_reduction_majorization", "agree_reduction_qent", "agree_majorization_qent"],
        False,
    ),
    agree_all=("All four criteria agree", ["agree_all"], False),
    distillability=("Violations (lower bounds on distillable states)", ["violate_reduction", "violate_majorization"], False),
)

MARKERS = ["o", "s", "^", "D", "v"]


def _series(records, n1, label):
    points = sorted((r.dims.total(), r.probabilities[label], r.std_errors[label]) for r in records if r.dims.n_a == n1 and label in r.counters)
    return np.array(points, dtype=np.float64).reshape(-1, 3)


def _draw(ax, records, labels, log_scale=False):
    n1_values = sorted({r.dims.n_a for r in records})
    drawn = 0
    for i, label in enumerate(labels):
        for n1 in n1_values:
            data = _series(records, n1, label)
            if log_scale:
                data = data[data[:, 1] > 0]
            if len(data) == 0:
                continue
            ax.errorbar(data[:, 0], data[:, 1], yerr=data[:, 2], marker=MARKERS[i % len(MARKERS)], capsize=3, label=f"{label} (N1={n1})")
            drawn += 1
    if log_scale:
        ax.set_yscale("log")
    ax.set_xlabel("N = N1 x N2")
    ax.set_ylabel("probability")
    ax.grid(True, alpha=0.3)
    if drawn > 0:
        ax.legend(fontsize=8)
    return drawn


def plot_family(records, family, path):
    title, labels, semilog = FIGURE_FAMILIES[family]
    ncols = 2 if semilog else 1
    with plt.rc_context({"svg.hashsalt": "entangle_atlas", "svg.fonttype": "none"}):
        fig, axes = plt.subplots(1, ncols, figsize=(6 * ncols, 4.5), squeeze=False)
        try:
            drawn = _draw(axes[0, 0], records, labels)
            if semilog:
                _draw(axes[0, 1], records, labels, log_scale=True)
                axes[0, 1].set_title("semi-log", fontsize=10)
            fig.suptitle(title)
            fig.tight_layout()
            if drawn == 0:
                return None
            fig.savefig(path, format="svg", metadata={"Date": None})
        finally:
            plt.close(fig)
    return path


def emit_plots(records, out_dir):
    """One SVG per figure family: probability against N with +-1 standard error bars.

    Families without any of their labels in ``records`` are skipped. Returns the written file paths.
    """
    records = list(records)
    if len(records) == 0:
        raise ReportError("No survey records to plot")
    n1_tag = "+".join(str(n1) for n1 in sorted({r.dims.n_a for r in records}))
    try:
        mkdir_or_exist(out_dir)
        files = []
        for family in FIGURE_FAMILIES:
            path = plot_family(records, family, osp.join(str(out_dir), f"{family}_n1={n1_tag}.svg"))
            if path is not None:
                files.append(path)
    except (OSError, ValueError, RuntimeError) as e:
        raise IOFailure(f"Cannot write plots to {out_dir}: {e}") from e
    get_logger().info(f"Wrote {len(files)} plots to {out_dir}.")
    return files
