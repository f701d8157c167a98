"""Report files for a corpus comparison: delimited tables plus a rates
figure, written side by side into a directory."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .stats import CorpusResult, GroupStats


def write_groups_csv(path: Path, groups: list[GroupStats], roles: list[str]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["role", "label", "n_programs", "n_mistakes", "rate"])
        for role, g in zip(roles, groups):
            writer.writerow([role, g.label, g.n_programs, g.n_mistakes, f"{g.rate:.6f}"])


def write_comparison_csv(path: Path, result: CorpusResult) -> None:
    cmp = result.comparison
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["baseline_rate", "treatment_rate", "drop_pct", "p_value", "excluded"])
        writer.writerow(
            [
                f"{cmp.baseline.rate:.6f}",
                f"{cmp.treatment.rate:.6f}",
                f"{cmp.drop_pct:.4f}",
                f"{cmp.p_value:.6g}",
                result.excluded,
            ]
        )


def write_rates_figure(path: Path, result: CorpusResult) -> None:
    cmp = result.comparison
    groups = [*result.baseline_groups]
    if len(groups) > 1:
        groups.append(cmp.baseline)
    groups.append(cmp.treatment)
    labels = [g.label for g in groups]
    rates = [g.rate for g in groups]
    fig, ax = plt.subplots(figsize=(max(5.0, 1.2 * len(groups)), 3.6))
    colors = ["#8899bb"] * (len(groups) - 1) + ["#cc5544"]
    if len(groups) > 2:
        colors[-2] = "#445577"  # the pooled baseline bar
    ax.bar(range(len(groups)), rates, color=colors)
    ax.set_xticks(range(len(groups)))
    ax.set_xticklabels(labels, rotation=20, ha="right", fontsize=8)
    ax.set_ylabel("mistakes per program")
    ax.set_title(f"drop {cmp.drop_pct:.2f}%  (p = {cmp.p_value:.3g})")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report_dir(directory: str | Path, result: CorpusResult) -> list[Path]:
    """Write groups.csv, comparison.csv and rates.png; returns the paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    cmp = result.comparison
    groups = [*result.baseline_groups, cmp.baseline, cmp.treatment]
    roles = ["baseline"] * len(result.baseline_groups) + ["baseline-pooled", "treatment"]
    if len(result.baseline_groups) == 1:
        groups = [cmp.baseline, cmp.treatment]
        roles = ["baseline", "treatment"]
    paths = [directory / "groups.csv", directory / "comparison.csv", directory / "rates.png"]
    write_groups_csv(paths[0], groups, roles)
    write_comparison_csv(paths[1], result)
    write_rates_figure(paths[2], result)
    return paths
