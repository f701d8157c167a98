"""Corpus statistics: per-group mistake rates, baseline pooling, drop
percentages, and the two-sample Poisson significance test."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from scipy.stats import binom

from .engine import lint
from .report import Report

_EXTENSIONS = {"python": ".py", "java": ".java"}


@dataclass(frozen=True)
class GroupStats:
    """One group of programs (one assignment-year, or a pooled baseline).

    The rate is authoritative: groups built from lint reports satisfy
    rate == n_mistakes / n_programs exactly, while groups built from a
    published rate keep that rate and round the implied mistake count.
    """

    label: str
    n_programs: int
    n_mistakes: int
    rate: float

    def __post_init__(self) -> None:
        if self.n_programs <= 0:
            raise ValueError("a group needs at least one program")
        if self.n_mistakes < 0 or self.rate < 0:
            raise ValueError("mistake counts and rates cannot be negative")

    @classmethod
    def from_counts(cls, label: str, n_programs: int, n_mistakes: int) -> GroupStats:
        if n_programs <= 0:
            raise ValueError("a group needs at least one program")
        return cls(label, n_programs, n_mistakes, n_mistakes / n_programs)

    @classmethod
    def from_rate(cls, label: str, n_programs: int, rate: float) -> GroupStats:
        return cls(label, n_programs, round(n_programs * rate), rate)


@dataclass(frozen=True)
class ComparisonResult:
    baseline: GroupStats
    treatment: GroupStats
    drop_pct: float
    p_value: float


@dataclass(frozen=True)
class CorpusResult:
    """run_corpus output: the comparison plus what was skipped."""

    comparison: ComparisonResult
    baseline_groups: tuple[GroupStats, ...]
    excluded: int


def group_stats(reports: list[Report], label: str) -> GroupStats:
    if not reports:
        raise ValueError(f"group {label!r} has no programs; rate undefined")
    if any(not r.parse_ok for r in reports):
        raise ValueError("unparseable programs must be excluded before aggregation")
    n_mistakes = sum(r.total for r in reports)
    return GroupStats.from_counts(label, len(reports), n_mistakes)


def pooled_baseline(groups: list[GroupStats]) -> GroupStats:
    """Program-weighted pool of per-year groups."""
    if not groups:
        raise ValueError("cannot pool zero groups")
    if len(groups) == 1:
        return groups[0]
    n_programs = sum(g.n_programs for g in groups)
    weighted = sum(g.n_programs * g.rate for g in groups)
    n_mistakes = sum(round(g.n_programs * g.rate) for g in groups)
    label = "+".join(g.label for g in groups)
    return GroupStats(label, n_programs, n_mistakes, weighted / n_programs)


def drop_pct(baseline: GroupStats, treatment: GroupStats) -> float:
    if baseline.rate <= 0:
        raise ValueError("baseline rate must be positive to compute a drop")
    return 100.0 * (baseline.rate - treatment.rate) / baseline.rate


def average_drop(drops: list[float]) -> float:
    if not drops:
        raise ValueError("no drops to average")
    return sum(drops) / len(drops)


def poisson_two_sample(x1: int, t1: float, x2: int, t2: float) -> float:
    """Exact conditional test for equal Poisson rates.

    Under H0, X1 given X1+X2 = n is Binomial(n, t1/(t1+t2)); the
    two-sided p-value doubles the smaller tail of the observed x1,
    capped at 1.
    """
    if t1 <= 0 or t2 <= 0:
        raise ValueError("exposures must be positive")
    if x1 < 0 or x2 < 0:
        raise ValueError("counts cannot be negative")
    n = x1 + x2
    share = t1 / (t1 + t2)
    lower = float(binom.cdf(x1, n, share))
    upper = float(binom.sf(x1 - 1, n, share))
    return min(1.0, 2.0 * min(lower, upper))


def compare(baseline: GroupStats, treatment: GroupStats) -> ComparisonResult:
    # two equally clean corpora compare as "no drop", not as an error
    no_change = baseline.rate == 0 and treatment.rate == 0
    return ComparisonResult(
        baseline=baseline,
        treatment=treatment,
        drop_pct=0.0 if no_change else drop_pct(baseline, treatment),
        p_value=poisson_two_sample(
            baseline.n_mistakes, baseline.n_programs,
            treatment.n_mistakes, treatment.n_programs,
        ),
    )


def read_groups_csv(path: str | Path) -> list[GroupStats]:
    """Pre-counted groups: header label,n_programs,n_mistakes."""
    groups = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        required = {"label", "n_programs", "n_mistakes"}
        if reader.fieldnames is None or not required <= set(reader.fieldnames):
            raise ValueError(f"{path}: expected CSV header label,n_programs,n_mistakes")
        for row in reader:
            groups.append(
                GroupStats.from_counts(row["label"], int(row["n_programs"]), int(row["n_mistakes"]))
            )
    if not groups:
        raise ValueError(f"{path}: no groups")
    return groups


def lint_directory(directory: Path, language: str, disabled: set[str]) -> tuple[list[Report], int]:
    ext = _EXTENSIONS[language]
    files = sorted(p for p in directory.rglob(f"*{ext}") if p.is_file())
    reports, excluded = [], 0
    for path in files:
        report = lint(path.read_text(encoding="utf-8"), language, disabled, source_name=str(path))
        if report.parse_ok:
            reports.append(report)
        else:
            excluded += 1
    return reports, excluded


def run_corpus(
    baseline_dirs: list[str | Path],
    treatment_dir: str | Path,
    language: str,
    disabled: set[str] | None = None,
) -> CorpusResult:
    """Lint two corpora of source trees and compare their mistake rates.

    Unparseable files are excluded from the groups and reported in the
    excluded count, mirroring the dataset policy.
    """
    disabled = disabled or set()
    excluded = 0
    baseline_groups = []
    for directory in baseline_dirs:
        directory = Path(directory)
        reports, skipped = lint_directory(directory, language, disabled)
        excluded += skipped
        if not reports:
            raise ValueError(f"no parseable {language} files under {directory}")
        baseline_groups.append(group_stats(reports, directory.name))
    if not baseline_groups:
        raise ValueError("at least one baseline directory is required")
    treatment_dir = Path(treatment_dir)
    reports, skipped = lint_directory(treatment_dir, language, disabled)
    excluded += skipped
    if not reports:
        raise ValueError(f"no parseable {language} files under {treatment_dir}")
    treatment = group_stats(reports, treatment_dir.name)
    baseline = pooled_baseline(baseline_groups)
    return CorpusResult(compare(baseline, treatment), tuple(baseline_groups), excluded)
