"""Command line: lint files, list the rule catalog, or compare corpora.

Exit codes for lint: 0 clean, 1 mistakes found, 2 parse failure or
usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import stats as stats_mod
from .catalog import RULES_BY_CODE, rules_for
from .engine import lint, render_json, render_text

_EXT_TO_LANG = {".py": "python", ".java": "java"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="design-tutor",
        description="Design-quality feedback for student Python and Java programs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    lint_p = sub.add_parser("lint", help="lint source files and print reports")
    lint_p.add_argument("--lang", choices=["python", "java"])
    lint_p.add_argument("--format", choices=["text", "json"], default="text")
    lint_p.add_argument("--disable", action="append", default=[], metavar="CODE",
                        help="rule code to disable (repeatable)")
    lint_p.add_argument("files", nargs="+", metavar="FILE")

    rules_p = sub.add_parser("rules", help="print the rule catalog")
    rules_p.add_argument("--lang", choices=["python", "java"])

    stats_p = sub.add_parser("stats", help="compare mistake rates of two corpora")
    stats_p.add_argument("--baseline", action="append", required=True, metavar="DIR",
                         help="baseline directory or pre-counted CSV (repeatable)")
    stats_p.add_argument("--treatment", required=True, metavar="DIR")
    stats_p.add_argument("--lang", choices=["python", "java"])
    stats_p.add_argument("--format", choices=["text", "json"], default="text")
    stats_p.add_argument("--disable", action="append", default=[], metavar="CODE")
    stats_p.add_argument("--report", metavar="DIR",
                         help="also write groups.csv, comparison.csv and rates.png here")
    return parser


class _UsageError(Exception):
    pass


def _check_rule_codes(codes: list[str]) -> None:
    unknown = [c for c in codes if c not in RULES_BY_CODE]
    if unknown:
        raise _UsageError(f"unknown rule code(s): {', '.join(unknown)}")


def _infer_language(paths: list[Path]) -> str:
    langs = {_EXT_TO_LANG.get(p.suffix) for p in paths}
    if len(langs) == 1 and None not in langs:
        return langs.pop()
    raise _UsageError("--lang is required unless all files share one known extension (.py or .java)")


def cmd_lint(args: argparse.Namespace) -> int:
    _check_rule_codes(args.disable)
    paths = [Path(f) for f in args.files]
    missing = [p for p in paths if not p.is_file()]
    if missing:
        for p in missing:
            print(f"design-tutor: no such file: {p}", file=sys.stderr)
        return 2
    language = args.lang or _infer_language(paths)
    any_mistake = False
    any_parse_failure = False
    for path in paths:
        report = lint(path.read_text(encoding="utf-8"), language, args.disable,
                      source_name=str(path))
        if args.format == "json":
            print(render_json(report))
        else:
            print(render_text(report), end="")
        any_mistake = any_mistake or bool(report.mistakes)
        any_parse_failure = any_parse_failure or not report.parse_ok
    if any_parse_failure:
        return 2
    return 1 if any_mistake else 0


def cmd_rules(args: argparse.Namespace) -> int:
    for rule in rules_for(args.lang):
        print(f"{rule.code}\t{rule.title}\t{rule.template}")
    return 0


def _stats_side(paths: list[str], language: str | None, disabled: set[str]):
    """One side of the comparison: directories to lint or CSVs of
    pre-counted groups. Returns (groups, excluded)."""
    groups, excluded = [], 0
    for entry in paths:
        p = Path(entry)
        if p.suffix.lower() == ".csv":
            groups.extend(stats_mod.read_groups_csv(p))
            continue
        if not p.is_dir():
            raise _UsageError(f"no such directory: {p}")
        if language is None:
            raise _UsageError("--lang is required when linting directories")
        reports, skipped = stats_mod.lint_directory(p, language, disabled)
        excluded += skipped
        if not reports:
            raise _UsageError(f"no parseable {language} files under {p}")
        groups.append(stats_mod.group_stats(reports, p.name))
    return groups, excluded


def cmd_stats(args: argparse.Namespace) -> int:
    _check_rule_codes(args.disable)
    disabled = set(args.disable)
    baseline_groups, excluded_b = _stats_side(args.baseline, args.lang, disabled)
    treatment_groups, excluded_t = _stats_side([args.treatment], args.lang, disabled)
    baseline = stats_mod.pooled_baseline(baseline_groups)
    treatment = stats_mod.pooled_baseline(treatment_groups)
    comparison = stats_mod.compare(baseline, treatment)
    result = stats_mod.CorpusResult(comparison, tuple(baseline_groups), excluded_b + excluded_t)

    if args.format == "json":
        print(json.dumps(_corpus_dict(result), ensure_ascii=False))
    else:
        print(_corpus_text(result), end="")
    if args.report:
        from .figures import write_report_dir

        for path in write_report_dir(args.report, result):
            print(f"wrote {path}", file=sys.stderr)
    return 0


def _group_dict(g: stats_mod.GroupStats) -> dict:
    return {
        "label": g.label,
        "n_programs": g.n_programs,
        "n_mistakes": g.n_mistakes,
        "rate": round(g.rate, 6),
    }


def _corpus_dict(result: stats_mod.CorpusResult) -> dict:
    cmp = result.comparison
    return {
        "baseline": _group_dict(cmp.baseline),
        "treatment": _group_dict(cmp.treatment),
        "drop_pct": round(cmp.drop_pct, 4),
        "p_value": cmp.p_value,
        "excluded": result.excluded,
    }


def _corpus_text(result: stats_mod.CorpusResult) -> str:
    cmp = result.comparison
    lines = [f"{'group':<28} {'programs':>8} {'mistakes':>8} {'rate':>8}"]
    for g in result.baseline_groups:
        lines.append(f"{g.label:<28} {g.n_programs:>8} {g.n_mistakes:>8} {g.rate:>8.2f}")
    if len(result.baseline_groups) > 1:
        b = cmp.baseline
        lines.append(f"{'baseline (pooled)':<28} {b.n_programs:>8} {b.n_mistakes:>8} {b.rate:>8.2f}")
    t = cmp.treatment
    lines.append(f"{t.label + ' (treatment)':<28} {t.n_programs:>8} {t.n_mistakes:>8} {t.rate:>8.2f}")
    lines.append(f"drop: {cmp.drop_pct:.2f}%   p-value: {cmp.p_value:.3g}   excluded: {result.excluded}")
    return "\n".join(lines) + "\n"


def run(argv: list[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "lint":
            return cmd_lint(args)
        if args.command == "rules":
            return cmd_rules(args)
        return cmd_stats(args)
    except _UsageError as exc:
        print(f"design-tutor: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"design-tutor: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
