"""Lint engine: parse with the right frontend, run the language's rule
pack, and render the resulting Report as text or JSON."""

from __future__ import annotations

import json
from collections.abc import Iterable

from . import java_rules, python_rules
from .catalog import rules_for
from .java_frontend import parse_java
from .python_frontend import ParseFailure, parse_python
from .report import Mistake, Report

_FRONTENDS = {"python": parse_python, "java": parse_java}
_RULE_PACKS = {"python": python_rules.check_program, "java": java_rules.check_program}


def lint(source: str, language: str, disabled_rules: Iterable[str] = (),
         source_name: str = "<string>") -> Report:
    """Lint one source text. Never raises for user input: parse failures
    come back as a Report with parse_ok=False."""
    if language not in _FRONTENDS:
        raise ValueError(f"unsupported language: {language!r}")
    disabled = set(disabled_rules)
    parsed = _FRONTENDS[language](source, source_name)
    if isinstance(parsed, ParseFailure):
        message = parsed.message
        if parsed.span is not None:
            message = f"line {parsed.span.line_start}: {message}"
        return Report(source_name, language, parse_ok=False, parse_error=message)
    raw = _RULE_PACKS[language](parsed)
    mistakes = _dedupe(m for m in raw if m.rule.code not in disabled)
    mistakes.sort(key=Mistake.sort_key)
    return Report(source_name, language, parse_ok=True, mistakes=mistakes)


def _dedupe(mistakes: Iterable[Mistake]) -> list[Mistake]:
    seen = set()
    out = []
    for m in mistakes:
        key = m.identity()
        if key not in seen:
            seen.add(key)
            out.append(m)
    return out


def render_text(report: Report) -> str:
    """One line per mistake, `source:line: [CODE] message`, plus a total."""
    if not report.parse_ok:
        return f"{report.source_name}: parse error: {report.parse_error}\n"
    lines = []
    for m in report.mistakes:
        if m.span is None:
            lines.append(f"{report.source_name}: [{m.rule.code}] {m.message}")
        else:
            lines.append(f"{report.source_name}:{m.span.line_start}: [{m.rule.code}] {m.message}")
    total = report.total
    lines.append(f"{report.source_name}: {total} mistake{'' if total == 1 else 's'}")
    return "\n".join(lines) + "\n"


def report_dict(report: Report) -> dict:
    return {
        "source": report.source_name,
        "language": report.language,
        "parse_ok": report.parse_ok,
        "parse_error": report.parse_error,
        "mistakes": [
            {
                "rule": m.rule.code,
                "title": m.rule.title,
                "function": m.function_name,
                "line": m.span.line_start if m.span else None,
                "col": m.span.col_start if m.span else None,
                "message": m.message,
            }
            for m in report.mistakes
        ],
        "counts": dict(report.counts),
    }


def render_json(report: Report) -> str:
    return json.dumps(report_dict(report), ensure_ascii=False)


def report_from_dict(data: dict) -> Report:
    """Inverse of render_json (round-trip support for consumers)."""
    from .catalog import RULES_BY_CODE
    from .tree import Span

    mistakes = []
    for m in data["mistakes"]:
        span = None
        if m["line"] is not None:
            span = Span(m["line"], m["col"], m["line"], m["col"])
        mistakes.append(Mistake(RULES_BY_CODE[m["rule"]], m["function"], span, m["message"]))
    report = Report(
        data["source"], data["language"], data["parse_ok"], data["parse_error"], mistakes,
        counts=dict(data["counts"]),
    )
    return report


def rule_catalog(language: str | None = None) -> list[dict]:
    """Catalog entries in the shape the service and UI share."""
    return [
        {"code": r.code, "title": r.title, "message_template": r.template}
        for r in rules_for(language)
    ]
