"""Lint results: one Mistake per rule violation, one Report per file."""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import RuleId, rules_for
from .tree import Span


@dataclass(frozen=True)
class Mistake:
    """A rule violation. Program-level mistakes (the main-shape rules)
    carry neither a function nor a span; everything else is anchored to
    the offending statement or expression."""

    rule: RuleId
    function_name: str | None
    span: Span | None
    message: str

    def sort_key(self) -> tuple:
        # program-level first, then by source position, then rule code
        if self.span is None:
            return (0, 0, 0, self.rule.code, self.function_name or "")
        return (1, self.span.line_start, self.span.col_start, self.rule.code, self.function_name or "")

    def identity(self) -> tuple:
        return (self.rule.code, self.function_name, self.span)


@dataclass
class Report:
    source_name: str
    language: str
    parse_ok: bool
    parse_error: str | None = None
    mistakes: list[Mistake] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.counts:
            self.counts = {r.code: 0 for r in rules_for(self.language)}
            for m in self.mistakes:
                self.counts[m.rule.code] += 1
        if not self.parse_ok and self.mistakes:
            raise ValueError("a failed parse cannot carry mistakes")

    @property
    def total(self) -> int:
        return len(self.mistakes)


def render_mistake(rule: RuleId, function_name: str | None, span: Span | None,
                   name: str | None = None) -> Mistake:
    """Build a Mistake with its message rendered from the rule template."""
    message = rule.template.format(
        function=function_name if function_name is not None else "?",
        line=span.line_start if span is not None else "?",
        name=name if name is not None else "?",
    )
    return Mistake(rule, function_name, span, message)
