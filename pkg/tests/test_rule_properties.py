"""Cross-cutting rule properties: mistake-shape invariants, per-program
caps on the main-shape rules, and deletion monotonicity."""

from __future__ import annotations

import random

from design_tutor.engine import lint

from .generators import random_java_source, random_python_source
from .rule_fixtures import ALL_FIXTURES

PROGRAM_LEVEL = {"PY05", "PY06", "PY07", "PY08", "PY09"}


def test_mistake_shape_invariants():
    """Span present iff the rule is statement-anchored; messages non-empty;
    counts always total the mistake list."""
    corpus = [(f.language, f.source) for f in ALL_FIXTURES]
    rng = random.Random(424)
    corpus += [("python", random_python_source(rng)) for _ in range(30)]
    corpus += [("java", random_java_source(rng)) for _ in range(30)]
    for language, source in corpus:
        report = lint(source, language)
        if not report.parse_ok:
            continue
        assert sum(report.counts.values()) == len(report.mistakes)
        for m in report.mistakes:
            assert m.message
            if m.rule.code in PROGRAM_LEVEL:
                assert m.span is None and m.function_name is None
            else:
                assert m.span is not None


def test_main_shape_rules_fire_at_most_once():
    rng = random.Random(77)
    for _ in range(150):
        report = lint(random_python_source(rng), "python")
        for code in PROGRAM_LEVEL:
            assert report.counts[code] <= 1


MONOTONE_SOURCE = """def tally(xs):
    global total
    global count
    pass
    for x in xs:
        break
    for x in xs:
        continue
    y = x * 777
    return y
"""

MONOTONE_RULES = {"PY01": (2, 3), "PY02": (6,), "PY03": (8,), "PY04": (4,), "PY16": (9,)}


def test_deleting_a_flagged_statement_removes_exactly_its_mistake():
    """Dropping one flagged line lowers that rule's count by one and
    leaves every other statement rule untouched."""
    before = lint(MONOTONE_SOURCE, "python").counts
    lines = MONOTONE_SOURCE.splitlines()
    for rule, flagged_lines in MONOTONE_RULES.items():
        victim = flagged_lines[0]
        # loop-only statements need a replacement to keep the loop body valid
        replacement = None
        if rule in ("PY02", "PY03"):
            replacement = lines[victim - 1].replace("break", "x = x").replace("continue", "x = x")
        edited = [
            (replacement if i == victim - 1 else line)
            for i, line in enumerate(lines)
            if i != victim - 1 or replacement is not None
        ]
        after = lint("\n".join(edited) + "\n", "python").counts
        for code in MONOTONE_RULES:
            want = before[code] - (1 if code == rule else 0)
            assert after[code] == want, (rule, code, before[code], after[code])
