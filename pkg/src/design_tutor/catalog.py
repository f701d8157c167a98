"""Rule catalog: codes, titles, and feedback message templates.

Templates may interpolate {function}, {line}, and {name} (the offending
identifier or literal text); rendering fills in whatever the mistake
carries.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

# Literal values that never count as magic numbers.
MAGIC_ALLOWED = (-1, 0, 1, 2)


@dataclass(frozen=True)
class RuleId:
    code: str
    language: str
    title: str
    template: str


_PYTHON_RULES = [
    ("PY01", "Global variables",
     "Function '{function}' uses a global statement; pass values in as parameters and return results instead."),
    ("PY02", "Break statements",
     "Function '{function}' uses 'break'; fold the exit condition into the loop condition instead."),
    ("PY03", "Continue statements",
     "Function '{function}' uses 'continue'; restructure the loop body with 'if' instead."),
    ("PY04", "Pass statements",
     "Function '{function}' contains 'pass'; remove the placeholder or write the real body."),
    ("PY05", "Missing 'main' function",
     "No 'main' function is defined; put the program's top-level logic in 'main'."),
    ("PY06", "Missing a call to 'main'",
     "'main' is never called at the top level of the program."),
    ("PY07", "'main' function not first",
     "The 'main' function should be the first function defined."),
    ("PY08", "'main' function has arguments",
     "The 'main' function should not take arguments."),
    ("PY09", "No other function besides 'main'",
     "Every function is named 'main'; break the program into helper functions."),
    ("PY10", "Nested function declaration",
     "Function '{name}' is declared inside '{function}'; declare all functions at module level."),
    ("PY11", "Nested 'return' statement",
     "Nested 'return' in function '{function}'; return once, at the end of the function."),
    ("PY12", "Multiple 'return' statements",
     "Function '{function}' has more than one 'return' statement."),
    ("PY13", "Co-recursive call to 'main'",
     "Function '{function}' calls 'main'; only the top level should call 'main'."),
    ("PY14", "Recursive function call",
     "Function '{function}' calls itself; use a loop instead of recursion."),
    ("PY15", "Calls to 'quit' or 'exit'",
     "Call to '{name}'; let the program end by returning from 'main' instead."),
    ("PY16", "Has magic numbers",
     "Magic number {name} in function '{function}'; give it a name as a constant."),
]

_JAVA_RULES = [
    ("JV01", "Attributes should be 'private' or 'public static final'",
     "Attribute '{name}' must be 'private', or 'public static final' if it is a constant."),
    ("JV02", "Attribute name should have a preceding underscore",
     "Attribute '{name}' should be named with a leading underscore."),
    ("JV03", "Final attribute's name should be in all-caps",
     "Constant attribute '{name}' should be named in ALL_CAPS."),
    ("JV04", "One attribute declaration per line",
     "Multiple attributes declared in one statement; declare one per line."),
    ("JV05", "No initializer block",
     "Initializer blocks are not allowed; initialize fields in a constructor."),
    ("JV06", "Has magic numbers",
     "Magic number {name} in method '{function}'; declare it as a 'final' constant."),
    ("JV07", "Multiple 'return' statements",
     "Method '{function}' has more than one 'return' statement."),
    ("JV08", "Break statements",
     "Method '{function}' uses 'break'; fold the exit condition into the loop condition instead."),
    ("JV09", "Continue statements",
     "Method '{function}' uses 'continue'; restructure the loop body with 'if' instead."),
    ("JV10", "Methods are limited to 30 statements",
     "Method '{function}' has more than 30 statements; split it into smaller methods."),
    ("JV11", "'instanceof' operator",
     "'instanceof' is not allowed in method '{function}'."),
    ("JV12", "Ternary operator",
     "Ternary operator in method '{function}'; use an 'if' statement."),
    ("JV13", "Labeled statement",
     "Labeled statement in method '{function}'; restructure the loops instead."),
    ("JV14", "Lambda expression",
     "Lambda expression in method '{function}'; write a named method instead."),
    ("JV15", "On-the-fly local variable declaration",
     "Variable '{name}' declared after other statements; declare locals at the top of the method."),
    ("JV16", "'if' statement has block",
     "'if' needs a braced block as its body."),
    ("JV17", "'while' loop has block",
     "'while' needs a braced block as its body."),
    ("JV18", "'for' loop has block",
     "'for' needs a braced block as its body."),
    ("JV19", "Unconventional C-style 'for' loop",
     "Unconventional 'for' header; use 'for (<declaration>; <comparison>; <increment>)'."),
    ("JV20", "One local variable declared per line",
     "Multiple local variables declared in one statement; declare one per line."),
]

PYTHON_RULES = tuple(RuleId(c, "python", t, m) for c, t, m in _PYTHON_RULES)
JAVA_RULES = tuple(RuleId(c, "java", t, m) for c, t, m in _JAVA_RULES)
ALL_RULES = PYTHON_RULES + JAVA_RULES
RULES_BY_CODE = {r.code: r for r in ALL_RULES}


def rules_for(language: str | None) -> tuple[RuleId, ...]:
    if language is None:
        return ALL_RULES
    if language == "python":
        return PYTHON_RULES
    if language == "java":
        return JAVA_RULES
    raise ValueError(f"unsupported language: {language!r}")


def catalog_json(language: str | None = None) -> str:
    """Machine-readable catalog listing."""
    entries = [
        {"code": r.code, "title": r.title, "language": r.language, "message_template": r.template}
        for r in rules_for(language)
    ]
    return json.dumps(entries, ensure_ascii=False)
