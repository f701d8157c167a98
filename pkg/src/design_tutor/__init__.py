"""Design tutor: rule-based design-quality feedback for student Python
and Java programs, plus the corpus statistics around it."""

from .catalog import ALL_RULES, JAVA_RULES, PYTHON_RULES, RULES_BY_CODE, RuleId, catalog_json
from .engine import lint, render_json, render_text, rule_catalog
from .java_frontend import parse_java
from .python_frontend import ParseFailure, parse_python
from .report import Mistake, Report
from .tree import Node, NodeKind, Program, Span

__version__ = "0.1.0"

__all__ = [
    "ALL_RULES",
    "JAVA_RULES",
    "PYTHON_RULES",
    "RULES_BY_CODE",
    "RuleId",
    "catalog_json",
    "lint",
    "render_json",
    "render_text",
    "rule_catalog",
    "parse_java",
    "parse_python",
    "ParseFailure",
    "Mistake",
    "Report",
    "Node",
    "NodeKind",
    "Program",
    "Span",
    "__version__",
]
