"""The sixteen Python design rules (PY01-PY16).

Each check evaluates one group of related rules over a normalized
Python program and yields raw mistakes; ordering and dedup are the
engine's job.
"""

from __future__ import annotations

from .catalog import MAGIC_ALLOWED, RULES_BY_CODE
from .report import Mistake, render_mistake
from .tree import Node, NodeKind, Program, parse_number

_FORBIDDEN_STMT_RULES = {
    NodeKind.GLOBAL_STMT: "PY01",
    NodeKind.BREAK: "PY02",
    NodeKind.CONTINUE: "PY03",
    NodeKind.PASS: "PY04",
}


def _mk(code: str, function: str | None, node: Node | None, name: str | None = None) -> Mistake:
    return render_mistake(RULES_BY_CODE[code], function, node.span if node else None, name)


def check_forbidden_statements(program: Program) -> list[Mistake]:
    """PY01-PY04: global/break/continue/pass inside any function."""
    out = []
    for node in program.preorder():
        code = _FORBIDDEN_STMT_RULES.get(node.kind)
        if code is None:
            continue
        fn = program.nearest_function(node)
        if fn is not None:
            out.append(_mk(code, fn.name, node, name=node.name))
    return out


def check_main_conventions(program: Program) -> list[Mistake]:
    """PY05-PY09: the program-shape rules around 'main'."""
    funcs = [n for n in program.preorder() if n.kind is NodeKind.FUNCTION_DEF]
    mains = [f for f in funcs if f.name == "main"]
    out = []
    if not mains:
        out.append(_mk("PY05", None, None))
    top_level_main_call = any(
        n.kind is NodeKind.CALL and n.name == "main" and program.nearest_function(n) is None
        for n in program.preorder()
    )
    if not top_level_main_call:
        out.append(_mk("PY06", None, None))
    if mains and funcs[0].name != "main":
        out.append(_mk("PY07", None, None))
    if any(f.param_count for f in mains):
        out.append(_mk("PY08", None, None))
    if funcs and len(mains) == len(funcs):
        out.append(_mk("PY09", None, None))
    return out


def check_nesting(program: Program) -> list[Mistake]:
    """PY10 nested def, PY11 nested return, PY12 multiple returns."""
    out = []
    returns_in: dict[int, list[Node]] = {}
    for node in program.preorder():
        if node.kind is NodeKind.FUNCTION_DEF:
            enclosing = program.nearest_function(node)
            if enclosing is not None:
                out.append(_mk("PY10", enclosing.name, node, name=node.name))
        elif node.kind is NodeKind.RETURN:
            fn = program.nearest_function(node)
            if fn is None:
                continue
            returns_in.setdefault(fn.id, []).append(node)
            if not program.child(fn, node):
                out.append(_mk("PY11", fn.name, node))
    for node in program.preorder():
        if node.kind is NodeKind.FUNCTION_DEF and len(returns_in.get(node.id, ())) >= 2:
            out.append(_mk("PY12", node.name, node))
    return out


def check_calls(program: Program) -> list[Mistake]:
    """PY13 call to main from elsewhere, PY14 recursion, PY15 quit/exit."""
    out = []
    for node in program.preorder():
        if node.kind is not NodeKind.CALL or node.name is None:
            continue
        fn = program.nearest_function(node)
        if node.name == "main" and fn is not None and fn.name != "main":
            out.append(_mk("PY13", fn.name, node))
        for anc in program.ancestors(node):
            if anc.kind is NodeKind.FUNCTION_DEF and anc.name == node.name:
                out.append(_mk("PY14", anc.name, node))
        if node.name in ("quit", "exit"):
            out.append(_mk("PY15", fn.name if fn else None, node, name=node.name))
    return out


def check_magic_numbers(program: Program) -> list[Mistake]:
    """PY16: number literals outside the allowed set, inside functions."""
    out = []
    for node in program.preorder():
        if node.kind is not NodeKind.NUMBER_LITERAL:
            continue
        fn = program.nearest_function(node)
        if fn is None:
            continue
        value = parse_number(node.literal_value or "")
        if value is None or value not in MAGIC_ALLOWED:
            out.append(_mk("PY16", fn.name, node, name=node.literal_value))
    return out


ALL_CHECKS = (
    check_forbidden_statements,
    check_main_conventions,
    check_nesting,
    check_calls,
    check_magic_numbers,
)


def check_program(program: Program) -> list[Mistake]:
    out: list[Mistake] = []
    for check in ALL_CHECKS:
        out.extend(check(program))
    return out
