"""The twenty Java design rules (JV01-JV20)."""

from __future__ import annotations

import re

from .catalog import MAGIC_ALLOWED, RULES_BY_CODE
from .report import Mistake, render_mistake
from .tree import Node, NodeKind, Program, parse_number

_ALL_CAPS_RE = re.compile(r"^[A-Z0-9_]+$")

_EXPRESSION_RULES = {
    NodeKind.INSTANCE_OF_OP: "JV11",
    NodeKind.TERNARY_OP: "JV12",
    NodeKind.LABELED_STMT: "JV13",
    NodeKind.LAMBDA_EXPR: "JV14",
}


def _mk(code: str, function: str | None, node: Node | None, name: str | None = None) -> Mistake:
    return render_mistake(RULES_BY_CODE[code], function, node.span if node else None, name)


def _field_declarators(row: Node) -> list[Node]:
    """Named declarators of a field row; multi-declarator rows keep their
    DeclaratorGroup wrapper."""
    if row.children and row.children[0].kind is NodeKind.DECLARATOR_GROUP:
        return list(row.children[0].children)
    return [row]


def check_attributes(program: Program) -> list[Mistake]:
    """JV01-JV05: attribute visibility, naming, grouping, initializer blocks."""
    out = []
    for cls in program.preorder():
        if cls.kind is not NodeKind.CLASS_DEF:
            continue
        for member in cls.children:
            if member.kind is NodeKind.INITIALIZER_BLOCK:
                out.append(_mk("JV05", None, member))
                continue
            if member.kind is not NodeKind.FIELD_DECL:
                continue
            declarators = _field_declarators(member)
            if len(declarators) >= 2:
                out.append(_mk("JV04", None, member))
            for decl in declarators:
                mods = decl.modifiers or frozenset()
                static_final = {"static", "final"} <= mods
                if "private" not in mods and not {"public", "static", "final"} <= mods:
                    out.append(_mk("JV01", None, decl, name=decl.name))
                if static_final:
                    if not _ALL_CAPS_RE.match(decl.name or ""):
                        out.append(_mk("JV03", None, decl, name=decl.name))
                elif not (decl.name or "").startswith("_"):
                    out.append(_mk("JV02", None, decl, name=decl.name))
    return out


def check_method_limits(program: Program) -> list[Mistake]:
    """JV07-JV10: return count, break/continue, statement budget."""
    out = []
    returns_in: dict[int, int] = {}
    for node in program.preorder():
        if node.kind in (NodeKind.BREAK, NodeKind.CONTINUE):
            fn = program.nearest_function(node)
            if fn is not None:
                code = "JV08" if node.kind is NodeKind.BREAK else "JV09"
                out.append(_mk(code, fn.name, node))
        elif node.kind is NodeKind.RETURN:
            fn = program.nearest_function(node)
            if fn is not None:
                returns_in[fn.id] = returns_in.get(fn.id, 0) + 1
    for node in program.preorder():
        if node.kind is not NodeKind.METHOD_DEF:
            continue
        if returns_in.get(node.id, 0) >= 2:
            out.append(_mk("JV07", node.name, node))
        if program.stmt_count(node) > 30:
            out.append(_mk("JV10", node.name, node))
    return out


def check_forbidden_expressions(program: Program) -> list[Mistake]:
    """JV11-JV14: instanceof, ternary, labels, lambdas under any method."""
    out = []
    for node in program.preorder():
        code = _EXPRESSION_RULES.get(node.kind)
        if code is None:
            continue
        fn = program.nearest_function(node)
        if fn is not None:
            out.append(_mk(code, fn.name, node))
    return out


def _first_declarator_name(row: Node) -> str | None:
    if row.name is not None:
        return row.name
    if row.children and row.children[0].kind is NodeKind.DECLARATOR_GROUP:
        group = row.children[0]
        if group.children:
            return group.children[0].name
    return None


def check_declaration_placement(program: Program) -> list[Mistake]:
    """JV15 declarations after other statements, JV20 multi-declarator rows."""
    out = []
    for node in program.preorder():
        if node.kind is NodeKind.METHOD_DEF:
            body = program.body_statements(node)
            seen_non_decl = False
            for stmt in body:
                if stmt.kind is NodeKind.LOCAL_VAR_DECL:
                    if seen_non_decl:
                        out.append(_mk("JV15", node.name, stmt, name=_first_declarator_name(stmt)))
                else:
                    seen_non_decl = True
        elif (
            node.kind is NodeKind.DECLARATOR_GROUP
            and len(node.children) >= 2
            and program.parent(node) is not None
            and program.parent(node).kind is NodeKind.LOCAL_VAR_DECL
        ):
            row = program.parent(node)
            fn = program.nearest_function(row)
            out.append(_mk("JV20", fn.name if fn else None, row))
    return out


def check_control_blocks(program: Program) -> list[Mistake]:
    """JV16-JV18 brace-less bodies, JV19 unconventional C-style for."""
    out = []
    for node in program.preorder():
        fn = program.nearest_function(node)
        if fn is None:
            continue
        if node.kind is NodeKind.IF:
            branches = node.children[1:3]
            offending = [
                b for i, b in enumerate(branches)
                if b.kind is not NodeKind.BLOCK and not (i == 1 and b.kind is NodeKind.IF)
            ]
            if offending:
                out.append(_mk("JV16", fn.name, node))
        elif node.kind is NodeKind.WHILE:
            if node.children[1].kind is not NodeKind.BLOCK:
                out.append(_mk("JV17", fn.name, node))
        elif node.kind is NodeKind.FOR_EACH:
            if node.children[2].kind is not NodeKind.BLOCK:
                out.append(_mk("JV18", fn.name, node))
        elif node.kind is NodeKind.C_STYLE_FOR:
            init, cond, update, body = node.children
            if body.kind is not NodeKind.BLOCK:
                out.append(_mk("JV18", fn.name, node))
            conventional = (
                init.kind is NodeKind.LOCAL_VAR_DECL
                and cond.kind is NodeKind.BINARY_OP
                and update.kind is NodeKind.UNARY_OP
            )
            if not conventional:
                out.append(_mk("JV19", fn.name, node))
    return out


def _in_final_declaration(program: Program, node: Node) -> bool:
    for anc in program.ancestors(node):
        if anc.kind in (NodeKind.LOCAL_VAR_DECL, NodeKind.FIELD_DECL):
            if anc.modifiers and "final" in anc.modifiers:
                return True
    return False


def check_magic_numbers_java(program: Program) -> list[Mistake]:
    """JV06: number literals outside the allowed set, except in finals."""
    out = []
    for node in program.preorder():
        if node.kind is not NodeKind.NUMBER_LITERAL:
            continue
        fn = program.nearest_function(node)
        if fn is None or _in_final_declaration(program, node):
            continue
        value = parse_number(node.literal_value or "")
        if value is None or value not in MAGIC_ALLOWED:
            out.append(_mk("JV06", fn.name, node, name=node.literal_value))
    return out


ALL_CHECKS = (
    check_attributes,
    check_method_limits,
    check_forbidden_expressions,
    check_declaration_placement,
    check_control_blocks,
    check_magic_numbers_java,
)


def check_program(program: Program) -> list[Mistake]:
    out: list[Mistake] = []
    for check in ALL_CHECKS:
        out.extend(check(program))
    return out
