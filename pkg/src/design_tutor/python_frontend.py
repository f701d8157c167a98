"""Python frontend: stdlib `ast` parse, then normalization into the shared tree.

Covered subset: module statements, `def` (name + params), assignments and
augmented assignments, if/elif/else, while, for-each, return, break,
continue, pass, global, expression statements, simple-name calls, binary /
unary / comparison operators, number literals, list displays. Anything
else that still parses becomes OtherStmt/OtherExpr with its recognizable
children preserved.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass

from .tree import Node, NodeKind, Program, Span


@dataclass(frozen=True)
class ParseFailure:
    """Why a source file was rejected; unparseable input is never linted."""

    message: str
    span: Span | None = None

    def __post_init__(self) -> None:
        if not self.message:
            raise ValueError("ParseFailure.message must be non-empty")


def parse_python(source: str, source_name: str = "<string>") -> Program | ParseFailure:
    try:
        module = ast.parse(source)
    except (SyntaxError, ValueError) as exc:
        return _failure_from_syntax_error(exc)
    builder = _Builder(source)
    root = builder.module(module)
    return Program("python", root, source_name)


def _failure_from_syntax_error(exc: Exception) -> ParseFailure:
    if isinstance(exc, SyntaxError) and exc.lineno:
        line = max(1, exc.lineno)
        col = max(1, (exc.offset or 1))
        span = Span(line, col, max(line, exc.end_lineno or line), max(col, exc.end_offset or col))
        return ParseFailure(exc.msg or "syntax error", span)
    return ParseFailure(str(exc) or "syntax error")


class _Builder:
    def __init__(self, source: str):
        self.lines = source.splitlines() or [""]

    # -- spans ----------------------------------------------------------

    def span(self, node: ast.AST) -> Span:
        line = getattr(node, "lineno", 1)
        col = getattr(node, "col_offset", 0) + 1
        end_line = getattr(node, "end_lineno", None) or line
        end_col = getattr(node, "end_col_offset", None) or col
        return Span(line, col, end_line, max(1, end_col))

    def text_at(self, span: Span) -> str:
        if span.line_start == span.line_end:
            return self.lines[span.line_start - 1][span.col_start - 1 : span.col_end]
        parts = [self.lines[span.line_start - 1][span.col_start - 1 :]]
        parts.extend(self.lines[i] for i in range(span.line_start, span.line_end - 1))
        parts.append(self.lines[span.line_end - 1][: span.col_end])
        return "\n".join(parts)

    def suite(self, stmts: list[ast.stmt]) -> Node:
        children = self.statements(stmts)
        first, last = children[0].span, children[-1].span
        span = Span(first.line_start, first.col_start, last.line_end, last.col_end)
        return Node(NodeKind.BLOCK, span, children=children)

    # -- statements -----------------------------------------------------

    def module(self, mod: ast.Module) -> Node:
        children = self.statements(mod.body)
        if children:
            span = Span(1, 1, children[-1].span.line_end, children[-1].span.col_end)
        else:
            span = Span(1, 1, 1, 1)
        return Node(NodeKind.MODULE, span, children=children)

    def statements(self, stmts: list[ast.stmt]) -> list[Node]:
        """Normalize a statement list; `global a, b` expands to one
        GlobalStmt sibling per declared name, each anchored to its name."""
        out: list[Node] = []
        for stmt in stmts:
            if isinstance(stmt, ast.Global):
                span = self.span(stmt)
                for n, name_span in zip(stmt.names, self._global_name_spans(stmt, span)):
                    node = Node(NodeKind.GLOBAL_STMT, name_span, name=n)
                    node.is_statement = True
                    out.append(node)
            else:
                out.append(self.statement(stmt))
        return out

    def _global_name_spans(self, stmt: ast.Global, span: Span) -> list[Span]:
        if span.line_start != span.line_end:
            return [span] * len(stmt.names)
        line = self.lines[span.line_start - 1]
        spans, search_from = [], span.col_start - 1 + len("global")
        for name in stmt.names:
            at = line.find(name, search_from)
            if at < 0:
                spans.append(span)
                continue
            spans.append(Span(span.line_start, at + 1, span.line_start, at + len(name)))
            search_from = at + len(name)
        return spans

    def statement(self, stmt: ast.stmt) -> Node:
        node = self._statement(stmt)
        node.is_statement = True
        return node

    def _statement(self, stmt: ast.stmt) -> Node:
        span = self.span(stmt)
        if isinstance(stmt, ast.FunctionDef):
            args = stmt.args
            n_params = (
                len(args.posonlyargs) + len(args.args) + len(args.kwonlyargs)
                + (1 if args.vararg else 0) + (1 if args.kwarg else 0)
            )
            return Node(
                NodeKind.FUNCTION_DEF,
                span,
                name=stmt.name,
                children=self.statements(stmt.body),
                param_count=n_params,
            )
        if isinstance(stmt, (ast.Assign, ast.AugAssign, ast.AnnAssign)):
            if isinstance(stmt, ast.Assign):
                parts = [*stmt.targets, stmt.value]
            else:
                parts = [stmt.target] + ([stmt.value] if stmt.value else [])
            return Node(NodeKind.ASSIGN, span, children=[self.expression(e) for e in parts])
        if isinstance(stmt, ast.If):
            children = [self.expression(stmt.test), self.suite(stmt.body)]
            if stmt.orelse:
                children.append(self.suite(stmt.orelse))
            return Node(NodeKind.IF, span, children=children)
        if isinstance(stmt, ast.While):
            children = [self.expression(stmt.test), self.suite(stmt.body)]
            if stmt.orelse:
                children.append(self.suite(stmt.orelse))
            return Node(NodeKind.WHILE, span, children=children)
        if isinstance(stmt, ast.For):
            children = [
                self.expression(stmt.target),
                self.expression(stmt.iter),
                self.suite(stmt.body),
            ]
            if stmt.orelse:
                children.append(self.suite(stmt.orelse))
            return Node(NodeKind.FOR_EACH, span, children=children)
        if isinstance(stmt, ast.Return):
            children = [self.expression(stmt.value)] if stmt.value else []
            return Node(NodeKind.RETURN, span, children=children)
        if isinstance(stmt, ast.Break):
            return Node(NodeKind.BREAK, span)
        if isinstance(stmt, ast.Continue):
            return Node(NodeKind.CONTINUE, span)
        if isinstance(stmt, ast.Pass):
            return Node(NodeKind.PASS, span)
        if isinstance(stmt, ast.Global):
            return Node(NodeKind.GLOBAL_STMT, span, name=stmt.names[0])
        if isinstance(stmt, ast.Expr):
            return Node(NodeKind.EXPR_STMT, span, children=[self.expression(stmt.value)])
        # out of subset: keep the statement, normalize what is recognizable
        return Node(NodeKind.OTHER_STMT, span, children=self._generic_children(stmt))

    # -- expressions ------------------------------------------------------

    def expression(self, expr: ast.expr) -> Node:
        span = self.span(expr)
        if isinstance(expr, ast.Call):
            name = expr.func.id if isinstance(expr.func, ast.Name) else None
            children = [self.expression(expr.func)]
            children.extend(self.expression(a) for a in expr.args)
            children.extend(self.expression(kw.value) for kw in expr.keywords)
            return Node(NodeKind.CALL, span, name=name, children=children)
        if isinstance(expr, ast.UnaryOp):
            folded = self._folded_negative(expr, span)
            if folded is not None:
                return folded
            return Node(NodeKind.UNARY_OP, span, children=[self.expression(expr.operand)])
        if isinstance(expr, (ast.BinOp, ast.BoolOp, ast.Compare)):
            if isinstance(expr, ast.BinOp):
                parts = [expr.left, expr.right]
            elif isinstance(expr, ast.BoolOp):
                parts = list(expr.values)
            else:
                parts = [expr.left, *expr.comparators]
            return Node(NodeKind.BINARY_OP, span, children=[self.expression(p) for p in parts])
        if isinstance(expr, ast.Constant):
            if isinstance(expr.value, (int, float, complex)) and not isinstance(expr.value, bool):
                return Node(NodeKind.NUMBER_LITERAL, span, literal_value=self.text_at(span))
            return Node(NodeKind.OTHER_EXPR, span)
        return Node(NodeKind.OTHER_EXPR, span, children=self._generic_children(expr))

    def _folded_negative(self, expr: ast.UnaryOp, span: Span) -> Node | None:
        """`-3` parses as USub(3); fold it into one negative literal when the
        source really is a sign glued to a number."""
        if not isinstance(expr.op, ast.USub) or not isinstance(expr.operand, ast.Constant):
            return None
        value = expr.operand.value
        if isinstance(value, bool) or not isinstance(value, (int, float, complex)):
            return None
        text = self.text_at(span)
        if text.startswith("-") and "(" not in text:
            return Node(NodeKind.NUMBER_LITERAL, span, literal_value=text)
        return None

    def _generic_children(self, node: ast.AST) -> list[Node]:
        children: list[Node] = []
        for child in ast.iter_child_nodes(node):
            if isinstance(child, ast.stmt):
                children.append(self.statement(child))
            elif isinstance(child, ast.expr):
                children.append(self.expression(child))
        return children
