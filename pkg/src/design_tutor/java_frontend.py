"""Java frontend: lexer + recursive-descent parser for the supported subset.

The subset matches second-semester intro assignments: one or more
top-level classes with fields (modifiers, multi-declarator rows kept as
DeclaratorGroup), initializer blocks, methods/constructors, the usual
statements (if/while/for/for-each, return, break/continue, labels,
locals, blocks) and expressions (assignment, ternary, instanceof,
lambda, unary/binary operators, calls, literals). Anything else is a
ParseFailure — unparseable files are rejected, not guessed at.
"""

from __future__ import annotations

import re

from .python_frontend import ParseFailure
from .tree import Node, NodeKind, Program, Span

PRIMITIVE_TYPES = frozenset(
    {"int", "long", "short", "byte", "char", "boolean", "float", "double"}
)
MODIFIER_WORDS = ("public", "private", "protected", "static", "final")
KEYWORDS = frozenset(
    {
        "class", "void", "if", "else", "while", "for", "return", "break",
        "continue", "new", "instanceof", "true", "false", "null", "this",
        "super", "package", "import", "throw", "extends", "implements",
        *MODIFIER_WORDS, *PRIMITIVE_TYPES,
    }
)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+|//[^\n]*|/\*.*?\*/)
  | (?P<number>0[xX][0-9a-fA-F_]+[lL]?
              |0[bB][01_]+[lL]?
              |(?:\d[\d_]*\.[\d_]*|\.\d[\d_]*|\d[\d_]*)(?:[eE][+-]?\d+)?[fFdDlL]?)
  | (?P<string>"(?:\\.|[^"\\\n])*")
  | (?P<char>'(?:\\(?:u[0-9a-fA-F]{4}|.)|[^'\\\n])')
  | (?P<word>[A-Za-z_$][A-Za-z0-9_$]*)
  | (?P<op>>>>=|>>>|>>=|<<=|->|\+\+|--|<=|>=|==|!=|&&|\|\||\+=|-=|\*=|/=|%=|&=|\|=|\^=|<<|>>|::
          |[-+*/%=<>!&|^~?:;,.(){}\[\]@])
    """,
    re.VERBOSE | re.DOTALL,
)


class _Token:
    __slots__ = ("type", "text", "line", "col", "end_line", "end_col")

    def __init__(self, type_: str, text: str, line: int, col: int, end_line: int, end_col: int):
        self.type = type_
        self.text = text
        self.line = line
        self.col = col
        self.end_line = end_line
        self.end_col = end_col

    def __repr__(self) -> str:
        return f"Token({self.type},{self.text!r}@{self.line}:{self.col})"


class _JavaSyntaxError(Exception):
    def __init__(self, message: str, token: _Token | None):
        super().__init__(message)
        self.message = message
        self.token = token


def _lex(source: str) -> list[_Token]:
    line_starts = [0]
    for m in re.finditer("\n", source):
        line_starts.append(m.end())

    def locate(offset: int) -> tuple[int, int]:
        lo, hi = 0, len(line_starts) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if line_starts[mid] <= offset:
                lo = mid
            else:
                hi = mid - 1
        return lo + 1, offset - line_starts[lo] + 1

    tokens: list[_Token] = []
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            line, col = locate(pos)
            raise _JavaSyntaxError(
                f"unexpected character {source[pos]!r}",
                _Token("error", source[pos], line, col, line, col),
            )
        pos = m.end()
        group = m.lastgroup
        if group == "ws":
            continue
        text = m.group()
        line, col = locate(m.start())
        end_line, end_col = locate(m.end() - 1)
        type_ = group if group != "word" else ("keyword" if text in KEYWORDS else "ident")
        tokens.append(_Token(type_, text, line, col, end_line, end_col))
    if tokens:
        last = tokens[-1]
        eof = _Token("eof", "", last.end_line, last.end_col, last.end_line, last.end_col)
    else:
        eof = _Token("eof", "", 1, 1, 1, 1)
    tokens.append(eof)
    return tokens


def parse_java(source: str, source_name: str = "<string>") -> Program | ParseFailure:
    try:
        tokens = _lex(source)
        root = _Parser(tokens).compilation_unit()
    except _JavaSyntaxError as exc:
        span = None
        if exc.token is not None:
            t = exc.token
            span = Span(t.line, t.col, t.end_line, t.end_col)
        return ParseFailure(exc.message, span)
    return Program("java", root, source_name)


def _span_of(first: _Token, last: _Token) -> Span:
    return Span(first.line, first.col, last.end_line, last.end_col)


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    # -- token plumbing -------------------------------------------------

    def peek(self, offset: int = 0) -> _Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def at(self, text: str, offset: int = 0) -> bool:
        return self.peek(offset).text == text and self.peek(offset).type in ("op", "keyword")

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.type != "eof":
            self.pos += 1
        return tok

    def expect(self, text: str) -> _Token:
        if not self.at(text):
            raise _JavaSyntaxError(f"expected {text!r}, found {self.peek().text!r}", self.peek())
        return self.advance()

    def expect_ident(self) -> _Token:
        if self.peek().type != "ident":
            raise _JavaSyntaxError(f"expected identifier, found {self.peek().text!r}", self.peek())
        return self.advance()

    def prev(self) -> _Token:
        return self.tokens[self.pos - 1]

    def fail(self, message: str) -> _JavaSyntaxError:
        return _JavaSyntaxError(message, self.peek())

    # -- top level --------------------------------------------------------

    def compilation_unit(self) -> Node:
        children: list[Node] = []
        first = self.peek()
        while self.peek().type != "eof":
            if self.at("package") or self.at("import"):
                children.append(self.package_or_import())
            else:
                children.append(self.class_decl())
        if children:
            span = Span(1, 1, children[-1].span.line_end, children[-1].span.col_end)
        elif first.type != "eof":
            span = _span_of(first, first)
        else:
            span = Span(1, 1, 1, 1)
        return Node(NodeKind.MODULE, span, children=children)

    def package_or_import(self) -> Node:
        start = self.advance()
        if self.at("static"):
            self.advance()
        self.expect_ident()
        while self.at("."):
            self.advance()
            if self.at("*"):
                self.advance()
                break
            self.expect_ident()
        end = self.expect(";")
        node = Node(NodeKind.OTHER_STMT, _span_of(start, end))
        node.is_statement = True
        return node

    def modifiers(self) -> tuple[frozenset[str], _Token | None]:
        mods: set[str] = set()
        first: _Token | None = None
        while self.peek().text in MODIFIER_WORDS and self.peek().type == "keyword":
            tok = self.advance()
            first = first or tok
            mods.add(tok.text)
        return frozenset(mods), first

    def class_decl(self) -> Node:
        mods, first_tok = self.modifiers()
        start = first_tok or self.peek()
        self.expect("class")
        name = self.expect_ident()
        if self.at("extends"):
            self.advance()
            self.type_name()
        if self.at("implements"):
            self.advance()
            self.type_name()
            while self.at(","):
                self.advance()
                self.type_name()
        self.expect("{")
        members: list[Node] = []
        while not self.at("}"):
            if self.peek().type == "eof":
                raise self.fail("unterminated class body")
            member = self.class_member(name.text)
            if member is not None:
                members.append(member)
        end = self.expect("}")
        return Node(
            NodeKind.CLASS_DEF,
            _span_of(start, end),
            name=name.text,
            modifiers=mods,
            children=members,
        )

    def class_member(self, class_name: str) -> Node | None:
        if self.at(";"):
            self.advance()
            return None
        mods, first_tok = self.modifiers()
        start = first_tok or self.peek()
        if self.at("{"):
            block = self.block()
            return Node(
                NodeKind.INITIALIZER_BLOCK,
                Span(start.line, start.col, block.span.line_end, block.span.col_end),
                modifiers=mods,
                children=[block],
            )
        if self.at("class"):
            raise self.fail("nested classes are not supported")
        # constructor: ClassName (
        if self.peek().type == "ident" and self.peek().text == class_name and self.at("(", 1):
            name = self.advance()
            return self.method_rest(mods, start, name)
        if self.at("void"):
            self.advance()
            name = self.expect_ident()
            return self.method_rest(mods, start, name)
        self.type_name()
        name = self.expect_ident()
        if self.at("("):
            return self.method_rest(mods, start, name)
        return self.field_rest(mods, start, name)

    def method_rest(self, mods: frozenset[str], start: _Token, name: _Token) -> Node:
        self.expect("(")
        n_params = 0
        while not self.at(")"):
            if n_params:
                self.expect(",")
            if self.at("final"):
                self.advance()
            self.type_name()
            self.expect_ident()
            while self.at("["):
                self.advance()
                self.expect("]")
            n_params += 1
        self.expect(")")
        body = self.block()
        return Node(
            NodeKind.METHOD_DEF,
            Span(start.line, start.col, body.span.line_end, body.span.col_end),
            name=name.text,
            modifiers=mods,
            children=[body],
            param_count=n_params,
        )

    def field_rest(self, mods: frozenset[str], start: _Token, first_name: _Token) -> Node:
        declarators = [self.declarator_rest(first_name, mods)]
        while self.at(","):
            self.advance()
            declarators.append(self.declarator_rest(self.expect_ident(), mods))
        end = self.expect(";")
        span = _span_of(start, end)
        if len(declarators) == 1:
            row = declarators[0]
            row.kind = NodeKind.FIELD_DECL
            row.span = span
            return row
        for d in declarators:
            d.kind = NodeKind.FIELD_DECL
        group = Node(
            NodeKind.DECLARATOR_GROUP,
            Span(
                declarators[0].span.line_start,
                declarators[0].span.col_start,
                declarators[-1].span.line_end,
                declarators[-1].span.col_end,
            ),
            children=declarators,
        )
        return Node(NodeKind.FIELD_DECL, span, modifiers=mods, children=[group])

    def declarator_rest(self, name: _Token, mods: frozenset[str]) -> Node:
        """Parse `[ ]* [= init]` after a declarator name; kind fixed by caller."""
        last = name
        while self.at("["):
            self.advance()
            last = self.expect("]")
        children: list[Node] = []
        if self.at("="):
            self.advance()
            init = self.variable_initializer()
            children.append(init)
            return Node(
                NodeKind.LOCAL_VAR_DECL,
                Span(name.line, name.col, init.span.line_end, init.span.col_end),
                name=name.text,
                modifiers=mods,
                children=children,
            )
        return Node(
            NodeKind.LOCAL_VAR_DECL,
            _span_of(name, last),
            name=name.text,
            modifiers=mods,
        )

    def variable_initializer(self) -> Node:
        if self.at("{"):
            start = self.advance()
            items: list[Node] = []
            while not self.at("}"):
                if items:
                    self.expect(",")
                    if self.at("}"):
                        break
                items.append(self.variable_initializer())
            end = self.expect("}")
            return Node(NodeKind.OTHER_EXPR, _span_of(start, end), children=items)
        return self.expression()

    # -- types -----------------------------------------------------------

    def type_name(self, generics: bool = True) -> None:
        """Consume a type reference (primitive or qualified, array
        suffixes, and - unless disabled - generic arguments)."""
        if self.peek().text in PRIMITIVE_TYPES and self.peek().type == "keyword":
            self.advance()
        elif self.peek().type == "ident":
            self.advance()
            while self.at(".") and self.peek(1).type == "ident":
                self.advance()
                self.advance()
        else:
            raise self.fail(f"expected a type, found {self.peek().text!r}")
        if generics and self.at("<"):
            self.skip_generic_args()
        while self.at("[") and self.at("]", 1):
            self.advance()
            self.advance()

    def skip_generic_args(self) -> None:
        depth = 0
        while True:
            tok = self.peek()
            if tok.type == "eof":
                raise self.fail("unterminated generic arguments")
            if tok.text == "<":
                depth += 1
            elif tok.text == ">":
                depth -= 1
            elif tok.text == ">>":
                depth -= 2
            elif tok.text == ">>>":
                depth -= 3
            elif tok.text in (";", "{", "}"):
                raise self.fail("malformed generic arguments")
            self.advance()
            if depth <= 0:
                return

    def looks_like_decl(self) -> bool:
        """Lookahead: does a local-variable declaration start here?"""
        saved = self.pos
        try:
            if self.at("final"):
                self.advance()
            if self.peek().text in PRIMITIVE_TYPES and self.peek().type == "keyword":
                self.type_name()
            elif self.peek().type == "ident":
                self.type_name()
            else:
                return False
            return self.peek().type == "ident"
        except _JavaSyntaxError:
            return False
        finally:
            self.pos = saved

    # -- statements --------------------------------------------------------

    def block(self) -> Node:
        start = self.expect("{")
        stmts: list[Node] = []
        while not self.at("}"):
            if self.peek().type == "eof":
                raise self.fail("unterminated block")
            stmts.append(self.statement())
        end = self.expect("}")
        node = Node(NodeKind.BLOCK, _span_of(start, end), children=stmts)
        node.is_statement = True
        return node

    def statement(self) -> Node:
        node = self._statement()
        node.is_statement = True
        return node

    def _statement(self) -> Node:
        tok = self.peek()
        if self.at("{"):
            return self.block()
        if self.at(";"):
            end = self.advance()
            return Node(NodeKind.OTHER_STMT, _span_of(tok, end))
        if self.at("if"):
            return self.if_statement()
        if self.at("while"):
            self.advance()
            self.expect("(")
            cond = self.expression()
            self.expect(")")
            body = self.statement()
            return Node(
                NodeKind.WHILE,
                Span(tok.line, tok.col, body.span.line_end, body.span.col_end),
                children=[cond, body],
            )
        if self.at("for"):
            return self.for_statement()
        if self.at("return"):
            self.advance()
            children = [] if self.at(";") else [self.expression()]
            end = self.expect(";")
            return Node(NodeKind.RETURN, _span_of(tok, end), children=children)
        if self.at("break") or self.at("continue"):
            kind = NodeKind.BREAK if tok.text == "break" else NodeKind.CONTINUE
            self.advance()
            if self.peek().type == "ident":
                self.advance()
            end = self.expect(";")
            return Node(kind, _span_of(tok, end))
        if self.at("throw"):
            self.advance()
            value = self.expression()
            end = self.expect(";")
            return Node(NodeKind.OTHER_STMT, _span_of(tok, end), children=[value])
        if tok.type == "ident" and self.peek(1).text == ":" and self.peek(1).type == "op":
            name = self.advance()
            self.advance()
            target = self.statement()
            return Node(
                NodeKind.LABELED_STMT,
                Span(name.line, name.col, target.span.line_end, target.span.col_end),
                name=name.text,
                children=[target],
            )
        if self.looks_like_decl():
            decl = self.local_var_decl()
            end = self.expect(";")
            decl.span = Span(decl.span.line_start, decl.span.col_start, end.end_line, end.end_col)
            return decl
        value = self.expression()
        end = self.expect(";")
        return Node(NodeKind.EXPR_STMT, _span_of(tok, end), children=[value])

    def if_statement(self) -> Node:
        start = self.expect("if")
        self.expect("(")
        cond = self.expression()
        self.expect(")")
        then = self.statement()
        children = [cond, then]
        last = then
        if self.at("else"):
            self.advance()
            other = self.statement()
            children.append(other)
            last = other
        return Node(
            NodeKind.IF,
            Span(start.line, start.col, last.span.line_end, last.span.col_end),
            children=children,
        )

    def for_statement(self) -> Node:
        start = self.expect("for")
        self.expect("(")
        foreach = self.try_foreach_header()
        if foreach is not None:
            var_decl, iterable = foreach
            self.expect(")")
            body = self.statement()
            return Node(
                NodeKind.FOR_EACH,
                Span(start.line, start.col, body.span.line_end, body.span.col_end),
                children=[var_decl, iterable, body],
            )
        init = self.for_init_slot()
        self.expect(";")
        cond = self.placeholder() if self.at(";") else self.expression()
        self.expect(";")
        update = self.placeholder() if self.at(")") else self.for_expr_list()
        self.expect(")")
        body = self.statement()
        return Node(
            NodeKind.C_STYLE_FOR,
            Span(start.line, start.col, body.span.line_end, body.span.col_end),
            children=[init, cond, update, body],
        )

    def try_foreach_header(self) -> tuple[Node, Node] | None:
        saved = self.pos
        try:
            mods, first_tok = self.modifiers()
            self.type_name()
            name = self.expect_ident()
            if not self.at(":"):
                raise self.fail("not a for-each header")
            self.advance()
            iterable = self.expression()
        except _JavaSyntaxError:
            self.pos = saved
            return None
        start = first_tok or name
        var_decl = Node(
            NodeKind.LOCAL_VAR_DECL,
            Span(start.line, start.col, name.end_line, name.end_col),
            name=name.text,
            modifiers=mods or None,
        )
        return var_decl, iterable

    def for_init_slot(self) -> Node:
        if self.at(";"):
            return self.placeholder()
        if self.looks_like_decl():
            init = self.local_var_decl()
            init.is_statement = True
            return init
        return self.for_expr_list()

    def for_expr_list(self) -> Node:
        exprs = [self.expression()]
        while self.at(","):
            self.advance()
            exprs.append(self.expression())
        if len(exprs) == 1:
            node = exprs[0]
            node.is_statement = True
            return node
        wrapper = Node(
            NodeKind.OTHER_STMT,
            Span(
                exprs[0].span.line_start,
                exprs[0].span.col_start,
                exprs[-1].span.line_end,
                exprs[-1].span.col_end,
            ),
            children=exprs,
        )
        wrapper.is_statement = True
        return wrapper

    def placeholder(self) -> Node:
        tok = self.peek()
        return Node(NodeKind.OTHER_STMT, _span_of(tok, tok))

    def local_var_decl(self) -> Node:
        mods, first_tok = self.modifiers()
        start = first_tok or self.peek()
        self.type_name()
        declarators = [self.declarator_rest(self.expect_ident(), mods)]
        while self.at(","):
            self.advance()
            declarators.append(self.declarator_rest(self.expect_ident(), mods))
        last = declarators[-1]
        span = Span(start.line, start.col, last.span.line_end, last.span.col_end)
        if len(declarators) == 1:
            row = declarators[0]
            row.span = span
            return row
        group = Node(
            NodeKind.DECLARATOR_GROUP,
            Span(
                declarators[0].span.line_start,
                declarators[0].span.col_start,
                last.span.line_end,
                last.span.col_end,
            ),
            children=declarators,
        )
        return Node(NodeKind.LOCAL_VAR_DECL, span, modifiers=mods, children=[group])

    # -- expressions -------------------------------------------------------

    ASSIGN_OPS = frozenset({"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="})

    def expression(self) -> Node:
        lambda_node = self.try_lambda()
        if lambda_node is not None:
            return lambda_node
        left = self.ternary()
        if self.peek().text in self.ASSIGN_OPS and self.peek().type == "op":
            self.advance()
            right = self.expression()
            return Node(
                NodeKind.ASSIGN,
                Span(left.span.line_start, left.span.col_start, right.span.line_end, right.span.col_end),
                children=[left, right],
            )
        return left

    def try_lambda(self) -> Node | None:
        tok = self.peek()
        if tok.type == "ident" and self.at("->", 1):
            start = self.advance()
            self.advance()
            return self.lambda_body(start)
        if self.at("("):
            close = self.matching_paren(self.pos)
            if close is not None and self.tokens[close + 1].text == "->":
                start = self.peek()
                self.pos = close + 2
                return self.lambda_body(start)
        return None

    def matching_paren(self, open_pos: int) -> int | None:
        depth = 0
        for i in range(open_pos, len(self.tokens)):
            text = self.tokens[i].text
            if self.tokens[i].type == "eof":
                return None
            if text == "(":
                depth += 1
            elif text == ")":
                depth -= 1
                if depth == 0:
                    return i
        return None

    def lambda_body(self, start: _Token) -> Node:
        body = self.block() if self.at("{") else self.expression()
        return Node(
            NodeKind.LAMBDA_EXPR,
            Span(start.line, start.col, body.span.line_end, body.span.col_end),
            children=[body],
        )

    def ternary(self) -> Node:
        cond = self.binary(0)
        if self.at("?"):
            self.advance()
            then = self.expression()
            self.expect(":")
            other = self.ternary()
            return Node(
                NodeKind.TERNARY_OP,
                Span(cond.span.line_start, cond.span.col_start, other.span.line_end, other.span.col_end),
                children=[cond, then, other],
            )
        return cond

    BINARY_LEVELS = (
        ("||",),
        ("&&",),
        ("|",),
        ("^",),
        ("&",),
        ("==", "!="),
        ("<", ">", "<=", ">=", "instanceof"),
        ("<<", ">>", ">>>"),
        ("+", "-"),
        ("*", "/", "%"),
    )

    def binary(self, level: int) -> Node:
        if level >= len(self.BINARY_LEVELS):
            return self.unary()
        ops = self.BINARY_LEVELS[level]
        left = self.binary(level + 1)
        while self.peek().text in ops and self.peek().type in ("op", "keyword"):
            op = self.advance()
            if op.text == "instanceof":
                # plain generic types are illegal after instanceof
                self.type_name(generics=False)
                end = self.prev()
                left = Node(
                    NodeKind.INSTANCE_OF_OP,
                    Span(left.span.line_start, left.span.col_start, end.end_line, end.end_col),
                    children=[left],
                )
                continue
            right = self.binary(level + 1)
            left = Node(
                NodeKind.BINARY_OP,
                Span(left.span.line_start, left.span.col_start, right.span.line_end, right.span.col_end),
                children=[left, right],
            )
        return left

    def unary(self) -> Node:
        tok = self.peek()
        if tok.text in ("+", "-", "!", "~", "++", "--") and tok.type == "op":
            self.advance()
            if (
                tok.text == "-"
                and self.peek().type == "number"
                and tok.end_line == self.peek().line
                and tok.end_col + 1 == self.peek().col
            ):
                number = self.advance()
                return Node(
                    NodeKind.NUMBER_LITERAL,
                    _span_of(tok, number),
                    literal_value="-" + number.text,
                )
            operand = self.unary()
            return Node(
                NodeKind.UNARY_OP,
                Span(tok.line, tok.col, operand.span.line_end, operand.span.col_end),
                children=[operand],
            )
        return self.postfix()

    def postfix(self) -> Node:
        node = self.primary()
        while True:
            tok = self.peek()
            if tok.text in ("++", "--") and tok.type == "op":
                self.advance()
                node = Node(
                    NodeKind.UNARY_OP,
                    Span(node.span.line_start, node.span.col_start, tok.end_line, tok.end_col),
                    children=[node],
                )
            elif self.at("."):
                self.advance()
                self.expect_ident()
                end = self.prev()
                node = Node(
                    NodeKind.OTHER_EXPR,
                    Span(node.span.line_start, node.span.col_start, end.end_line, end.end_col),
                    children=[node],
                )
            elif self.at("("):
                name = None
                if node.kind is NodeKind.OTHER_EXPR and not node.children and node.name is None:
                    name = getattr(node, "_ident", None)
                node = self.call_rest(node, name)
            elif self.at("["):
                self.advance()
                index = self.expression()
                end = self.expect("]")
                node = Node(
                    NodeKind.OTHER_EXPR,
                    Span(node.span.line_start, node.span.col_start, end.end_line, end.end_col),
                    children=[node, index],
                )
            else:
                return node

    def call_rest(self, callee: Node, name: str | None) -> Node:
        self.expect("(")
        args: list[Node] = []
        while not self.at(")"):
            if args:
                self.expect(",")
            args.append(self.expression())
        end = self.expect(")")
        return Node(
            NodeKind.CALL,
            Span(callee.span.line_start, callee.span.col_start, end.end_line, end.end_col),
            name=name,
            children=[callee, *args],
        )

    def primary(self) -> Node:
        tok = self.peek()
        if tok.type == "number":
            self.advance()
            return Node(NodeKind.NUMBER_LITERAL, _span_of(tok, tok), literal_value=tok.text)
        if tok.type in ("string", "char"):
            self.advance()
            return Node(NodeKind.OTHER_EXPR, _span_of(tok, tok))
        if tok.text in ("true", "false", "null", "this", "super") and tok.type == "keyword":
            self.advance()
            return Node(NodeKind.OTHER_EXPR, _span_of(tok, tok))
        if tok.type == "ident":
            self.advance()
            node = Node(NodeKind.OTHER_EXPR, _span_of(tok, tok))
            node._ident = tok.text  # simple-name callee candidate
            return node
        if self.at("new"):
            return self.creation()
        if self.at("("):
            return self.paren_or_cast()
        raise self.fail(f"unexpected token {tok.text!r} in expression")

    def creation(self) -> Node:
        start = self.expect("new")
        self.type_name()
        if self.at("("):
            callee = Node(NodeKind.OTHER_EXPR, _span_of(start, self.prev()))
            node = self.call_rest(callee, None)
            if self.at("{"):
                raise self.fail("anonymous classes are not supported")
            return node
        children: list[Node] = []
        last = self.prev()
        while self.at("["):
            self.advance()
            if not self.at("]"):
                children.append(self.expression())
            last = self.expect("]")
        if self.at("{"):
            init = self.variable_initializer()
            children.extend(init.children)
            return Node(NodeKind.OTHER_EXPR, Span(start.line, start.col, init.span.line_end, init.span.col_end), children=children)
        return Node(NodeKind.OTHER_EXPR, _span_of(start, last), children=children)

    def paren_or_cast(self) -> Node:
        start = self.expect("(")
        if self.is_cast(start):
            self.type_name()
            self.expect(")")
            operand = self.unary()
            return Node(
                NodeKind.OTHER_EXPR,
                Span(start.line, start.col, operand.span.line_end, operand.span.col_end),
                children=[operand],
            )
        inner = self.expression()
        self.expect(")")
        return inner

    def is_cast(self, open_tok: _Token) -> bool:
        """Heuristic: `(primitive)` is always a cast; `(Identifier)` is a
        cast only when followed by something a cast operand starts with."""
        close = self.matching_paren(self.pos - 1)
        if close is None:
            return False
        inner = self.tokens[self.pos : close]
        if not inner:
            return False
        if not all(t.type in ("ident", "keyword") or t.text in (".", "[", "]", "<", ">", ">>", ",") for t in inner):
            return False
        if inner[0].text in PRIMITIVE_TYPES and inner[0].type == "keyword":
            return True
        if inner[0].type != "ident":
            return False
        nxt = self.tokens[close + 1]
        return nxt.type in ("ident", "number", "string", "char") or nxt.text in ("(", "!", "~", "this", "new")
