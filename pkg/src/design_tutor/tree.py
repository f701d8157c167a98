"""Language-neutral syntax tree shared by both frontends.

Every rule is a predicate over this tree, so the two parsers normalize
into one vocabulary of node kinds, and the structural predicates the
rules need (descendant, direct body child, source order, statement
count) live here next to the types.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator


class NodeKind(Enum):
    MODULE = "Module"
    FUNCTION_DEF = "FunctionDef"
    CLASS_DEF = "ClassDef"
    METHOD_DEF = "MethodDef"
    FIELD_DECL = "FieldDecl"
    DECLARATOR_GROUP = "DeclaratorGroup"
    INITIALIZER_BLOCK = "InitializerBlock"
    BLOCK = "Block"
    IF = "If"
    WHILE = "While"
    C_STYLE_FOR = "CStyleFor"
    FOR_EACH = "ForEach"
    RETURN = "Return"
    BREAK = "Break"
    CONTINUE = "Continue"
    PASS = "Pass"
    GLOBAL_STMT = "GlobalStmt"
    LABELED_STMT = "LabeledStmt"
    LOCAL_VAR_DECL = "LocalVarDecl"
    EXPR_STMT = "ExprStmt"
    ASSIGN = "Assign"
    CALL = "Call"
    BINARY_OP = "BinaryOp"
    UNARY_OP = "UnaryOp"
    TERNARY_OP = "TernaryOp"
    INSTANCE_OF_OP = "InstanceOfOp"
    LAMBDA_EXPR = "LambdaExpr"
    NUMBER_LITERAL = "NumberLiteral"
    OTHER_EXPR = "OtherExpr"
    OTHER_STMT = "OtherStmt"


CALLABLE_KINDS = frozenset({NodeKind.FUNCTION_DEF, NodeKind.METHOD_DEF})

# Kinds whose nodes may carry a `name`.
NAMED_KINDS = frozenset(
    {
        NodeKind.FUNCTION_DEF,
        NodeKind.METHOD_DEF,
        NodeKind.CLASS_DEF,
        NodeKind.CALL,
        NodeKind.FIELD_DECL,
        NodeKind.LOCAL_VAR_DECL,
        NodeKind.GLOBAL_STMT,
        NodeKind.LABELED_STMT,
    }
)

MODIFIERS = frozenset({"public", "private", "protected", "static", "final"})


@dataclass(frozen=True, order=True)
class Span:
    """1-based, inclusive source range."""

    line_start: int
    col_start: int
    line_end: int
    col_end: int

    def __post_init__(self) -> None:
        if min(self.line_start, self.col_start, self.line_end, self.col_end) < 1:
            raise ValueError(f"span positions must be >= 1: {self}")
        if (self.line_start, self.col_start) > (self.line_end, self.col_end):
            raise ValueError(f"span start after end: {self}")

    @property
    def start(self) -> tuple[int, int]:
        return (self.line_start, self.col_start)

    def as_list(self) -> list[int]:
        return [self.line_start, self.col_start, self.line_end, self.col_end]


@dataclass(eq=False)
class Node:
    """One syntax node; identity (not value) equality, so a node can sit in
    exactly one tree."""

    kind: NodeKind
    span: Span
    name: str | None = None
    literal_value: str | None = None
    modifiers: frozenset[str] | None = None
    children: list[Node] = field(default_factory=list)
    is_statement: bool = False
    # Parameter count of a FunctionDef/MethodDef; parameters are metadata,
    # not children (children of a callable are its body statements).
    param_count: int | None = None
    id: int = -1

    def __repr__(self) -> str:  # terse: trees get large
        bits = [self.kind.value, f"#{self.id}"]
        if self.name is not None:
            bits.append(repr(self.name))
        if self.literal_value is not None:
            bits.append(self.literal_value)
        return f"<{' '.join(bits)}>"


class Program:
    """Immutable parsed program.

    Construction assigns preorder ids, builds the parent index, and
    validates tree-shape invariants; afterwards everything is read-only
    and safe to share across threads.
    """

    def __init__(self, language: str, root: Node, source_name: str = "<string>"):
        if language not in ("python", "java"):
            raise ValueError(f"unsupported language: {language!r}")
        if root.kind is not NodeKind.MODULE:
            raise ValueError("program root must be a Module node")
        self.language = language
        self.root = root
        self.source_name = source_name
        self._nodes: list[Node] = []
        self._parent: dict[int, Node | None] = {}
        self._index(root, None, seen=set())

    def _index(self, node: Node, parent: Node | None, seen: set[int]) -> None:
        if id(node) in seen:
            raise ValueError("node reachable more than once (shared child or cycle)")
        seen.add(id(node))
        if node.name is not None and node.kind not in NAMED_KINDS:
            raise ValueError(f"{node.kind.value} nodes cannot carry a name")
        if node.modifiers is not None and not node.modifiers <= MODIFIERS:
            raise ValueError(f"unknown modifiers: {node.modifiers}")
        node.id = len(self._nodes)
        self._nodes.append(node)
        self._parent[node.id] = parent
        for child in node.children:
            self._index(child, node, seen)

    # -- membership ---------------------------------------------------

    def _own(self, node: Node) -> Node:
        if 0 <= node.id < len(self._nodes) and self._nodes[node.id] is node:
            return node
        raise ValueError("node does not belong to this program")

    def __len__(self) -> int:
        return len(self._nodes)

    # -- structural predicates ----------------------------------------

    def parent(self, node: Node) -> Node | None:
        self._own(node)
        return self._parent[node.id]

    def ancestors(self, node: Node) -> Iterator[Node]:
        """Proper ancestors, nearest first."""
        cur = self.parent(node)
        while cur is not None:
            yield cur
            cur = self._parent[cur.id]

    def desc(self, a: Node, b: Node) -> bool:
        """True iff b is a proper descendant of a."""
        self._own(a)
        return any(anc is a for anc in self.ancestors(b))

    def body_statements(self, f: Node) -> list[Node]:
        """Body statement list of a function/method; a single Block child
        (Java brace body) is transparent."""
        self._own(f)
        if f.kind not in CALLABLE_KINDS:
            raise ValueError(f"body_statements() needs a function or method, got {f.kind.value}")
        if len(f.children) == 1 and f.children[0].kind is NodeKind.BLOCK:
            return list(f.children[0].children)
        return list(f.children)

    def child(self, f: Node, s: Node) -> bool:
        """True iff s sits directly in f's body statement list."""
        return any(stmt is s for stmt in self.body_statements(f))

    def before(self, x: Node, y: Node) -> bool:
        """True iff x starts strictly before y in the source."""
        self._own(x)
        self._own(y)
        return x.span.start < y.span.start

    def stmt_count(self, m: Node) -> int:
        """Number of statement descendants of a function/method, Block
        wrappers excluded."""
        self._own(m)
        if m.kind not in CALLABLE_KINDS:
            raise ValueError(f"stmt_count() needs a function or method, got {m.kind.value}")
        count = 0
        stack = list(m.children)
        while stack:
            node = stack.pop()
            if node.is_statement and node.kind is not NodeKind.BLOCK:
                count += 1
            stack.extend(node.children)
        return count

    def preorder(self) -> list[Node]:
        """All nodes, parents before children, siblings in source order."""
        return list(self._nodes)

    def nearest_function(self, node: Node) -> Node | None:
        """Innermost FunctionDef/MethodDef ancestor, if any."""
        for anc in self.ancestors(node):
            if anc.kind in CALLABLE_KINDS:
                return anc
        return None

    # -- debug dump -----------------------------------------------------

    def to_dict(self) -> dict:
        return {"language": self.language, "root": _node_dict(self.root)}

    def dump_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


def _node_dict(node: Node) -> dict:
    d: dict = {"id": node.id, "kind": node.kind.value}
    if node.name is not None:
        d["name"] = node.name
    if node.literal_value is not None:
        d["value"] = node.literal_value
    if node.modifiers is not None:
        d["modifiers"] = sorted(node.modifiers)
    d["span"] = node.span.as_list()
    d["children"] = [_node_dict(c) for c in node.children]
    return d


_NUMBER_RE = re.compile(r"^[+-]?\s*[0-9a-fA-FxXbBoO_.]*(?:[eEpP][+-]?[0-9_]+)?[lLfFdD]?$")


def parse_number(text: str) -> int | float | None:
    """Numeric value of a literal token from either language.

    Handles sign, underscores, hex/binary/octal, Java suffixes (l/f/d),
    and Java bare-zero octal. Returns None when the text is not numeric.
    """
    if not _NUMBER_RE.match(text):
        return None
    t = text.replace("_", "").replace(" ", "").replace("\t", "")
    sign = 1
    if t[:1] in ("+", "-"):
        sign = -1 if t[0] == "-" else 1
        t = t[1:]
    if t and t[-1] in "lL":
        t = t[:-1]
    elif t and t[-1] in "fFdD" and not t.lower().startswith("0x"):
        t = t[:-1]
    if not t:
        return None
    try:
        if t.lower().startswith(("0x", "0b", "0o")):
            return sign * int(t, 0)
        if len(t) > 1 and t[0] == "0" and t.isdigit():
            return sign * int(t, 8)  # Java octal
        if t.isdigit():
            return sign * int(t)
        return sign * float(t)
    except ValueError:
        return None
