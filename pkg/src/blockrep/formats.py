"""
Readers and writers for the line-oriented input files (grammar in
formats.lark).

Table file:
    3               # order n
    0 1 2           # row i lists the products i*0 .. i*(n-1)
    1 1 2
    2 2 2
    labels: e a 0   # optional

DFA file:
    states 2
    alphabet a b
    initial 0
    accepting 1
    trans 0 a 0
    ...

Maps file:
    points 2
    map 1 0
    map 0 0
"""
from __future__ import annotations

from lark import Token, Tree

from .automata import Dfa, DfaError
from .generate import MapError
from .parse import ParseError, parse_dfa_source, parse_maps_source, parse_table_source
from .semigroup import FiniteSemigroup, load_table


def _line_of(node: Tree | Token) -> int | None:
    if isinstance(node, Token):
        return node.line
    for child in node.children:
        line = _line_of(child)
        if line is not None:
            return line
    return None


def parse_table_file(text: str, *, name: str | None = None) -> FiniteSemigroup:
    tree = parse_table_source(text)
    order_tok, *rest = tree.children
    order = int(order_tok)
    rows = [r for r in rest if isinstance(r, Tree) and r.data == "row"]
    labels_node = next((r for r in rest if isinstance(r, Tree) and r.data == "labels"), None)

    if order < 1:
        raise ParseError("order must be at least 1", order_tok.line, order_tok.column)
    if len(rows) > order:
        raise ParseError(f"expected {order} rows, found {len(rows)}", _line_of(rows[order]), 1)
    if len(rows) < order:
        missing = (_line_of(rows[-1]) if rows else order_tok.line) + 1
        raise ParseError(f"expected {order} rows, found {len(rows)}", missing, 1)
    entries = []
    for row in rows:
        values = [int(tok) for tok in row.children]
        if len(values) != order:
            raise ParseError(f"expected {order} entries, found {len(values)}", _line_of(row), 1)
        entries.append(values)

    labels = None
    if labels_node is not None:
        labels = [str(tok) for tok in labels_node.children]
        if len(labels) != order:
            raise ParseError(f"expected {order} labels, found {len(labels)}", _line_of(labels_node), 1)
        if len(set(labels)) != order:
            raise ParseError("labels must be distinct", _line_of(labels_node), 1)
    return load_table(order, entries, labels=labels, name=name)


def render_table_file(sg: FiniteSemigroup) -> str:
    lines = [str(sg.order)]
    lines += [" ".join(str(int(v)) for v in row) for row in sg.table]
    if sg.has_labels:
        lines.append("labels: " + " ".join(sg.labels))
    return "\n".join(lines) + "\n"


class DfaReader:
    """Collects the declarations of a dfa_file tree, one read_* per line kind."""

    def __init__(self) -> None:
        self.state_count: int | None = None
        self.alphabet: list[str] | None = None
        self.initial: int | None = None
        self.accepting: set[int] = set()
        self.edges: dict[tuple[int, str], int] = {}

    def read(self, tree: Tree) -> Dfa:
        for line in tree.children:
            fn = getattr(self, f"read_{line.data}", None)
            if not fn:
                raise DfaError(f"No reader for {line.data}")
            fn(line)
        for field in ("state_count", "alphabet", "initial"):
            if getattr(self, field) is None:
                raise DfaError(f"missing {field.replace('_count', 's')} declaration")
        return Dfa.from_edges(self.state_count, self.alphabet, self.edges, self.initial, self.accepting)

    def _once(self, field: str, line: Tree, value) -> None:
        if getattr(self, field) is not None:
            raise ParseError(f"repeated {line.data} declaration", _line_of(line), 1)
        setattr(self, field, value)

    def read_states(self, line: Tree) -> None:
        self._once("state_count", line, int(line.children[0]))

    def read_alphabet(self, line: Tree) -> None:
        self._once("alphabet", line, [str(tok) for tok in line.children])

    def read_initial(self, line: Tree) -> None:
        self._once("initial", line, int(line.children[0]))

    def read_accepting(self, line: Tree) -> None:
        self.accepting.update(int(tok) for tok in line.children)

    def read_trans(self, line: Tree) -> None:
        q, symbol, r = line.children
        key = (int(q), str(symbol))
        if key in self.edges:
            raise ParseError(f"second transition from state {q} on {symbol!r}", q.line, q.column)
        self.edges[key] = int(r)


def parse_dfa_file(text: str) -> Dfa:
    return DfaReader().read(parse_dfa_source(text))


def parse_maps_file(text: str) -> tuple[int, list[tuple[int, ...]]]:
    """(n_points, generators) from a maps file."""
    tree = parse_maps_source(text)
    points_tok, *lines = tree.children
    n = int(points_tok)
    maps = []
    for line in lines:
        images = tuple(int(tok) for tok in line.children)
        if len(images) != n or any(x >= n for x in images):
            raise MapError(f"line {_line_of(line) or '?'}: {list(images)} is not a total map on {n} points")
        maps.append(images)
    return n, maps
