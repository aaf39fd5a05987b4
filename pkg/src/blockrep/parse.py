from importlib.resources import files

from lark import Lark, Tree
from lark.exceptions import UnexpectedInput

from .semigroup import ValidationError


def _grammar(name: str) -> str:
    return files(__package__).joinpath(name).read_text(encoding="utf-8")


TERM_PARSER = Lark(_grammar("pseudo.lark"), parser="earley", lexer="dynamic", start=["chain", "term"])
FORMAT_PARSER = Lark(
    _grammar("formats.lark"),
    parser="earley",
    lexer="dynamic",
    start=["table_file", "dfa_file", "maps_file"],
)


class ParseError(ValidationError):
    def __init__(self, msg: str, line: int | None = None, column: int | None = None) -> None:
        self.line, self.column = line, column
        where = f"line {line}, column {column}: " if line is not None and line > 0 else ""
        super().__init__(f"{where}{msg}")


def _parse(parser: Lark, text: str, start: str) -> Tree:
    try:
        return parser.parse(text, start=start)
    except UnexpectedInput as e:
        first = str(e).strip().splitlines()[0] if str(e).strip() else type(e).__name__
        raise ParseError(first, getattr(e, "line", None), getattr(e, "column", None)) from e


def _line_terminated(text: str) -> str:
    return text if text.endswith("\n") else text + "\n"


def parse_term_source(src: str) -> Tree:
    return _parse(TERM_PARSER, src, "term")


def parse_chain_source(src: str) -> Tree:
    return _parse(TERM_PARSER, src, "chain")


def parse_table_source(src: str) -> Tree:
    return _parse(FORMAT_PARSER, _line_terminated(src), "table_file")


def parse_dfa_source(src: str) -> Tree:
    return _parse(FORMAT_PARSER, _line_terminated(src), "dfa_file")


def parse_maps_source(src: str) -> Tree:
    return _parse(FORMAT_PARSER, _line_terminated(src), "maps_file")
