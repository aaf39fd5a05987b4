import json

import pytest

from blockrep.cli import main
from blockrep.formats import parse_table_file
from blockrep.generate import corpus


BLOCK_GROUPS = [
    "trivial", "Z2", "Z3", "chain2", "chain3", "null2", "null3",
    "monogenic-a3=a2", "monogenic-a4=a3", "monogenic-a4=a2",
    "B2", "B2^1", "syn:a*", "syn:(aa)*", "syn:(ab)*",
]
NON_BLOCK_GROUPS = ["left-zero2", "right-zero2", "T2", "left-zero2^1", "syn:ends-in-b"]
INVERSE = ["trivial", "Z2", "Z3", "chain2", "chain3", "B2", "B2^1", "syn:a*", "syn:(aa)*", "syn:(ab)*"]


@pytest.fixture
def load():
    """load(text, name=None) -> FiniteSemigroup from table file text."""
    def _load(text: str, name: str | None = None):
        return parse_table_file(text, name=name)
    return _load


@pytest.fixture
def example():
    """example(name) -> the named corpus member."""
    members = corpus()

    def _example(name: str):
        return members[name]
    return _example


@pytest.fixture
def write(tmp_path):
    """write(filename, text) -> path of a file holding text."""
    def _write(filename: str, text: str) -> str:
        path = tmp_path / filename
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write


@pytest.fixture
def cli(capsys):
    """
    cli(*argv) -> (exit_code, stdout, stderr)
    With --format structured in argv, stdout is returned parsed.
    """
    def _run(*argv: str):
        code = main(list(argv))
        captured = capsys.readouterr()
        out = captured.out
        if "structured" in argv:
            out = json.loads(out)
        return code, out, captured.err
    return _run
