import pytest

from blockrep.automata import EXAMPLE_DFAS, DfaError
from blockrep.formats import parse_dfa_file, parse_maps_file, parse_table_file, render_table_file
from blockrep.generate import MapError
from blockrep.parse import ParseError
from blockrep.semigroup import IndexOutOfRange, NotAssociative


@pytest.mark.parametrize(
    "text, order, identity, zero",
    [
        ("1\n0\n", 1, 0, 0),
        ("2\n0 1\n1 0\n", 2, 0, None),
        ("2\n1 1\n1 1\n", 2, None, 1),
        ("2\r\n0 1\r\n1 0\r\n", 2, 0, None),
        ("2\n0 1\n1 0", 2, 0, None),
        ("# Z2\n2   # order\n\n0 1\n1 0  # last row\n", 2, 0, None),
    ]
)
def test_parse_table(load, text, order, identity, zero):
    sg = load(text)
    assert sg.order == order
    assert sg.identity == identity
    assert sg.zero == zero


def test_labels():
    sg = parse_table_file("3\n0 1 2\n1 1 2\n2 2 2\nlabels: e a 0\n", name="chain")
    assert sg.labels == ("e", "a", "0")
    assert sg.has_labels
    assert sg.name == "chain"


@pytest.mark.parametrize(
    "text",
    [
        "2\n0 1\n",
        "2\n0 1\n1 0\n1 0\n",
        "2\n0 1\n1\n",
        "2\n0 1\n1 0\nlabels: a\n",
        "2\n0 1\n1 0\nlabels: a a\n",
        "0\n",
        "",
    ]
)
def test_malformed_tables(load, text):
    with pytest.raises(ParseError):
        load(text)


def test_parse_error_position(load):
    with pytest.raises(ParseError) as exc:
        load("2\n0 x\n1 0\n")
    assert exc.value.line == 2


@pytest.mark.parametrize(
    "text, line",
    [
        ("3\n0 1 2\n1 1 2\n", 4),
        ("2\n0 1\nlabels: a b\n", 3),
        ("# header\n2\n\n0 1  # first\n", 5),
        ("2\n0 1\n1 0\n1 0\n", 4),
    ]
)
def test_row_count_error_position(load, text, line):
    with pytest.raises(ParseError) as exc:
        load(text)
    assert exc.value.line == line
    assert str(exc.value).startswith(f"line {line}, column 1: expected")


def test_validation_after_parsing(load):
    with pytest.raises(NotAssociative) as exc:
        load("2\n1 0\n0 0\n")
    assert exc.value.triple == (0, 0, 1)
    with pytest.raises(IndexOutOfRange):
        load("2\n0 2\n1 0\n")


@pytest.mark.parametrize(
    "text",
    [
        "2\n0 1\n1 0\n",
        "3\n0 1 2\n1 1 2\n2 2 2\nlabels: e a 0\n",
    ]
)
def test_round_trip(load, text):
    assert render_table_file(load(text)) == text


@pytest.mark.parametrize("name", ["B2", "T2", "syn:(ab)*"])
def test_render_parse(load, example, name):
    sg = example(name)
    again = load(render_table_file(sg))
    assert (again.table == sg.table).all()
    assert again.labels == sg.labels


AB_STAR = """\
# (ab)*
states 3
alphabet a b
initial 0
accepting 0
trans 0 a 1
trans 0 b 2
trans 1 a 2
trans 1 b 0
trans 2 a 2
trans 2 b 2
"""


def test_parse_dfa():
    dfa = parse_dfa_file(AB_STAR)
    assert dfa == EXAMPLE_DFAS["(ab)*"]
    assert dfa.accepts("abab")
    assert not dfa.accepts("aba")


@pytest.mark.parametrize(
    "text, error",
    [
        (AB_STAR.replace("trans 2 b 2\n", ""), DfaError),
        (AB_STAR + "trans 2 b 0\n", ParseError),
        (AB_STAR + "states 3\n", ParseError),
        (AB_STAR.replace("initial 0\n", ""), DfaError),
        (AB_STAR + "trans 0 c 0\n", DfaError),
        (AB_STAR.replace("accepting 0", "accepting 7"), DfaError),
        (AB_STAR.replace("trans 0 a 1", "trans 0 a 9"), DfaError),
    ]
)
def test_bad_dfa(text, error):
    with pytest.raises(error):
        parse_dfa_file(text)


def test_parse_maps():
    n, maps = parse_maps_file("points 2\nmap 1 0\nmap 0 0\n")
    assert n == 2
    assert maps == [(1, 0), (0, 0)]


@pytest.mark.parametrize(
    "text, error",
    [
        ("points 2\nmap 1\n", MapError),
        ("points 2\nmap 0 2\n", MapError),
        ("points 2\n", ParseError),
        ("map 0 1\n", ParseError),
    ]
)
def test_bad_maps(text, error):
    with pytest.raises(error):
        parse_maps_file(text)
