import numpy as np
import pytest

from blockrep.generate import corpus
from blockrep.semigroup import (
    FiniteSemigroup, IndexOutOfRange, MalformedTable, NotAssociative, NotBlockGroup, NotClosed,
    NotIdempotent, NotInverseSemigroup, associativity_witness, load_table,
)

from conftest import BLOCK_GROUPS, NON_BLOCK_GROUPS


def test_trivial():
    sg = load_table(1, [[0]])
    assert sg.order == 1
    assert sg.identity == 0 and sg.zero == 0
    assert sg.idempotents == (0,)
    assert sg.is_block_group()


def test_z2():
    sg = load_table(2, [[0, 1], [1, 0]])
    assert sg.identity == 0
    assert sg.zero is None
    assert sg.idempotents == (0,)
    assert sg.regular_elements == (0, 1)
    assert sg.inverse(1) == 1
    assert sg.is_inverse


def test_null_semigroup():
    sg = load_table(2, [[1, 1], [1, 1]])
    assert sg.zero == 1
    assert sg.identity is None
    assert sg.idempotents == (1,)
    assert sg.regular_elements == (1,)
    assert sg.omega(0) == 1
    assert not sg.is_inverse


@pytest.mark.parametrize(
    "entries, triple",
    [
        ([[1, 0], [0, 0]], (0, 0, 1)),
        ([[1, 1], [0, 0]], (0, 0, 0)),
    ]
)
def test_not_associative_witness(entries, triple):
    with pytest.raises(NotAssociative) as exc:
        load_table(2, entries)
    assert exc.value.triple == triple
    i, j, k = triple
    T = np.array(entries)
    assert T[T[i, j], k] != T[i, T[j, k]]


def test_index_out_of_range():
    with pytest.raises(IndexOutOfRange) as exc:
        load_table(2, [[0, 2], [0, 0]])
    assert (exc.value.row, exc.value.col, exc.value.value) == (0, 1, 2)


@pytest.mark.parametrize(
    "order, entries",
    [
        (2, [[0, 1]]),
        (2, [[0, 1, 0], [1, 0, 1]]),
        (0, []),
    ]
)
def test_malformed(order, entries):
    with pytest.raises(MalformedTable):
        load_table(order, entries)


def test_malformed_labels():
    with pytest.raises(MalformedTable):
        load_table(2, [[0, 1], [1, 0]], labels=["e"])


def test_associativity_witness_none_for_groups():
    idx = np.arange(4)
    assert associativity_witness((idx[:, None] + idx[None, :]) % 4) is None


def test_table_is_read_only(example):
    with pytest.raises(ValueError):
        example("Z2").table[0, 0] = 1


@pytest.mark.parametrize(
    "name, x, index, period, omega",
    [
        ("monogenic-a4=a2", 0, 2, 2, 1),
        ("monogenic-a4=a2", 2, 1, 2, 1),
        ("monogenic-a3=a2", 0, 2, 1, 1),
        ("Z3", 1, 1, 3, 0),
        ("null3", 0, 2, 1, 2),
    ]
)
def test_index_period_omega(example, name, x, index, period, omega):
    sg = example(name)
    m, r, _ = sg.index_period(x)
    assert (m, r) == (index, period)
    assert sg.omega(x) == omega
    assert sg.is_idempotent(sg.omega(x))


def test_monogenic_a3_a2_is_null2(example):
    assert np.array_equal(example("monogenic-a3=a2").table, example("null2").table)


@pytest.mark.parametrize(
    "name, kind, e, f",
    [
        ("left-zero2", "L", 0, 1),
        ("right-zero2", "R", 0, 1),
    ]
)
def test_block_group_witness(example, name, kind, e, f):
    verdict = example(name).is_block_group()
    assert not verdict
    assert (verdict.witness.kind, verdict.witness.e, verdict.witness.f) == (kind, e, f)


@pytest.mark.parametrize("name", BLOCK_GROUPS)
def test_corpus_block_groups(example, name):
    assert example(name).is_block_group()


@pytest.mark.parametrize("name", NON_BLOCK_GROUPS)
def test_corpus_non_block_groups(example, name):
    sg = example(name)
    verdict = sg.is_block_group()
    assert not verdict
    w = verdict.witness
    assert w.e != w.f
    assert sg.is_idempotent(w.e) and sg.is_idempotent(w.f)
    assert sg.green.related(w.kind, w.e, w.f)
    with pytest.raises(NotBlockGroup):
        sg.require_block_group()


def test_brandt_green(example):
    sg = example("B2")
    assert sg.labels == ("0", "e11", "e12", "e21", "e22")
    assert sg.idempotents == (0, 1, 4)
    assert sg.inverse(2) == 3
    g = sg.green
    assert g.classes("D") == [(0,), (1, 2, 3, 4)]
    assert g.classes("R") == [(0,), (1, 2), (3, 4)]
    assert g.classes("L") == [(0,), (1, 3), (2, 4)]
    assert g.classes("H") == [(0,), (1,), (2,), (3,), (4,)]


@pytest.mark.parametrize("name", list(corpus()))
def test_d_equals_j(example, name):
    g = example(name).green
    assert g.d_class_id == g.j_class_id


def test_natural_order_and_meet(example):
    sg = example("chain3")
    assert sg.natural_leq(0, 2)
    assert not sg.natural_leq(2, 0)
    assert sg.idempotent_meet(1, 2) == 1
    b2 = example("B2")
    assert b2.idempotent_meet(1, 4) == 0


def test_meet_requires_idempotents(example):
    with pytest.raises(NotIdempotent):
        example("B2").idempotent_meet(1, 2)


def test_meet_requires_block_group(example):
    with pytest.raises(NotBlockGroup):
        example("left-zero2").idempotent_meet(0, 1)


def test_inverse_needs_unique_inverse(example):
    with pytest.raises(NotInverseSemigroup):
        example("null2").inverse(0)


def test_adjoin_identity(example):
    sg = example("null2").adjoin_identity()
    assert sg.order == 3
    assert sg.identity == 2
    assert sg.has_adjoined_identity
    assert sg.labels[-1] == "1"
    z2 = example("Z2")
    assert z2.adjoin_identity() is z2


def test_restrict(example):
    sg = example("B2")
    sub = sg.restrict([0, 1])
    assert sub.labels == ("0", "e11")
    assert sub.order == 2
    assert sg.is_subsemigroup([0, 1, 4])
    assert not sg.is_subsemigroup([2])
    with pytest.raises(NotClosed):
        example("Z3").restrict([0, 1])


def test_constructor_copies_table():
    table = np.array([[0, 1], [1, 0]])
    sg = FiniteSemigroup(table)
    table[0, 0] = 1
    assert sg.mul(0, 0) == 0
