import pytest

from blockrep.congruence import (
    AmbiguityReport, Congruence, MalformedPartition, OrderTooLarge, UnionFind, _largest, all_congruences,
    congruence_join, is_congruence, largest_idempotent_separating_oracle, largest_separating_oracle,
    principal_congruence, separates_idempotents, separates_regular,
)
from blockrep.generate import corpus


def test_union_find():
    uf = UnionFind(4)
    assert uf.union(0, 2)
    assert not uf.union(2, 0)
    assert uf.find(0) == uf.find(2)
    assert Congruence.from_labels(uf.labels()).class_id == (0, 1, 0, 2)


def test_canonical_form():
    c = Congruence.from_blocks(4, [[3], [0, 2], [1]])
    assert c.class_id == (0, 1, 0, 2)
    assert c.blocks() == [(0, 2), (1,), (3,)]
    assert c.render() == "{{0,2},{1},{3}}"
    assert c.render(["a", "b", "c", "d"]) == "{{a,c},{b},{d}}"
    assert c.class_count == 3


@pytest.mark.parametrize(
    "blocks",
    [
        [[0, 1], [1, 2]],
        [[0], [1]],
    ]
)
def test_malformed_blocks(blocks):
    with pytest.raises(MalformedPartition):
        Congruence.from_blocks(3, blocks)


def test_lattice_operations():
    a = Congruence.from_blocks(4, [[0, 1], [2], [3]])
    b = Congruence.from_blocks(4, [[1, 2], [0], [3]])
    assert a.join(b) == Congruence.from_blocks(4, [[0, 1, 2], [3]])
    assert a.meet(b) == Congruence.identity(4)
    assert a.refines(a.join(b))
    assert not a.join(b).refines(a)
    assert Congruence.identity(4).refines(a)
    assert a.refines(Congruence.universal(4))


def test_is_congruence(example):
    z3 = example("Z3")
    assert is_congruence(z3, Congruence.identity(3))
    assert is_congruence(z3, Congruence.universal(3))
    assert not is_congruence(z3, Congruence.from_blocks(3, [[0, 1], [2]]))
    assert is_congruence(example("chain3"), (0, 0, 1))
    with pytest.raises(MalformedPartition):
        is_congruence(z3, (0, 0))


def test_principal_congruence(example):
    assert principal_congruence(example("Z3"), 0, 1) == Congruence.universal(3)
    b2 = example("B2")
    assert principal_congruence(b2, 1, 4) == Congruence.universal(5)
    chain3 = example("chain3")
    assert principal_congruence(chain3, 1, 2) == Congruence((0, 1, 1))


def test_congruence_join_closes(example):
    sg = example("monogenic-a4=a3")
    # a ~ a2 forces a2 ~ a3
    c = Congruence.from_blocks(3, [[0, 1], [2]])
    assert congruence_join(sg, c, Congruence.identity(3)) == Congruence.universal(3)


@pytest.mark.parametrize(
    "name, count",
    [
        ("trivial", 1),
        ("Z2", 2),
        ("Z3", 2),
        ("null2", 2),
        ("chain2", 2),
        ("B2", 2),
    ]
)
def test_lattice_size(example, name, count):
    lattice = all_congruences(example(name))
    assert len(lattice) == count
    assert lattice[0] == Congruence.identity(example(name).order)
    assert lattice[-1] == Congruence.universal(example(name).order)


@pytest.mark.parametrize("name", [n for n, sg in corpus().items() if sg.order <= 6])
def test_lattice_members_are_congruences(example, name):
    sg = example(name)
    lattice = all_congruences(sg)
    assert len(set(lattice)) == len(lattice)
    assert all(is_congruence(sg, c) for c in lattice)
    for c in lattice:
        for d in lattice:
            assert congruence_join(sg, c, d) in lattice


def test_order_too_large(example):
    with pytest.raises(OrderTooLarge) as exc:
        all_congruences(example("Z3"), max_order=2)
    assert "--max-order" in str(exc.value)


def test_separation(example):
    sg = example("monogenic-a4=a2")
    assert separates_regular(sg, Congruence((0, 1, 0)))
    assert not separates_regular(sg, Congruence((0, 1, 1)))
    assert separates_idempotents(sg, Congruence.universal(3))


@pytest.mark.parametrize(
    "name, regular, idempotent",
    [
        ("null2", "{{a,0}}", "{{a,0}}"),
        ("monogenic-a4=a2", "{{a,a3},{a2}}", "{{a,a2,a3}}"),
        ("Z2", "{{0},{1}}", "{{0,1}}"),
        ("B2", "{{0},{e11},{e12},{e21},{e22}}", "{{0},{e11},{e12},{e21},{e22}}"),
    ]
)
def test_oracles(example, name, regular, idempotent):
    sg = example(name)
    assert largest_separating_oracle(sg).render(sg.labels) == regular
    assert largest_idempotent_separating_oracle(sg).render(sg.labels) == idempotent


def test_oracle_outside_block_groups(example):
    # every element is regular
    assert largest_separating_oracle(example("left-zero2")) == Congruence.identity(2)


def test_ambiguity_report_lists_maximal():
    a = Congruence.from_blocks(3, [[0, 1], [2]])
    b = Congruence.from_blocks(3, [[0, 2], [1]])
    result = _largest([Congruence.identity(3), a, b])
    assert isinstance(result, AmbiguityReport)
    assert set(result.maximal) == {a, b}
