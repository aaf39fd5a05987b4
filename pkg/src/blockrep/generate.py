from __future__ import annotations

import logging
from collections import deque
from functools import cache
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from .config import DEFAULT_CLOSURE_CAP
from .semigroup import (
    FiniteSemigroup, InternalInconsistency, LimitExceeded, ValidationError,
    associativity_witness, load_table,
)


logger = logging.getLogger(__name__)

Transformation = tuple[int, ...]


class MapError(ValidationError):
    pass


class ClosureTooLarge(LimitExceeded):
    def __init__(self, cap: int) -> None:
        self.cap = cap
        super().__init__(f"transformation semigroup exceeds {cap} elements; raise it with --closure-cap")


def compose_maps(u: Transformation, v: Transformation) -> Transformation:
    """Apply u, then v."""
    return tuple(v[x] for x in u)


def generate_from_transformations(
    n_points: int,
    generators: Sequence[Sequence[int]],
    *,
    names: Sequence[str] | None = None,
    closure_cap: int = DEFAULT_CLOSURE_CAP,
    name: str | None = None,
) -> FiniteSemigroup:
    """
    The semigroup generated by total maps on {0..n_points-1} under
    left-to-right composition. Elements are numbered in discovery order:
    the distinct generators first, then breadth-first products. With
    `names`, each element is labelled by the first (shortest) word that
    reached it.
    """
    if not generators:
        raise MapError("at least one generator is needed")
    if names is not None and len(names) != len(generators):
        raise MapError(f"{len(generators)} generators but {len(names)} names")
    gens: list[Transformation] = []
    for g in generators:
        g = tuple(int(x) for x in g)
        if len(g) != n_points or any(not 0 <= x < n_points for x in g):
            raise MapError(f"{list(g)} is not a total map on {n_points} points")
        gens.append(g)

    index: dict[Transformation, int] = {}
    elements: list[Transformation] = []
    words: list[str] = []

    def discover(t: Transformation, word: str) -> None:
        if t in index:
            return
        if len(elements) >= closure_cap:
            raise ClosureTooLarge(closure_cap)
        index[t] = len(elements)
        elements.append(t)
        words.append(word)
        queue.append(t)

    queue: deque[Transformation] = deque()
    gen_names = list(names) if names is not None else [str(i) for i in range(len(gens))]
    for g, w in zip(gens, gen_names):
        discover(g, w)
    while queue:
        u = queue.popleft()
        for g, w in zip(gens, gen_names):
            discover(compose_maps(u, g), words[index[u]] + w)

    n = len(elements)
    table = np.empty((n, n), dtype=np.intp)
    for i, u in enumerate(elements):
        for j, v in enumerate(elements):
            try:
                table[i, j] = index[compose_maps(u, v)]
            except KeyError:
                raise InternalInconsistency(f"closure missed the product of elements {i} and {j}") from None
    logger.debug("generated %d elements from %d generators on %d points", n, len(gens), n_points)
    # composition of maps is associative, so the O(n^3) check is skipped
    return FiniteSemigroup(table, labels=words if names is not None else None, name=name)


def all_tables(order: int) -> Iterator[FiniteSemigroup]:
    """Every associative table of the given order, raw: isomorphic and
    anti-isomorphic copies are all produced."""
    count = 0
    for entries in product(range(order), repeat=order * order):
        table = np.array(entries, dtype=np.intp).reshape(order, order)
        if associativity_witness(table) is None:
            yield FiniteSemigroup(table, name=f"order{order}-{count}")
            count += 1
    logger.debug("order %d: %d associative tables", order, count)


def cyclic_group(n: int, *, name: str | None = None) -> FiniteSemigroup:
    idx = np.arange(n)
    return load_table(n, (idx[:, None] + idx[None, :]) % n, name=name)


def chain(n: int, *, name: str | None = None) -> FiniteSemigroup:
    idx = np.arange(n)
    return load_table(n, np.minimum(idx[:, None], idx[None, :]), name=name)


def null_semigroup(n: int, *, name: str | None = None) -> FiniteSemigroup:
    """n-1 nilpotent letters and a zero at the last index."""
    labels = [chr(ord("a") + i) for i in range(n - 1)] + ["0"]
    return load_table(n, np.full((n, n), n - 1), labels=labels, name=name)


def monogenic(index: int, period: int, *, name: str | None = None) -> FiniteSemigroup:
    """<a | a^(index+period) = a^index>, element k-1 standing for a^k."""
    n = index + period - 1

    def reduce(k: int) -> int:
        while k > n:
            k -= period
        return k

    table = [[reduce(i + j) - 1 for j in range(1, n + 1)] for i in range(1, n + 1)]
    labels = ["a" if k == 1 else f"a{k}" for k in range(1, n + 1)]
    return load_table(n, table, labels=labels, name=name)


def brandt(n: int, *, name: str | None = None) -> FiniteSemigroup:
    """The Brandt semigroup B_n: matrix units e_ij and a zero at index 0."""
    units = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    index = {u: k + 1 for k, u in enumerate(units)}
    size = len(units) + 1
    table = np.zeros((size, size), dtype=np.intp)
    for (i, j), a in index.items():
        for (k, l), b in index.items():
            table[a, b] = index[(i, l)] if j == k else 0
    labels = ["0"] + [f"e{i}{j}" for i, j in units]
    return load_table(size, table, labels=labels, name=name)


@cache
def _corpus() -> tuple[tuple[str, FiniteSemigroup], ...]:
    from .automata import EXAMPLE_DFAS, syntactic_monoid

    left_zero = load_table(2, [[0, 0], [1, 1]], labels=["a", "b"], name="left-zero2")
    right_zero = load_table(2, [[0, 1], [0, 1]], labels=["a", "b"], name="right-zero2")
    b2 = brandt(2, name="B2")
    members = [
        load_table(1, [[0]], name="trivial"),
        cyclic_group(2, name="Z2"),
        cyclic_group(3, name="Z3"),
        chain(2, name="chain2"),
        chain(3, name="chain3"),
        left_zero,
        right_zero,
        null_semigroup(2, name="null2"),
        null_semigroup(3, name="null3"),
        monogenic(2, 1, name="monogenic-a3=a2"),
        monogenic(3, 1, name="monogenic-a4=a3"),
        monogenic(2, 2, name="monogenic-a4=a2"),
        b2,
        generate_from_transformations(2, [(1, 0), (0, 0)], names=["s", "c"], name="T2"),
        _renamed(left_zero.adjoin_identity(), "left-zero2^1"),
        _renamed(b2.adjoin_identity(), "B2^1"),
    ]
    for dfa_name, dfa in EXAMPLE_DFAS.items():
        members.append(_renamed(syntactic_monoid(dfa), f"syn:{dfa_name}"))
    return tuple((sg.name, sg) for sg in members)


def _renamed(sg: FiniteSemigroup, name: str) -> FiniteSemigroup:
    return FiniteSemigroup(
        sg.table,
        labels=sg.labels if sg.has_labels else None,
        has_adjoined_identity=sg.has_adjoined_identity,
        name=name,
    )


def corpus() -> dict[str, FiniteSemigroup]:
    """The named example semigroups, in a fixed order."""
    return dict(_corpus())
