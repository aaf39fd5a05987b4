from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .semigroup import FiniteSemigroup, LimitExceeded, ValidationError
from .config import DEFAULT_MAX_ORDER


logger = logging.getLogger(__name__)


class MalformedPartition(ValidationError):
    pass


class OrderTooLarge(LimitExceeded):
    def __init__(self, order: int, cap: int) -> None:
        self.order, self.cap = order, cap
        super().__init__(
            f"congruence lattice enumeration is capped at order {cap}, got {order}; "
            f"raise it with --max-order"
        )


class UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        # Path splitting
        p = self.parent
        while p[x] != x:
            x, p[x] = p[x], p[p[x]]
        return x

    def union(self, x: int, y: int) -> bool:
        """Merge the classes of x and y; False if they were already merged."""
        x = self.find(x)
        y = self.find(y)
        if x == y:
            return False
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]
        return True

    def labels(self) -> list[int]:
        return [self.find(x) for x in range(len(self.parent))]


@dataclass(frozen=True, order=True)
class Congruence:
    """A partition of the elements in canonical form: element 0 is in class 0
    and each new class gets the next id in order of first appearance."""
    class_id: tuple[int, ...]

    @classmethod
    def from_labels(cls, labels: Sequence[object]) -> "Congruence":
        canon: dict[object, int] = {}
        return cls(tuple(canon.setdefault(label, len(canon)) for label in labels))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Congruence":
        labels: list[int | None] = [None] * n
        for b, block in enumerate(blocks):
            for x in block:
                if labels[x] is not None:
                    raise MalformedPartition(f"element {x} appears in two blocks")
                labels[x] = b
        if None in labels:
            raise MalformedPartition(f"blocks do not cover element {labels.index(None)}")
        return cls.from_labels(labels)

    @classmethod
    def identity(cls, n: int) -> "Congruence":
        return cls(tuple(range(n)))

    @classmethod
    def universal(cls, n: int) -> "Congruence":
        return cls((0,) * n)

    def __len__(self) -> int:
        return len(self.class_id)

    @property
    def class_count(self) -> int:
        return max(self.class_id) + 1

    def blocks(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in range(self.class_count)]
        for x, c in enumerate(self.class_id):
            out[c].append(x)
        return [tuple(b) for b in out]

    def related(self, a: int, b: int) -> bool:
        return self.class_id[a] == self.class_id[b]

    def refines(self, other: "Congruence") -> bool:
        """True iff every class of self lies inside a class of other."""
        image: dict[int, int] = {}
        return all(image.setdefault(c, d) == d for c, d in zip(self.class_id, other.class_id))

    def meet(self, other: "Congruence") -> "Congruence":
        return Congruence.from_labels(list(zip(self.class_id, other.class_id)))

    def join(self, other: "Congruence") -> "Congruence":
        uf = UnionFind(len(self))
        for ids in (self.class_id, other.class_id):
            first: dict[int, int] = {}
            for x, c in enumerate(ids):
                uf.union(first.setdefault(c, x), x)
        return Congruence.from_labels(uf.labels())

    def render(self, labels: Sequence[str] | None = None) -> str:
        name = (lambda x: labels[x]) if labels is not None else str
        return "{" + ",".join("{" + ",".join(name(x) for x in b) + "}" for b in self.blocks()) + "}"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class AmbiguityReport:
    """Several maximal congruences with the requested separation property."""
    maximal: tuple[Congruence, ...]


def _as_class_ids(sg: FiniteSemigroup, partition: Congruence | Sequence[int]) -> tuple[int, ...]:
    ids = partition.class_id if isinstance(partition, Congruence) else tuple(partition)
    if len(ids) != sg.order:
        raise MalformedPartition(f"partition covers {len(ids)} elements, semigroup has {sg.order}")
    return ids


def is_congruence(sg: FiniteSemigroup, partition: Congruence | Sequence[int]) -> bool:
    ids = np.asarray(_as_class_ids(sg, partition))
    T = sg.table
    for c in sg.elements:
        for translated in (ids[T[c, :]], ids[T[:, c]]):
            image: dict[int, int] = {}
            for cls, img in zip(ids.tolist(), translated.tolist()):
                if image.setdefault(cls, img) != img:
                    return False
    return True


def _close(sg: FiniteSemigroup, uf: UnionFind, pending: list[tuple[int, int]]) -> Congruence:
    # Every merge pushes its one-sided translates; pairs already merged are
    # implied by earlier translates. Contexts range over S¹, the identity
    # context being the pair itself.
    T = sg.table
    while pending:
        a, b = pending.pop()
        if not uf.union(a, b):
            continue
        for c in sg.elements:
            pending.append((int(T[c, a]), int(T[c, b])))
            pending.append((int(T[a, c]), int(T[b, c])))
    return Congruence.from_labels(uf.labels())


def principal_congruence(sg: FiniteSemigroup, a: int, b: int) -> Congruence:
    """The smallest congruence identifying a and b."""
    return _close(sg, UnionFind(sg.order), [(a, b)])


def congruence_join(sg: FiniteSemigroup, c1: Congruence, c2: Congruence) -> Congruence:
    """Join in the congruence lattice: equivalence join, then re-closed."""
    joined = c1.join(c2)
    uf = UnionFind(sg.order)
    pending = [(block[0], x) for block in joined.blocks() for x in block[1:]]
    return _close(sg, uf, pending)


def all_congruences(sg: FiniteSemigroup, *, max_order: int = DEFAULT_MAX_ORDER) -> tuple[Congruence, ...]:
    """
    The full congruence lattice: every congruence is a join of principal
    ones, so closing the principal congruences (plus the identity) under
    joins enumerates it. Sorted from finest to coarsest.
    """
    if sg.order > max_order:
        raise OrderTooLarge(sg.order, max_order)

    found: set[Congruence] = {Congruence.identity(sg.order)}
    for a in sg.elements:
        for b in range(a + 1, sg.order):
            found.add(principal_congruence(sg, a, b))
    logger.debug("%r: %d distinct principal congruences", sg, len(found) - 1)

    frontier = list(found)
    while frontier:
        c = frontier.pop()
        for d in list(found):
            j = congruence_join(sg, c, d)
            if j not in found:
                found.add(j)
                frontier.append(j)

    logger.debug("%r: congruence lattice has %d members", sg, len(found))
    return tuple(sorted(found, key=lambda c: (-c.class_count, c.class_id)))


def separates_regular(sg: FiniteSemigroup, c: Congruence) -> bool:
    seen: set[int] = set()
    for x in sg.regular_elements:
        if c.class_id[x] in seen:
            return False
        seen.add(c.class_id[x])
    return True


def separates_idempotents(sg: FiniteSemigroup, c: Congruence) -> bool:
    classes = [c.class_id[e] for e in sg.idempotents]
    return len(classes) == len(set(classes))


def _largest(candidates: list[Congruence]) -> Congruence | AmbiguityReport:
    maximal = tuple(
        c for c in candidates
        if not any(d != c and c.refines(d) for d in candidates)
    )
    if len(maximal) == 1:
        return maximal[0]
    return AmbiguityReport(maximal)


def largest_separating_oracle(
    sg: FiniteSemigroup, *, max_order: int = DEFAULT_MAX_ORDER
) -> Congruence | AmbiguityReport:
    """Largest congruence whose classes hold at most one regular element, by
    enumeration of the whole lattice."""
    lattice = all_congruences(sg, max_order=max_order)
    return _largest([c for c in lattice if separates_regular(sg, c)])


def largest_idempotent_separating_oracle(
    sg: FiniteSemigroup, *, max_order: int = DEFAULT_MAX_ORDER
) -> Congruence | AmbiguityReport:
    lattice = all_congruences(sg, max_order=max_order)
    return _largest([c for c in lattice if separates_idempotents(sg, c)])
