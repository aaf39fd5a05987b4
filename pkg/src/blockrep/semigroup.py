from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


logger = logging.getLogger(__name__)

Element = int


class SemigroupError(RuntimeError):
    def __init__(self, msg: str) -> None:
        super().__init__(msg)


class ValidationError(SemigroupError):
    pass


class LimitExceeded(SemigroupError):
    pass


class InternalInconsistency(SemigroupError):
    pass


class MalformedTable(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    def __init__(self, row: int, col: int, value: int, order: int) -> None:
        self.row, self.col, self.value, self.order = row, col, value, order
        super().__init__(f"table entry ({row},{col}) = {value} is outside [0, {order})")


class NotAssociative(ValidationError):
    def __init__(self, triple: tuple[int, int, int], left: int, right: int) -> None:
        self.triple = triple
        i, j, k = triple
        super().__init__(f"not associative: ({i}*{j})*{k} = {left} but {i}*({j}*{k}) = {right}")


class NotBlockGroup(SemigroupError):
    def __init__(self, witness: "IdempotentWitness | None" = None) -> None:
        self.witness = witness
        detail = f": {witness}" if witness else ""
        super().__init__(f"semigroup is not a block-group{detail}")


class NotIdempotent(SemigroupError):
    def __init__(self, x: int) -> None:
        self.element = x
        super().__init__(f"element {x} is not idempotent")


class NotInverseSemigroup(SemigroupError):
    pass


class NotClosed(SemigroupError):
    def __init__(self, a: object, b: object) -> None:
        self.pair = (a, b)
        super().__init__(f"set is not closed under multiplication: product of {a} and {b} escapes it")


@dataclass(frozen=True)
class RegularityData:
    is_idempotent: tuple[bool, ...]
    is_regular: tuple[bool, ...]
    inverses: tuple[tuple[int, ...], ...]
    unique_inverse: tuple[int | None, ...]


@dataclass(frozen=True, eq=False)
class GreenSummary:
    r_class_id: tuple[int, ...]
    l_class_id: tuple[int, ...]
    h_class_id: tuple[int, ...]
    d_class_id: tuple[int, ...]
    j_class_id: tuple[int, ...]
    leq_r: np.ndarray
    leq_l: np.ndarray

    def class_ids(self, kind: str) -> tuple[int, ...]:
        try:
            return getattr(self, f"{kind.lower()}_class_id")
        except AttributeError:
            raise ValueError(f"unknown Green relation {kind!r}") from None

    def related(self, kind: str, a: int, b: int) -> bool:
        ids = self.class_ids(kind)
        return ids[a] == ids[b]

    def classes(self, kind: str) -> list[tuple[int, ...]]:
        return _blocks(self.class_ids(kind))


@dataclass(frozen=True)
class IdempotentWitness:
    kind: str  # "R" or "L"
    e: int
    f: int

    def __str__(self) -> str:
        return f"idempotents {self.e} and {self.f} share an {self.kind}-class"


@dataclass(frozen=True)
class BlockGroupVerdict:
    holds: bool
    witness: IdempotentWitness | None = None

    def __bool__(self) -> bool:
        return self.holds


def _class_ids(equiv: np.ndarray) -> tuple[int, ...]:
    """Canonical class ids of an equivalence given as a boolean matrix."""
    n = equiv.shape[0]
    ids = [-1] * n
    next_id = 0
    for i in range(n):
        if ids[i] >= 0:
            continue
        for j in np.flatnonzero(equiv[i]):
            ids[int(j)] = next_id
        next_id += 1
    return tuple(ids)


def _blocks(ids: Sequence[int]) -> list[tuple[int, ...]]:
    out: dict[int, list[int]] = {}
    for x, c in enumerate(ids):
        out.setdefault(c, []).append(x)
    return [tuple(members) for _, members in sorted(out.items())]


def _containment(member: np.ndarray) -> np.ndarray:
    # leq[s, t] iff row s is a subset of row t
    return ~np.any(member[:, None, :] & ~member[None, :, :], axis=2)


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class FiniteSemigroup:
    """
    A finite semigroup given by its Cayley table. Elements are the indices
    0..n-1 and table[i, j] is the product i*j. Use load_table() to build one;
    the constructor trusts its input.

    Every derived structure (idempotents, inverses, Green's relations, the
    block-group verdict) is computed on first access and cached. Instances
    are never mutated after construction.
    """

    def __init__(
        self,
        table: np.ndarray,
        *,
        labels: Sequence[str] | None = None,
        has_adjoined_identity: bool = False,
        name: str | None = None,
    ) -> None:
        self.table = _frozen(np.array(table, dtype=np.intp, copy=True))
        n = self.table.shape[0]
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        self.has_labels = labels is not None
        self.has_adjoined_identity = has_adjoined_identity
        self.name = name

    def __repr__(self) -> str:
        return f"FiniteSemigroup(name={self.name!r}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @property
    def elements(self) -> range:
        return range(self.order)

    def label(self, x: int) -> str:
        return self.labels[x]

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def product(self, *xs: int) -> int:
        if not xs:
            raise ValueError("empty product in a semigroup")
        acc = xs[0]
        for x in xs[1:]:
            acc = int(self.table[acc, x])
        return acc

    # ------------- identities and zeros -------------
    @cached_property
    def identity(self) -> int | None:
        idx = np.arange(self.order)
        for e in self.elements:
            if np.array_equal(self.table[e], idx) and np.array_equal(self.table[:, e], idx):
                return e
        return None

    @cached_property
    def zero(self) -> int | None:
        for z in self.elements:
            if np.all(self.table[z] == z) and np.all(self.table[:, z] == z):
                return z
        return None

    def adjoin_identity(self) -> "FiniteSemigroup":
        """S¹: self when an identity exists, otherwise a copy with a new
        identity at index n."""
        if self.identity is not None:
            return self
        n = self.order
        table = np.empty((n + 1, n + 1), dtype=np.intp)
        table[:n, :n] = self.table
        table[n, :] = np.arange(n + 1)
        table[:, n] = np.arange(n + 1)
        name = f"{self.name}^1" if self.name else None
        return FiniteSemigroup(table, labels=(*self.labels, "1"), has_adjoined_identity=True, name=name)

    # ------------- powers -------------
    def index_period(self, x: int) -> tuple[int, int, tuple[int, ...]]:
        """(index m, period r, powers) of the cyclic subsemigroup of x, where
        powers[k - 1] = x^k for k in 1..m+r-1."""
        powers = [x]
        seen = {x: 1}
        p = x
        while True:
            p = int(self.table[p, x])
            k = len(powers) + 1
            if p in seen:
                m = seen[p]
                return m, k - m, tuple(powers)
            seen[p] = k
            powers.append(p)

    def omega(self, x: int) -> int:
        """x^ω, the unique idempotent power of x."""
        return self.omegas[x]

    @cached_property
    def omegas(self) -> tuple[int, ...]:
        out = []
        for x in self.elements:
            m, r, powers = self.index_period(x)
            k = r * -(-m // r)  # smallest multiple of r that is >= m
            out.append(powers[k - 1])
        return tuple(out)

    # ------------- regularity -------------
    @cached_property
    def regularity(self) -> RegularityData:
        T = self.table
        idx = np.arange(self.order)
        xyx = T[T, idx[:, None]]     # xyx[x, y] = (x*y)*x
        yxy = T[T.T, idx[None, :]]   # yxy[x, y] = (y*x)*y
        is_inverse = (xyx == idx[:, None]) & (yxy == idx[None, :])
        inverses = tuple(tuple(int(y) for y in np.flatnonzero(row)) for row in is_inverse)
        data = RegularityData(
            is_idempotent=tuple(bool(T[x, x] == x) for x in self.elements),
            is_regular=tuple(bool(inv) for inv in inverses),
            inverses=inverses,
            unique_inverse=tuple(inv[0] if len(inv) == 1 else None for inv in inverses),
        )
        logger.debug("%r: %d regular elements", self, sum(data.is_regular))
        return data

    @cached_property
    def idempotents(self) -> tuple[int, ...]:
        return tuple(x for x in self.elements if self.regularity.is_idempotent[x])

    @cached_property
    def regular_elements(self) -> tuple[int, ...]:
        return tuple(x for x in self.elements if self.regularity.is_regular[x])

    def is_idempotent(self, x: int) -> bool:
        return self.regularity.is_idempotent[x]

    def is_regular(self, x: int) -> bool:
        return self.regularity.is_regular[x]

    def inverse(self, x: int) -> int:
        """The unique inverse of a regular element of a block-group."""
        inv = self.regularity.unique_inverse[x]
        if inv is None:
            count = len(self.regularity.inverses[x])
            raise NotInverseSemigroup(f"element {x} has {count} inverses, expected exactly one")
        return inv

    # ------------- Green's relations -------------
    @cached_property
    def ideal_membership(self) -> tuple[np.ndarray, np.ndarray]:
        """(right, left) with right[s, u] iff u in sS¹ and left[s, u] iff u in S¹s.
        The identity of S¹ is virtual: s itself is always a member."""
        T = self.table
        idx = np.arange(self.order)
        right = np.eye(self.order, dtype=bool)
        right[idx[:, None], T] = True
        left = np.eye(self.order, dtype=bool)
        left[idx[:, None], T.T] = True
        return _frozen(right), _frozen(left)

    @cached_property
    def green(self) -> GreenSummary:
        right, left = self.ideal_membership
        leq_r = _containment(right)
        leq_l = _containment(left)
        r_eq = leq_r & leq_r.T
        l_eq = leq_l & leq_l.T

        reach = r_eq | l_eq
        for k in range(self.order):
            reach |= reach[:, k, None] & reach[None, k, :]

        two_sided = (right.astype(np.int64) @ left.astype(np.int64)) > 0
        leq_j = _containment(two_sided)

        summary = GreenSummary(
            r_class_id=_class_ids(r_eq),
            l_class_id=_class_ids(l_eq),
            h_class_id=_class_ids(r_eq & l_eq),
            d_class_id=_class_ids(reach),
            j_class_id=_class_ids(leq_j & leq_j.T),
            leq_r=_frozen(leq_r),
            leq_l=_frozen(leq_l),
        )
        logger.debug("%r: %d R-classes, %d L-classes, %d D-classes", self,
                     len(set(summary.r_class_id)), len(set(summary.l_class_id)),
                     len(set(summary.d_class_id)))
        return summary

    # ------------- block-groups -------------
    @cached_property
    def _block_group_verdict(self) -> BlockGroupVerdict:
        green = self.green
        witness = None
        for kind, ids in (("R", green.r_class_id), ("L", green.l_class_id)):
            first: dict[int, int] = {}
            for e in self.idempotents:
                other = first.setdefault(ids[e], e)
                if other != e:
                    witness = IdempotentWitness(kind, other, e)
                    break
            if witness is not None:
                break

        by_inverses = all(len(inv) <= 1 for inv in self.regularity.inverses)
        if by_inverses != (witness is None):
            raise InternalInconsistency(
                f"{self!r}: idempotent criterion says {witness is None}, "
                f"inverse criterion says {by_inverses}"
            )
        return BlockGroupVerdict(witness is None, witness)

    def is_block_group(self) -> BlockGroupVerdict:
        return self._block_group_verdict

    def require_block_group(self) -> None:
        verdict = self.is_block_group()
        if not verdict:
            raise NotBlockGroup(verdict.witness)

    @property
    def is_inverse(self) -> bool:
        return all(len(inv) == 1 for inv in self.regularity.inverses)

    def natural_leq(self, e: int, f: int) -> bool:
        return self.mul(e, f) == e == self.mul(f, e)

    def idempotent_meet(self, e: int, f: int) -> int:
        """e ∧ f = (ef)^ω in the semilattice of idempotents of a block-group."""
        self.require_block_group()
        for x in (e, f):
            if not self.is_idempotent(x):
                raise NotIdempotent(x)
        return self.omega(self.mul(e, f))

    # ------------- subsemigroups -------------
    def is_subsemigroup(self, subset: Iterable[int]) -> bool:
        members = sorted(set(subset))
        if not members:
            return False
        inside = np.zeros(self.order, dtype=bool)
        inside[members] = True
        return bool(np.all(inside[self.table[np.ix_(members, members)]]))

    def restrict(self, subset: Iterable[int], *, name: str | None = None) -> "FiniteSemigroup":
        """The subsemigroup on `subset`, re-indexed in ascending order."""
        members = sorted(set(subset))
        old_to_new = {x: i for i, x in enumerate(members)}
        table = np.empty((len(members), len(members)), dtype=np.intp)
        for i, a in enumerate(members):
            for j, b in enumerate(members):
                ab = int(self.table[a, b])
                if ab not in old_to_new:
                    raise NotClosed(a, b)
                table[i, j] = old_to_new[ab]
        return FiniteSemigroup(table, labels=[self.labels[x] for x in members], name=name)


def associativity_witness(table: np.ndarray) -> tuple[int, int, int] | None:
    """The first triple (i, j, k) in lexicographic order with (ij)k != i(jk),
    or None. Entries must already be valid indices."""
    for i in range(table.shape[0]):
        left = table[table[i]]    # left[j, k] = (i*j)*k
        right = table[i][table]   # right[j, k] = i*(j*k)
        bad = np.argwhere(left != right)
        if len(bad):
            j, k = (int(v) for v in bad[0])
            return i, j, k
    return None


def load_table(
    order: int,
    entries: Sequence[Sequence[int]] | np.ndarray,
    *,
    labels: Sequence[str] | None = None,
    has_adjoined_identity: bool = False,
    name: str | None = None,
) -> FiniteSemigroup:
    """Validate a Cayley table and wrap it. Rejects malformed shapes, entries
    outside [0, order) and non-associative tables."""
    if order < 1:
        raise MalformedTable(f"order must be positive, got {order}")
    try:
        table = np.asarray(entries)
    except ValueError as e:
        raise MalformedTable(f"ragged table: {e}") from e
    if table.shape != (order, order):
        raise MalformedTable(f"expected a {order}x{order} table, got shape {table.shape}")
    if not np.issubdtype(table.dtype, np.integer):
        raise MalformedTable(f"table entries must be integers, got {table.dtype}")
    if labels is not None and len(labels) != order:
        raise MalformedTable(f"expected {order} labels, got {len(labels)}")

    bad = np.argwhere((table < 0) | (table >= order))
    if len(bad):
        row, col = (int(v) for v in bad[0])
        raise IndexOutOfRange(row, col, int(table[row, col]), order)

    table = table.astype(np.intp)
    witness = associativity_witness(table)
    if witness is not None:
        i, j, k = witness
        raise NotAssociative(witness, int(table[table[i, j], k]), int(table[i, table[j, k]]))

    sg = FiniteSemigroup(table, labels=labels, has_adjoined_identity=has_adjoined_identity, name=name)
    if has_adjoined_identity and sg.identity != order - 1:
        raise MalformedTable(f"adjoined identity must sit at index {order - 1}")
    logger.debug("loaded %r", sg)
    return sg
