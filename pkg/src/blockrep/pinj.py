"""
Elements of the symmetric inverse semigroup I(X) on X = {0, ..., n-1}.

Maps are written on the right of their argument, as in x(fg) = (xf)g:
`f * g` applies f first and g second. Every representation in this package
uses the same convention, so phi[s] * phi[t] == phi[s*t].
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Collection, Iterable, Mapping, Sequence

from .semigroup import NotClosed, ValidationError


class UniverseMismatch(ValidationError):
    def __init__(self, left: int, right: int) -> None:
        super().__init__(f"cannot compose maps on universes of size {left} and {right}")


class NotInjective(ValidationError):
    pass


@dataclass(frozen=True)
class PartialInjection:
    universe_size: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen_images: set[int] = set()
        previous = -1
        for x, y in self.pairs:
            if x <= previous:
                raise ValidationError(f"domain points must be strictly ascending, got {self.pairs}")
            previous = x
            if not (0 <= x < self.universe_size and 0 <= y < self.universe_size):
                raise ValidationError(f"pair {x}->{y} leaves universe of size {self.universe_size}")
            if y in seen_images:
                raise NotInjective(f"two domain points map to {y}")
            seen_images.add(y)

    @classmethod
    def from_mapping(cls, universe_size: int, mapping: Mapping[int, int]) -> "PartialInjection":
        return cls(universe_size, tuple(sorted((int(x), int(y)) for x, y in mapping.items())))

    @classmethod
    def identity(cls, universe_size: int, subset: Iterable[int] | None = None) -> "PartialInjection":
        points = range(universe_size) if subset is None else sorted(set(subset))
        return cls(universe_size, tuple((x, x) for x in points))

    @cached_property
    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    @cached_property
    def domain(self) -> frozenset[int]:
        return frozenset(x for x, _ in self.pairs)

    @cached_property
    def image(self) -> frozenset[int]:
        return frozenset(y for _, y in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def apply(self, x: int) -> int | None:
        return self.as_dict.get(x)

    def compose(self, other: "PartialInjection") -> "PartialInjection":
        """x(self·other) = (x self) other, defined where both steps are."""
        if self.universe_size != other.universe_size:
            raise UniverseMismatch(self.universe_size, other.universe_size)
        second = other.as_dict
        return PartialInjection(
            self.universe_size,
            tuple((x, second[y]) for x, y in self.pairs if y in second),
        )

    __mul__ = compose

    def invert(self) -> "PartialInjection":
        return PartialInjection(self.universe_size, tuple(sorted((y, x) for x, y in self.pairs)))

    def is_partial_identity(self) -> bool:
        return all(x == y for x, y in self.pairs)

    def is_idempotent(self) -> bool:
        return self * self == self

    def render(self, labels: Sequence[str] | None = None) -> str:
        name = (lambda x: labels[x]) if labels is not None else str
        return "{" + ", ".join(f"{name(x)}↦{name(y)}" for x, y in self.pairs) + "}"

    def __str__(self) -> str:
        return self.render()


def compose(f: PartialInjection, g: PartialInjection) -> PartialInjection:
    return f.compose(g)


def invert(f: PartialInjection) -> PartialInjection:
    return f.invert()


def idempotents_commute_in_image(maps: Collection[PartialInjection]) -> bool:
    """True iff the idempotents of a composition-closed set of partial
    injections commute. Raises NotClosed when the set is not closed."""
    members = set(maps)
    for f in members:
        for g in members:
            if f * g not in members:
                raise NotClosed(f, g)
    idempotents = [f for f in members if f.is_idempotent()]
    return all(e * f == f * e for e, f in combinations(idempotents, 2))
