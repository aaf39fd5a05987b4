"""
Membership in the pseudovarieties BG, Ecom, EI, N and inverse semigroups,
each computed structurally and cross-checked against its defining
pseudoidentity, plus the instance-level Mal'cev product witnesses:

- every fiber of the Vagner-Preston representation φ over an idempotent of
  Im(φ) is a nilpotent subsemigroup and Im(φ) has commuting idempotents
  (S is an N-extension of a member of Ecom);
- every fiber of the Munn representation δ over an idempotent of Im(δ) has
  a single idempotent (S is an EI-extension of a member of Ecom).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from .pinj import PartialInjection, idempotents_commute_in_image
from .representations import Representation, munn_representation, vp_representation
from .semigroup import FiniteSemigroup, InternalInconsistency
from .terms import Pseudoidentity, Satisfaction, parse_pseudoidentities, satisfies_all


logger = logging.getLogger(__name__)


STANDARD_IDENTITIES = {
    "BG": "(x^w y^w)^w = (y^w x^w)^w",
    "BG-two-sided": "(x^w y^w)^w x^w = (x^w y^w)^w = y^w (x^w y^w)^w",
    "Ecom": "x^w y^w = y^w x^w",
    "EI": "x^w = y^w",
    "N": "x^w y = x^w = y x^w",
}


class FiberNotNilpotent(InternalInconsistency):
    def __init__(self, idempotent: PartialInjection, fiber: tuple[int, ...]) -> None:
        self.idempotent, self.fiber = idempotent, fiber
        super().__init__(f"fiber {list(fiber)} over {idempotent} is not a nilpotent subsemigroup")


@lru_cache(maxsize=None)
def standard_identity(name: str) -> tuple[Pseudoidentity, ...]:
    return parse_pseudoidentities(STANDARD_IDENTITIES[name])


def check_standard(sg: FiniteSemigroup, name: str) -> Satisfaction:
    return satisfies_all(sg, standard_identity(name))


def _cross_checked(sg: FiniteSemigroup, name: str, structural: bool) -> bool:
    by_identity = bool(check_standard(sg, name))
    if by_identity != structural:
        raise InternalInconsistency(
            f"{sg!r}: {name} membership is {structural} structurally but {by_identity} by pseudoidentity"
        )
    logger.debug("%r: %s membership %s", sg, name, structural)
    return structural


def is_ecom(sg: FiniteSemigroup) -> bool:
    E = sg.idempotents
    commute = all(sg.mul(e, f) == sg.mul(f, e) for e in E for f in E)
    return _cross_checked(sg, "Ecom", commute)


def is_ei(sg: FiniteSemigroup) -> bool:
    return _cross_checked(sg, "EI", len(sg.idempotents) == 1)


def is_inverse(sg: FiniteSemigroup) -> bool:
    return sg.is_inverse


def _ideal_powers_collapse(sg: FiniteSemigroup) -> bool:
    z = sg.zero
    if z is None:
        return False
    T = sg.table
    power = frozenset(sg.elements)
    for _ in range(sg.order):
        if power == {z}:
            return True
        power = frozenset(int(T[a, b]) for a in power for b in sg.elements)
    return power == {z}


def is_nilpotent(sg: FiniteSemigroup) -> bool:
    """S has a zero z with S^k = {z} for some k <= |S|; cross-checked against
    having exactly one regular element and against x^ω being a zero."""
    primary = _ideal_powers_collapse(sg)
    unique_regular = len(sg.regular_elements) == 1
    if primary != unique_regular:
        raise InternalInconsistency(
            f"{sg!r}: ideal powers say nilpotent={primary}, "
            f"but it has {len(sg.regular_elements)} regular elements"
        )
    return _cross_checked(sg, "N", primary)


def is_block_group(sg: FiniteSemigroup) -> bool:
    """The structural verdict, cross-checked against both BG pseudoidentities."""
    verdict = bool(sg.is_block_group())
    _cross_checked(sg, "BG", verdict)
    return _cross_checked(sg, "BG-two-sided", verdict)


@dataclass(frozen=True)
class FiberVerdict:
    idempotent: PartialInjection
    fiber: tuple[int, ...]
    is_subsemigroup: bool
    is_nilpotent: bool
    idempotent_count: int


@dataclass(frozen=True)
class FiberReport:
    representation: str
    image_size: int
    image_is_ecom: bool
    fibers: tuple[FiberVerdict, ...]

    @property
    def ok(self) -> bool:
        return self.image_is_ecom and all(f.is_subsemigroup for f in self.fibers)


def _fibers(sg: FiniteSemigroup, rep: Representation) -> tuple[bool, list[FiberVerdict]]:
    image = rep.image()
    image_is_ecom = idempotents_commute_in_image(image)
    verdicts = []
    for eps in sorted((f for f in image if f.is_idempotent()), key=lambda f: rep.fiber(f)):
        fiber = rep.fiber(eps)
        closed = sg.is_subsemigroup(fiber)
        nilpotent = closed and is_nilpotent(sg.restrict(fiber))
        verdicts.append(FiberVerdict(
            idempotent=eps,
            fiber=fiber,
            is_subsemigroup=closed,
            is_nilpotent=nilpotent,
            idempotent_count=sum(1 for x in fiber if sg.is_idempotent(x)),
        ))
    return image_is_ecom, verdicts


def malcev_fiber_check(sg: FiniteSemigroup, rep: Representation | None = None) -> FiberReport:
    """Fibers of φ over the idempotents of Im(φ): each must be a nilpotent
    subsemigroup, and Im(φ) must have commuting idempotents."""
    sg.require_block_group()
    rep = rep or vp_representation(sg)
    image_is_ecom, verdicts = _fibers(sg, rep)
    for v in verdicts:
        if not v.is_nilpotent:
            raise FiberNotNilpotent(v.idempotent, v.fiber)
    if not image_is_ecom:
        raise InternalInconsistency(f"{sg!r}: idempotents of Im(φ) do not commute")
    return FiberReport("vagner-preston", len(rep.image()), image_is_ecom, tuple(verdicts))


def munn_fiber_check(sg: FiniteSemigroup, rep: Representation | None = None) -> FiberReport:
    """Fibers of δ over the idempotents of Im(δ): each must be a subsemigroup
    with exactly one idempotent."""
    sg.require_block_group()
    rep = rep or munn_representation(sg)
    image_is_ecom, verdicts = _fibers(sg, rep)
    for v in verdicts:
        if not v.is_subsemigroup or v.idempotent_count != 1:
            raise InternalInconsistency(
                f"{sg!r}: Munn fiber {list(v.fiber)} holds {v.idempotent_count} idempotents"
            )
    if not image_is_ecom:
        raise InternalInconsistency(f"{sg!r}: idempotents of Im(δ) do not commute")
    return FiberReport("munn", len(rep.image()), image_is_ecom, tuple(verdicts))
