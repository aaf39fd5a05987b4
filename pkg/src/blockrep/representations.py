"""
Vagner-Preston (φ) and Munn (δ) representations of finite block-groups.

For s in S:
    R(s) = {e in E(S) : e <=_R s}        L(s) = {e in E(S) : e <=_L s}
    D(s) = U {Se : e in R(s)}            I(s) = U {Se : e in L(s)}
    φ_s : D(s) -> I(s),  x ↦ xs           δ_s : R(s) -> L(s),  e ↦ (es)⁻¹(es)

I(s) is built from the left ideals Se with e in L(s), literally as in its
definition, not from eS.

Maps act on the right (see pinj), so both representations satisfy
map(s) * map(t) == map(s*t). Every structural property that the
construction relies on (bijectivity, multiplicativity, separation) is
re-checked and reported as a RepresentationError when it fails.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Callable

from .congruence import Congruence, is_congruence
from .pinj import PartialInjection
from .semigroup import FiniteSemigroup, InternalInconsistency, NotInverseSemigroup


logger = logging.getLogger(__name__)


class RepresentationError(InternalInconsistency):
    pass


class BijectionFailure(RepresentationError):
    def __init__(self, s: int, reason: str) -> None:
        self.element = s
        super().__init__(f"map of element {s}: {reason}")


class MultiplicativityFailure(RepresentationError):
    def __init__(self, s: int, t: int) -> None:
        self.pair = (s, t)
        super().__init__(f"map({s}) * map({t}) != map({s}*{t})")


class RegularCollision(RepresentationError):
    def __init__(self, s: int, t: int) -> None:
        self.pair = (s, t)
        super().__init__(f"distinct regular elements {s} and {t} have the same image")


class IdempotentCollision(RepresentationError):
    def __init__(self, e: int, f: int) -> None:
        self.pair = (e, f)
        super().__init__(f"distinct idempotents {e} and {f} have the same image")


class DomainMismatch(RepresentationError):
    def __init__(self, s: int, which: str) -> None:
        self.element, self.which = s, which
        super().__init__(f"element {s}: {which} differs from its closed form")


class RepresentationKind(Enum):
    VAGNER_PRESTON = "vagner-preston"
    MUNN = "munn"
    CLASSICAL_VAGNER_PRESTON = "classical-vagner-preston"
    CLASSICAL_MUNN = "classical-munn"


@dataclass(frozen=True)
class RepElement:
    source: int
    map: PartialInjection
    domain_kind: str


@dataclass(frozen=True)
class Representation:
    kind: RepresentationKind
    elements: tuple[RepElement, ...]
    kernel: Congruence
    semigroup: FiniteSemigroup = field(compare=False, repr=False)

    def map(self, s: int) -> PartialInjection:
        return self.elements[s].map

    @property
    def maps(self) -> tuple[PartialInjection, ...]:
        return tuple(el.map for el in self.elements)

    @property
    def is_injective(self) -> bool:
        return self.kernel == Congruence.identity(len(self.elements))

    def image(self) -> frozenset[PartialInjection]:
        return frozenset(self.maps)

    def fiber(self, f: PartialInjection) -> tuple[int, ...]:
        return tuple(el.source for el in self.elements if el.map == f)


# ------------- the sets R(s), L(s), D(s), I(s) -------------
def r_set(sg: FiniteSemigroup, s: int) -> frozenset[int]:
    leq_r = sg.green.leq_r
    return frozenset(e for e in sg.idempotents if leq_r[e, s])


def l_set(sg: FiniteSemigroup, s: int) -> frozenset[int]:
    leq_l = sg.green.leq_l
    return frozenset(e for e in sg.idempotents if leq_l[e, s])


def _fixed_by_some(sg: FiniteSemigroup, idempotents: frozenset[int]) -> frozenset[int]:
    # x in Se iff x = xe
    T = sg.table
    return frozenset(x for x in sg.elements if any(T[x, e] == x for e in idempotents))


def d_set(sg: FiniteSemigroup, s: int) -> frozenset[int]:
    return _fixed_by_some(sg, r_set(sg, s))


def i_set(sg: FiniteSemigroup, s: int) -> frozenset[int]:
    return _fixed_by_some(sg, l_set(sg, s))


# ------------- single maps -------------
def _bijection(
    sg: FiniteSemigroup, s: int, domain: frozenset[int], target: frozenset[int], act: Callable[[int], int]
) -> PartialInjection:
    mapping = {x: act(x) for x in sorted(domain)}
    images = set(mapping.values())
    if len(images) != len(mapping):
        raise BijectionFailure(s, "not injective on its domain")
    if images != target:
        raise BijectionFailure(s, f"image {sorted(images)} differs from target {sorted(target)}")
    return PartialInjection.from_mapping(sg.order, mapping)


def _vp_map(sg: FiniteSemigroup, s: int) -> PartialInjection:
    return _bijection(sg, s, d_set(sg, s), i_set(sg, s), lambda x: sg.mul(x, s))


def vp_map(sg: FiniteSemigroup, s: int) -> PartialInjection:
    """φ_s : D(s) -> I(s), x ↦ xs."""
    sg.require_block_group()
    return _vp_map(sg, s)


def _block_group_inverse(sg: FiniteSemigroup, x: int) -> int:
    inv = sg.regularity.unique_inverse[x]
    if inv is None:
        raise InternalInconsistency(f"element {x} should have a unique inverse")
    return inv


def _munn_act(sg: FiniteSemigroup, s: int) -> Callable[[int], int]:
    def act(e: int) -> int:
        es = sg.mul(e, s)
        return sg.mul(_block_group_inverse(sg, es), es)
    return act


def munn_map(sg: FiniteSemigroup, s: int) -> PartialInjection:
    """δ_s : R(s) -> L(s), e ↦ (es)⁻¹(es), on the idempotent indices of S."""
    sg.require_block_group()
    return _bijection(sg, s, r_set(sg, s), l_set(sg, s), _munn_act(sg, s))


# ------------- whole representations -------------
def _check_multiplicative(sg: FiniteSemigroup, maps: list[PartialInjection]) -> None:
    for s in sg.elements:
        for t in sg.elements:
            if maps[s] * maps[t] != maps[sg.mul(s, t)]:
                raise MultiplicativityFailure(s, t)


def _kernel(sg: FiniteSemigroup, maps: list[PartialInjection]) -> Congruence:
    ker = Congruence.from_labels(maps)
    if not is_congruence(sg, ker):
        raise RepresentationError(f"kernel {ker} is not a congruence")
    return ker


def _build(
    sg: FiniteSemigroup, kind: RepresentationKind, maps: list[PartialInjection], domain_kind: str
) -> Representation:
    _check_multiplicative(sg, maps)
    rep = Representation(
        kind=kind,
        elements=tuple(RepElement(s, m, domain_kind) for s, m in enumerate(maps)),
        kernel=_kernel(sg, maps),
        semigroup=sg,
    )
    logger.debug("%r: %s kernel has %d classes", sg, kind.value, rep.kernel.class_count)
    return rep


def vp_representation(sg: FiniteSemigroup) -> Representation:
    """
    The Vagner-Preston representation φ: S -> I(S) of a block-group.

    Checks multiplicativity for all pairs, that φ is injective on Reg(S), and
    that D(s) = Sss⁻¹ and I(s) = Ss⁻¹s for regular s.
    """
    sg.require_block_group()
    maps = [_vp_map(sg, s) for s in sg.elements]
    rep = _build(sg, RepresentationKind.VAGNER_PRESTON, maps, "D(s)->I(s)")

    for s, t in combinations(sg.regular_elements, 2):
        if maps[s] == maps[t]:
            raise RegularCollision(s, t)

    T = sg.table
    for s in sg.regular_elements:
        inv = _block_group_inverse(sg, s)
        if maps[s].domain != frozenset(T[:, sg.mul(s, inv)].tolist()):
            raise DomainMismatch(s, "D(s) = Sss⁻¹")
        if maps[s].image != frozenset(T[:, sg.mul(inv, s)].tolist()):
            raise DomainMismatch(s, "I(s) = Ss⁻¹s")
    return rep


def munn_representation(sg: FiniteSemigroup) -> Representation:
    """The Munn representation δ: S -> I(E(S)); idempotent-separating."""
    sg.require_block_group()
    maps = [munn_map(sg, s) for s in sg.elements]
    rep = _build(sg, RepresentationKind.MUNN, maps, "R(s)->L(s)")
    for e, f in combinations(sg.idempotents, 2):
        if maps[e] == maps[f]:
            raise IdempotentCollision(e, f)
    return rep


def kernel(rep: Representation) -> Congruence:
    """Partition of S by equal images, re-verified to be a congruence."""
    return _kernel(rep.semigroup, list(rep.maps))


# ------------- the classical constructions on inverse semigroups -------------
def _require_inverse(sg: FiniteSemigroup) -> None:
    if not sg.is_inverse:
        raise NotInverseSemigroup(f"{sg!r} is not an inverse semigroup")


def classical_vagner_preston(sg: FiniteSemigroup) -> Representation:
    """x ↦ xs on Sss⁻¹, built from unique inverses only."""
    _require_inverse(sg)
    T = sg.table
    maps = []
    for s in sg.elements:
        domain = set(T[:, sg.mul(s, sg.inverse(s))].tolist())
        maps.append(PartialInjection.from_mapping(sg.order, {x: sg.mul(x, s) for x in domain}))
    return _build(sg, RepresentationKind.CLASSICAL_VAGNER_PRESTON, maps, "Sss⁻¹->Ss⁻¹s")


def classical_munn(sg: FiniteSemigroup) -> Representation:
    """e ↦ s⁻¹es on Ess⁻¹."""
    _require_inverse(sg)
    maps = []
    for s in sg.elements:
        inv = sg.inverse(s)
        domain = {sg.product(e, s, inv) for e in sg.idempotents}
        maps.append(PartialInjection.from_mapping(sg.order, {e: sg.product(inv, e, s) for e in domain}))
    return _build(sg, RepresentationKind.CLASSICAL_MUNN, maps, "Ess⁻¹->Es⁻¹s")
