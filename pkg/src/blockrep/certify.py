"""
Exhaustive certification of the block-group representation theory on a
concrete semigroup. Each check is a generator of violation messages; a
semigroup is certified when no registered check yields anything.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterable, Iterator

from .config import Settings
from .congruence import (
    AmbiguityReport, all_congruences, largest_idempotent_separating_oracle, largest_separating_oracle,
)
from .representations import (
    classical_munn, classical_vagner_preston, d_set, i_set, l_set, munn_representation, r_set,
    vp_map, vp_representation,
)
from .semigroup import FiniteSemigroup, SemigroupError
from .variety import (
    check_standard, is_ecom, is_ei, is_inverse, is_nilpotent, malcev_fiber_check, munn_fiber_check,
)


logger = logging.getLogger(__name__)

CheckFn = Callable[[FiniteSemigroup, Settings], Iterator[str]]


@dataclass(frozen=True)
class RegisteredCheck:
    name: str
    fn: CheckFn
    block_groups_only: bool


CHECKS: list[RegisteredCheck] = []


def check(name: str, *, block_groups_only: bool = False) -> Callable[[CheckFn], CheckFn]:
    def register(fn: CheckFn) -> CheckFn:
        CHECKS.append(RegisteredCheck(name, fn, block_groups_only))
        return fn
    return register


@dataclass(frozen=True)
class Violation:
    check: str
    detail: str

    def __str__(self) -> str:
        return f"[{self.check}] {self.detail}"


@dataclass(frozen=True)
class Certification:
    name: str
    order: int
    block_group: bool
    checks: tuple[str, ...]
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


# ------------- semigroup-core -------------
@check("omega-idempotence")
def _omega(sg, settings):
    for x in sg.elements:
        w = sg.omega(x)
        _, _, powers = sg.index_period(x)
        if sg.mul(w, w) != w or w not in powers:
            yield f"omega({x}) = {w} is not an idempotent power of {x}"


@check("green-inclusions")
def _green(sg, settings):
    g = sg.green
    for a, b in combinations(sg.elements, 2):
        if g.related("H", a, b) and not (g.related("R", a, b) and g.related("L", a, b)):
            yield f"{a} H {b} without R and L"
        if (g.related("R", a, b) or g.related("L", a, b)) and not g.related("D", a, b):
            yield f"{a} and {b} are R- or L-related but not D-related"
        if g.related("D", a, b) != g.related("J", a, b):
            yield f"D and J disagree on ({a}, {b})"


@check("block-group-criteria")
def _block_group(sg, settings):
    verdict = sg.is_block_group()
    for name in ("BG", "BG-two-sided"):
        sat = check_standard(sg, name)
        if bool(sat) != bool(verdict):
            yield f"{name} pseudoidentity says {bool(sat)}, structure says {bool(verdict)}"
    if not verdict:
        w = verdict.witness
        if w is None:
            yield "negative verdict without a witness"
            return
        if w.e == w.f or not (sg.is_idempotent(w.e) and sg.is_idempotent(w.f)):
            yield f"witness {w} is not a pair of distinct idempotents"
        elif not sg.green.related(w.kind, w.e, w.f):
            yield f"witness {w} is not {w.kind}-related"


@check("regular-translates")
def _regular_translates(sg, settings):
    for s in sg.elements:
        for e in r_set(sg, s):
            if not sg.is_regular(sg.mul(e, s)):
                yield f"e={e} in R({s}) but es={sg.mul(e, s)} is not regular"
        for e in l_set(sg, s):
            if not sg.is_regular(sg.mul(s, e)):
                yield f"e={e} in L({s}) but se={sg.mul(s, e)} is not regular"


@check("variety-inclusions")
def _inclusions(sg, settings):
    bg = bool(sg.is_block_group())
    inverse, ecom, ei, nil = is_inverse(sg), is_ecom(sg), is_ei(sg), is_nilpotent(sg)
    for premise, conclusion, label in (
        (inverse, ecom, "inverse => Ecom"),
        (ecom, bg, "Ecom => BG"),
        (nil, ei, "N => EI"),
        (ei, bg, "EI => BG"),
    ):
        if premise and not conclusion:
            yield f"{label} fails"


# ------------- block-groups -------------
@check("idempotent-semilattice", block_groups_only=True)
def _semilattice(sg, settings):
    E = sg.idempotents
    meet = sg.idempotent_meet
    for e, f in product(E, repeat=2):
        ef, fe = sg.mul(e, f) == e, sg.mul(f, e) == e
        if ef != fe or ef != sg.natural_leq(e, f):
            yield f"natural order does not collapse on ({e}, {f})"
        m = meet(e, f)
        if m != meet(f, e):
            yield f"meet({e}, {f}) is not commutative"
        if not (sg.natural_leq(m, e) and sg.natural_leq(m, f)):
            yield f"meet({e}, {f}) = {m} is not a lower bound"
        for g in E:
            if sg.natural_leq(g, e) and sg.natural_leq(g, f) and not sg.natural_leq(g, m):
                yield f"{g} is below {e} and {f} but not below their meet {m}"
    for e in E:
        if meet(e, e) != e:
            yield f"meet({e}, {e}) != {e}"
    for e, f, g in product(E, repeat=3):
        if meet(meet(e, f), g) != meet(e, meet(f, g)):
            yield f"meet is not associative on ({e}, {f}, {g})"


@check("inverse-identities", block_groups_only=True)
def _inverse_identities(sg, settings):
    inv = sg.inverse
    D = lambda a, b: sg.green.related("D", a, b)
    for s in sg.elements:
        for e in r_set(sg, s):
            es = sg.mul(e, s)
            u = inv(es)
            if not e == sg.mul(es, u) == sg.mul(s, u) == sg.product(s, u, e):
                yield f"identity chain e = (es)(es)⁻¹ = s(es)⁻¹ = s(es)⁻¹e fails for s={s}, e={e}"
            f = sg.mul(u, es)
            if f not in l_set(sg, s) or not D(f, e):
                yield f"(es)⁻¹(es) = {f} not in L({s}) or not D-related to {e}"
        for e in l_set(sg, s):
            se = sg.mul(s, e)
            u = inv(se)
            if not e == sg.mul(u, se) == sg.mul(u, s) == sg.product(e, u, s):
                yield f"identity chain e = (se)⁻¹(se) = (se)⁻¹s = e(se)⁻¹s fails for s={s}, e={e}"
            f = sg.mul(se, u)
            if f not in r_set(sg, s) or not D(f, e):
                yield f"(se)(se)⁻¹ = {f} not in R({s}) or not D-related to {e}"


@check("ideal-characterizations", block_groups_only=True)
def _ideal_characterizations(sg, settings):
    R = [r_set(sg, s) for s in sg.elements]
    L = [l_set(sg, s) for s in sg.elements]
    Ds = [d_set(sg, s) for s in sg.elements]
    Is = [i_set(sg, s) for s in sg.elements]
    for s, t in combinations(sg.elements, 2):
        if (Ds[s] == Ds[t]) != (R[s] == R[t]):
            yield f"D({s}) = D({t}) disagrees with R({s}) = R({t})"
        if (Is[s] == Is[t]) != (L[s] == L[t]):
            yield f"I({s}) = I({t}) disagrees with L({s}) = L({t})"


@check("ideal-unions", block_groups_only=True)
def _ideal_unions(sg, settings):
    T = sg.table
    for s in sg.elements:
        for name, fast, idempotents in (("D", d_set, r_set), ("I", i_set, l_set)):
            union = {int(T[x, e]) for e in idempotents(sg, s) for x in sg.elements}
            if fast(sg, s) != union:
                yield f"{name}({s}) differs from the union of the left ideals Se"


@check("r-class-preservation", block_groups_only=True)
def _r_class_preservation(sg, settings):
    for s in sg.elements:
        phi = vp_map(sg, s)
        for x, xs in phi.pairs:
            if not sg.green.related("R", x, xs):
                yield f"φ_{s} moves {x} to {xs} outside its R-class"


@check("regular-separation", block_groups_only=True)
def _regular_separation(sg, settings):
    rep = vp_representation(sg)
    ker = rep.kernel
    classes = [ker.class_id[x] for x in sg.regular_elements]
    if len(classes) != len(set(classes)):
        yield "ker(φ) does not separate regular elements"
    if is_inverse(sg):
        classical = classical_vagner_preston(sg)
        if rep.maps != classical.maps:
            yield "φ differs from the classical Vagner-Preston representation"
        if not rep.is_injective:
            yield "φ is not injective on an inverse semigroup"


@check("munn", block_groups_only=True)
def _munn(sg, settings):
    rep = munn_representation(sg)
    if is_inverse(sg) and rep.maps != classical_munn(sg).maps:
        yield "δ differs from the classical Munn representation"


@check("kernel-oracles", block_groups_only=True)
def _oracles(sg, settings):
    if sg.order > settings.max_order:
        logger.info("%r: order %d above --max-order %d, oracle comparison skipped",
                    sg, sg.order, settings.max_order)
        return
    lattice = set(all_congruences(sg, max_order=settings.max_order))
    for label, rep, oracle in (
        ("φ", vp_representation(sg), largest_separating_oracle),
        ("δ", munn_representation(sg), largest_idempotent_separating_oracle),
    ):
        expected = oracle(sg, max_order=settings.max_order)
        if isinstance(expected, AmbiguityReport):
            yield f"{len(expected.maximal)} maximal candidates for ker({label}) on a block-group"
        elif expected != rep.kernel:
            yield f"ker({label}) = {rep.kernel} but the lattice maximum is {expected}"
        if rep.kernel not in lattice:
            yield f"ker({label}) is missing from the congruence lattice"


@check("malcev-fibers", block_groups_only=True)
def _fibers(sg, settings):
    for report in (malcev_fiber_check(sg), munn_fiber_check(sg)):
        if not report.ok:
            yield f"{report.representation} fibers failed"


def certify(sg: FiniteSemigroup, settings: Settings | None = None, *, name: str | None = None) -> Certification:
    settings = settings or Settings()
    name = name or sg.name or "<anonymous>"
    bg = bool(sg.is_block_group())
    ran: list[str] = []
    violations: list[Violation] = []
    for registered in CHECKS:
        if registered.block_groups_only and not bg:
            continue
        ran.append(registered.name)
        try:
            for detail in registered.fn(sg, settings):
                violations.append(Violation(registered.name, detail))
        except SemigroupError as e:
            violations.append(Violation(registered.name, f"{type(e).__name__}: {e}"))
    logger.info("%s: %d checks, %d violations", name, len(ran), len(violations))
    return Certification(name, sg.order, bg, tuple(ran), tuple(violations))


def certify_all(semigroups: Iterable[FiniteSemigroup], settings: Settings | None = None) -> list[Certification]:
    return [certify(sg, settings) for sg in semigroups]
