"""
The analysis report. `AnalysisReport.to_dict()` is the structured form; its
field names and nesting are stable (see README). Sections that only make
sense for block-groups are None otherwise.
"""
from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass
from typing import Any

from .config import Settings
from .congruence import (
    AmbiguityReport, Congruence, all_congruences, largest_idempotent_separating_oracle,
    largest_separating_oracle,
)
from .representations import Representation, munn_representation, vp_representation
from .semigroup import FiniteSemigroup
from .variety import (
    FiberReport, is_block_group, is_ecom, is_ei, is_inverse, is_nilpotent, malcev_fiber_check,
    munn_fiber_check,
)


logger = logging.getLogger(__name__)

REPORT_VERSION = 1


@dataclass(frozen=True)
class AnalysisReport:
    semigroup: dict[str, Any]
    green: dict[str, Any]
    regularity: dict[str, Any]
    block_group: dict[str, Any]
    semilattice: dict[str, Any] | None
    vagner_preston: dict[str, Any] | None
    munn: dict[str, Any] | None
    oracles: dict[str, Any] | None
    varieties: dict[str, bool]
    fibers: list[dict[str, Any]] | None

    def to_dict(self) -> dict[str, Any]:
        return {"version": REPORT_VERSION, **asdict(self)}


def _names(sg: FiniteSemigroup, xs) -> list[str]:
    return [sg.label(x) for x in xs]


def _classes(sg: FiniteSemigroup, kind: str) -> list[list[str]]:
    return [_names(sg, block) for block in sg.green.classes(kind)]


def representation_section(sg: FiniteSemigroup, rep: Representation) -> dict[str, Any]:
    return {
        "domain_kind": rep.elements[0].domain_kind if rep.elements else None,
        "maps": {sg.label(el.source): el.map.render(sg.labels) for el in rep.elements},
        "kernel": rep.kernel.render(sg.labels),
        "injective": rep.is_injective,
        "image_size": len(rep.image()),
    }


def _oracle_value(sg: FiniteSemigroup, result: Congruence | AmbiguityReport) -> dict[str, Any]:
    if isinstance(result, AmbiguityReport):
        return {"unique": False, "maximal": [c.render(sg.labels) for c in result.maximal]}
    return {"unique": True, "congruence": result.render(sg.labels)}


def oracle_section(sg: FiniteSemigroup, settings: Settings,
                   vp: Representation | None, munn: Representation | None) -> dict[str, Any]:
    if sg.order > settings.max_order:
        return {"skipped": f"order {sg.order} exceeds max order {settings.max_order}"}
    lattice = all_congruences(sg, max_order=settings.max_order)
    regular = largest_separating_oracle(sg, max_order=settings.max_order)
    idempotent = largest_idempotent_separating_oracle(sg, max_order=settings.max_order)
    section: dict[str, Any] = {
        "lattice_size": len(lattice),
        "congruences": [c.render(sg.labels) for c in lattice],
        "largest_regular_separating": _oracle_value(sg, regular),
        "largest_idempotent_separating": _oracle_value(sg, idempotent),
    }
    if vp is not None and munn is not None:
        section["matches_vagner_preston_kernel"] = regular == vp.kernel
        section["matches_munn_kernel"] = idempotent == munn.kernel
    return section


def _fiber_section(sg: FiniteSemigroup, report: FiberReport) -> dict[str, Any]:
    return {
        "representation": report.representation,
        "image_size": report.image_size,
        "image_is_ecom": report.image_is_ecom,
        "fibers": [
            {
                "idempotent": f.idempotent.render(sg.labels),
                "fiber": _names(sg, f.fiber),
                "subsemigroup": f.is_subsemigroup,
                "nilpotent": f.is_nilpotent,
                "idempotents": f.idempotent_count,
            }
            for f in report.fibers
        ],
    }


def build_report(sg: FiniteSemigroup, settings: Settings | None = None) -> AnalysisReport:
    settings = settings or Settings()
    reg = sg.regularity
    verdict = sg.is_block_group()
    bg = is_block_group(sg)

    semilattice = vp = munn = fibers = None
    if bg:
        vp = vp_representation(sg)
        munn = munn_representation(sg)
        E = sg.idempotents
        semilattice = {
            "idempotents": _names(sg, E),
            "order": [[sg.label(e), sg.label(f)] for e in E for f in E if e != f and sg.natural_leq(e, f)],
            "meets": {f"{sg.label(e)}^{sg.label(f)}": sg.label(sg.idempotent_meet(e, f))
                      for i, e in enumerate(E) for f in E[i + 1:]},
        }
        fibers = [_fiber_section(sg, malcev_fiber_check(sg, vp)), _fiber_section(sg, munn_fiber_check(sg, munn))]

    logger.debug("assembling report for %r", sg)
    return AnalysisReport(
        semigroup={
            "name": sg.name,
            "order": sg.order,
            "labels": list(sg.labels),
            "identity": None if sg.identity is None else sg.label(sg.identity),
            "zero": None if sg.zero is None else sg.label(sg.zero),
            "has_adjoined_identity": sg.has_adjoined_identity,
        },
        green={kind: _classes(sg, kind) for kind in ("R", "L", "H", "D")},
        regularity={
            "idempotents": _names(sg, sg.idempotents),
            "regular": _names(sg, sg.regular_elements),
            "inverses": {sg.label(x): _names(sg, inv) for x, inv in enumerate(reg.inverses)},
        },
        block_group={
            "verdict": bool(verdict),
            "witness": None if verdict.witness is None else {
                "kind": verdict.witness.kind,
                "e": sg.label(verdict.witness.e),
                "f": sg.label(verdict.witness.f),
            },
        },
        semilattice=semilattice,
        vagner_preston=None if vp is None else representation_section(sg, vp),
        munn=None if munn is None else representation_section(sg, munn),
        oracles=oracle_section(sg, settings, vp, munn),
        varieties={
            "BG": bg,
            "Ecom": is_ecom(sg),
            "EI": is_ei(sg),
            "N": is_nilpotent(sg),
            "inverse": is_inverse(sg),
        },
        fibers=fibers,
    )


def render_structured(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def render_text(report: AnalysisReport) -> str:
    s = report.semigroup
    lines = [f"semigroup {s['name'] or '<unnamed>'}: order {s['order']}",
             f"  elements: {' '.join(s['labels'])}"]
    if s["identity"] is not None:
        lines.append(f"  identity: {s['identity']}" + (" (adjoined)" if s["has_adjoined_identity"] else ""))
    if s["zero"] is not None:
        lines.append(f"  zero: {s['zero']}")

    lines.append("green:")
    for kind, classes in report.green.items():
        lines.append(f"  {kind}-classes: " + " ".join("{" + ",".join(c) + "}" for c in classes))

    r = report.regularity
    lines.append(f"idempotents: {' '.join(r['idempotents'])}")
    lines.append(f"regular: {' '.join(r['regular'])}")

    bg = report.block_group
    lines.append(f"block-group: {_yes(bg['verdict'])}")
    if bg["witness"]:
        w = bg["witness"]
        lines.append(f"  witness: idempotents {w['e']} and {w['f']} share an {w['kind']}-class")

    for title, section in (("vagner-preston φ", report.vagner_preston), ("munn δ", report.munn)):
        if section is None:
            continue
        lines.append(f"{title} ({section['domain_kind']}), injective: {_yes(section['injective'])}")
        for src, rendered in section["maps"].items():
            lines.append(f"  {src}: {rendered}")
        lines.append(f"  kernel: {section['kernel']}")

    if report.oracles is not None:
        o = report.oracles
        if "skipped" in o:
            lines.append(f"congruences: skipped ({o['skipped']})")
        else:
            lines.append(f"congruences: {o['lattice_size']}")
            for key in ("largest_regular_separating", "largest_idempotent_separating"):
                value = o[key]
                shown = value["congruence"] if value["unique"] else "ambiguous: " + " ".join(value["maximal"])
                lines.append(f"  {key.replace('_', ' ')}: {shown}")
            for key in ("matches_vagner_preston_kernel", "matches_munn_kernel"):
                if key in o:
                    lines.append(f"  {key.replace('_', ' ')}: {_yes(o[key])}")

    lines.append("varieties: " + " ".join(f"{k}={_yes(v)}" for k, v in report.varieties.items()))

    for fr in report.fibers or []:
        lines.append(f"{fr['representation']} fibers over image idempotents "
                     f"(image size {fr['image_size']}, Ecom: {_yes(fr['image_is_ecom'])}):")
        for f in fr["fibers"]:
            # φ-fibers are nilpotent, δ-fibers hold one idempotent
            if fr["representation"] == "munn":
                verdict = f"idempotents={f['idempotents']}"
            else:
                verdict = f"nilpotent={_yes(f['nilpotent'])}"
            lines.append(f"  {f['idempotent']}: {{{','.join(f['fiber'])}}} {verdict}")
    return "\n".join(lines)
