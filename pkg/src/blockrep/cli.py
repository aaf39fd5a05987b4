#! /usr/bin/env python3

import argparse
import logging
import sys
from itertools import chain as chained
from pathlib import Path
from typing import Sequence

from .automata import EXAMPLE_DFAS, syntactic_monoid
from .certify import Certification, certify
from .config import Settings
from .formats import parse_dfa_file, parse_maps_file, parse_table_file, render_table_file
from .generate import all_tables, corpus, generate_from_transformations
from .representations import munn_representation, vp_representation
from .report import build_report, oracle_section, render_structured, render_text, representation_section
from .semigroup import FiniteSemigroup, InternalInconsistency, SemigroupError, ValidationError
from .terms import parse_pseudoidentities, satisfies_all


logger = logging.getLogger(__name__)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ValidationError(f"cannot read {path}: {e.strerror or e}") from None


def load_input(args: argparse.Namespace) -> FiniteSemigroup:
    if getattr(args, "example", None):
        members = corpus()
        if args.example not in members:
            raise ValidationError(f"no example named {args.example!r}; see `blockrep list`")
        return members[args.example]
    if getattr(args, "table", None):
        return parse_table_file(_read(args.table), name=Path(args.table).stem)
    raise ValidationError("an input is required: --table FILE or --example NAME")


def emit(args: argparse.Namespace, data: dict, text: str) -> None:
    print(render_structured(data) if args.format == "structured" else text)


# ------------- commands -------------
def cmd_analyze(args, settings: Settings) -> int:
    report = build_report(load_input(args), settings)
    emit(args, report.to_dict(), render_text(report))
    return EXIT_OK


def cmd_check_bg(args, settings: Settings) -> int:
    sg = load_input(args)
    verdict = sg.is_block_group()
    witness = None
    text = f"{sg.name}: block-group: {'yes' if verdict else 'no'}"
    if verdict.witness is not None:
        w = verdict.witness
        witness = {"kind": w.kind, "e": sg.label(w.e), "f": sg.label(w.f)}
        text += f" (idempotents {sg.label(w.e)} and {sg.label(w.f)} are {w.kind}-related)"
    emit(args, {"semigroup": sg.name, "block_group": bool(verdict), "witness": witness}, text)
    return EXIT_OK


def _cmd_representation(args, build, title: str) -> int:
    sg = load_input(args)
    section = representation_section(sg, build(sg))
    lines = [f"{title} of {sg.name} ({section['domain_kind']})"]
    lines += [f"  {src}: {rendered}" for src, rendered in section["maps"].items()]
    lines.append(f"  kernel: {section['kernel']}")
    lines.append(f"  injective: {'yes' if section['injective'] else 'no'}")
    emit(args, {"semigroup": sg.name, "representation": section}, "\n".join(lines))
    return EXIT_OK


def cmd_vp(args, settings: Settings) -> int:
    return _cmd_representation(args, vp_representation, "φ")


def cmd_munn(args, settings: Settings) -> int:
    return _cmd_representation(args, munn_representation, "δ")


def cmd_congruences(args, settings: Settings) -> int:
    sg = load_input(args)
    vp = munn = None
    if sg.is_block_group():
        vp, munn = vp_representation(sg), munn_representation(sg)
    section = oracle_section(sg, settings, vp, munn)
    if "skipped" in section:
        text = f"skipped: {section['skipped']}"
    else:
        lines = [f"{section['lattice_size']} congruences on {sg.name}:"]
        lines += [f"  {c}" for c in section["congruences"]]
        for key in ("largest_regular_separating", "largest_idempotent_separating"):
            value = section[key]
            shown = value["congruence"] if value["unique"] else "ambiguous: " + " ".join(value["maximal"])
            lines.append(f"{key.replace('_', ' ')}: {shown}")
        text = "\n".join(lines)
    emit(args, {"semigroup": sg.name, "oracles": section}, text)
    return EXIT_OK


def cmd_variety(args, settings: Settings) -> int:
    sg = load_input(args)
    identities = parse_pseudoidentities(args.identity)
    result = satisfies_all(sg, identities, variable_cap=settings.variable_cap)
    data = {
        "semigroup": sg.name,
        "identity": args.identity,
        "holds": result.holds,
        "counterexample": None,
    }
    text = f"{sg.name} satisfies {args.identity}: {'yes' if result else 'no'}"
    if not result:
        data["counterexample"] = {
            "equality": str(result.identity),
            "assignment": {k: sg.label(v) for k, v in result.counterexample.items()},
            "values": [sg.label(v) for v in result.values],
        }
        shown = ", ".join(f"{k}={v}" for k, v in data["counterexample"]["assignment"].items())
        text += f"\n  {result.identity} fails at {shown}"
    emit(args, data, text)
    return EXIT_OK


def _print_semigroup(args, sg: FiniteSemigroup, settings: Settings) -> int:
    if args.format == "structured" or args.report:
        report = build_report(sg, settings)
        emit(args, report.to_dict(), render_text(report))
    else:
        print(render_table_file(sg), end="")
    return EXIT_OK


def cmd_syn(args, settings: Settings) -> int:
    if args.dfa in EXAMPLE_DFAS and not Path(args.dfa).exists():
        dfa = EXAMPLE_DFAS[args.dfa]
    else:
        dfa = parse_dfa_file(_read(args.dfa))
    sg = syntactic_monoid(dfa, closure_cap=settings.closure_cap)
    sg = FiniteSemigroup(sg.table, labels=sg.labels, name=f"syn:{Path(args.dfa).stem}")
    return _print_semigroup(args, sg, settings)


def cmd_gen(args, settings: Settings) -> int:
    n, maps = parse_maps_file(_read(args.maps))
    sg = generate_from_transformations(
        n, maps, names=[f"g{i}" for i in range(len(maps))],
        closure_cap=settings.closure_cap, name=Path(args.maps).stem,
    )
    return _print_semigroup(args, sg, settings)


def _certification_dict(c: Certification) -> dict:
    return {
        "name": c.name,
        "order": c.order,
        "block_group": c.block_group,
        "checks": list(c.checks),
        "violations": [{"check": v.check, "detail": v.detail} for v in c.violations],
        "ok": c.ok,
    }


def cmd_certify(args, settings: Settings) -> int:
    if args.all_orders is not None:
        if args.all_orders < 1:
            raise ValidationError("--all-orders needs a positive order")
        targets = chained.from_iterable(all_tables(n) for n in range(1, args.all_orders + 1))
    elif args.corpus:
        targets = iter(corpus().values())
    else:
        targets = iter([load_input(args)])

    results = [certify(sg, settings) for sg in targets]
    failed = [c for c in results if not c.ok]
    lines = []
    for c in failed:
        lines.append(f"FAIL {c.name} (order {c.order})")
        lines += [f"  {v}" for v in c.violations]
    bg = sum(c.block_group for c in results)
    lines.append(f"certified {len(results) - len(failed)}/{len(results)} semigroups ({bg} block-groups)")
    data = {
        "certified": len(results) - len(failed),
        "total": len(results),
        "block_groups": bg,
        "results": [_certification_dict(c) for c in results],
    }
    emit(args, data, "\n".join(lines))
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_list(args, settings: Settings) -> int:
    members = corpus()
    data = {name: {"order": sg.order, "block_group": bool(sg.is_block_group())} for name, sg in members.items()}
    text = "\n".join(f"{name:<18} order {d['order']:<3} {'BG' if d['block_group'] else ''}".rstrip()
                     for name, d in data.items())
    emit(args, data, text)
    return EXIT_OK


# ------------- argument parsing -------------
def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text",
                        help="Human readable text or a JSON document")
    common.add_argument("--max-order", type=int, default=None,
                        help="Largest order for congruence lattice enumeration")
    common.add_argument("--closure-cap", type=int, default=None,
                        help="Largest transformation semigroup to generate")
    common.add_argument("--variable-cap", type=int, default=None,
                        help="Most variables allowed in a user pseudoidentity")
    common.add_argument("--seed", type=int, default=None, help="Reserved for randomized spot checks")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log progress to stderr (-vv for debug)")
    return common


def _input_flags(parser: argparse.ArgumentParser, *, required: bool = True) -> argparse._MutuallyExclusiveGroup:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("-t", "--table", help="Multiplication table file")
    group.add_argument("-e", "--example", help="Named example semigroup (see `list`)")
    return group


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="blockrep", description="Finite semigroup representations and checks")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_text in (
        ("analyze", cmd_analyze, "Full analysis report"),
        ("check-bg", cmd_check_bg, "Block-group verdict with a witness when it fails"),
        ("vp", cmd_vp, "Print the extended Vagner-Preston representation"),
        ("munn", cmd_munn, "Print the Munn representation"),
        ("congruences", cmd_congruences, "Congruence lattice and separating oracles"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        _input_flags(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("variety", parents=[common], help="Check a pseudoidentity, e.g. \"x^w y = y x^w\"")
    _input_flags(p)
    p.add_argument("-i", "--identity", required=True)
    p.set_defaults(func=cmd_variety)

    p = sub.add_parser("syn", parents=[common], help="Syntactic monoid of a DFA")
    p.add_argument("-d", "--dfa", required=True, help="DFA file, or the name of a built-in example")
    p.add_argument("-r", "--report", action="store_true", help="Analyze the monoid instead of printing its table")
    p.set_defaults(func=cmd_syn)

    p = sub.add_parser("gen", parents=[common], help="Semigroup generated by transformations")
    p.add_argument("-m", "--maps", required=True, help="Maps file")
    p.add_argument("-r", "--report", action="store_true", help="Analyze the semigroup instead of printing its table")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("certify", parents=[common], help="Exhaustively verify the representation theory")
    group = _input_flags(p)
    group.add_argument("-a", "--all-orders", type=int, metavar="N", help="Every associative table of order <= N")
    group.add_argument("-c", "--corpus", action="store_true", help="Every named example")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("list", parents=[common], help="Names of the example semigroups")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level={0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    settings = Settings.from_args(args)
    logger.debug("%s with %s", args.command, settings)
    try:
        return args.func(args, settings)
    except InternalInconsistency as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except SemigroupError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
