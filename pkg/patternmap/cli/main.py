"""
patternmap command line.

    patternmap localize C2 -1,2 --theory K --check
    patternmap mult A3 2143 3412
    patternmap pattern A3 --eta 1,1,-1,-1 --u 2143 --sigma 3412
    patternmap flatten C4 --eta 1,1,1,1 --x 3,-1,4,2
    patternmap cosets A3 --eta 1,1,-1,-1
    patternmap skeleton A3 --eta 1,1,-1,-1 --format dot
    patternmap reproduce-paper

Exit codes: 0 success, 2 bad input, 3 failed cross-check or fixture mismatch.
Results go to stdout (or --output), logs to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from patternmap.base.config import OUTPUT_FORMATS, Mode, Settings, Theory
from patternmap.base.errors import CrossCheckFailure, InputError, PatternMapError
from patternmap.base.logs import setup_logging
from patternmap.borel.presentation import expand_pullback_via_borel
from patternmap.borel.representatives import representative
from patternmap.cli.fixtures import load_fixtures, validate_fixtures
from patternmap.cli.paper import CHECKS, reproduce
from patternmap.gkm.cohomology import check_gkm_coh, schubert_class, structure_constants_coh
from patternmap.gkm.ktheory import check_gkm_K, structure_constants_K, structure_sheaf_class
from patternmap.pattern.levi import levi_from_cocharacter, parse_eta
from patternmap.pattern.pullback import pullback_schubert
from patternmap.pattern.skeleton import skeleton_export
from patternmap.weyl.rootdatum import datum_for_group

logger = logging.getLogger("patternmap.cli")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MISMATCH = 3

# A signed window such as "-2,-1,3,4" or an eta such as "-1,0,1"
_LEADING_MINUS = re.compile(r"^-\d+\s*(,\s*-?\d+\s*)+$")


class Output:
    """What a command produced, in every format it supports."""

    def __init__(self, text: str, data: dict[str, Any], dot: str | None = None, exit_code: int = EXIT_OK):
        self.text = text
        self.data = data
        self.dot = dot
        self.exit_code = exit_code

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.data, indent=2, ensure_ascii=False)
        if fmt == "dot":
            if self.dot is None:
                raise InputError("--format dot is only available for the skeleton command")
            return self.dot
        return self.text


def protect_negative_args(argv: Sequence[str]) -> list[str]:
    """
    argparse reads any token starting with "-" as a flag, so a signed window
    like "-2,-1,3,4" gets a leading space; window and eta parsers strip it.
    """
    return [f" {tok}" if _LEADING_MINUS.match(tok) else tok for tok in argv]


def cmd_localize(args: argparse.Namespace, settings: Settings) -> Output:
    datum = datum_for_group(args.group)
    v = datum.parse_element(args.element)
    if settings.theory is Theory.COHOMOLOGY:
        cls, check = schubert_class(datum, v), check_gkm_coh
    else:
        cls, check = structure_sheaf_class(datum, v), check_gkm_K
    data = cls.to_dict()
    text = cls.to_text()
    exit_code = EXIT_OK
    if args.check:
        result = check(cls)
        data["gkm"] = bool(result)
        text += f"\n# {result}"
        if not result:
            logger.warning(f"Class of {v} in {datum.label} fails the GKM relations: {result}")
            exit_code = EXIT_MISMATCH
    return Output(text, data, exit_code=exit_code)


def cmd_mult(args: argparse.Namespace, settings: Settings) -> Output:
    datum = datum_for_group(args.group)
    u, v = datum.parse_element(args.u), datum.parse_element(args.v)
    constants = structure_constants_coh if settings.theory is Theory.COHOMOLOGY else structure_constants_K
    expansion = constants(datum, u, v)
    return Output(expansion.to_text(), expansion.to_dict())


def cmd_pattern(args: argparse.Namespace, settings: Settings) -> Output:
    datum = datum_for_group(args.group)
    levi = levi_from_cocharacter(datum, parse_eta(args.eta))
    u, sigma = datum.parse_element(args.u), datum.parse_element(args.sigma)
    levi.require_rep(sigma)
    expansion = pullback_schubert(levi, u, sigma, settings.theory, settings.mode)
    routes = ["localization"]
    if settings.mode is Mode.CHECKED:
        routes.append("constants")
        if datum.family == "A":
            expand_pullback_via_borel(levi, representative(datum, u, settings.theory), sigma, against=u, mode=Mode.CHECKED)
            routes.append("borel")
    data = {**expansion.to_dict(), "ambient": datum.label, "eta": list(levi.eta), "u": str(u), "sigma": str(sigma)}
    data["routes"] = routes
    header = f"# pullback of {u} along {sigma}, {datum.label} -> {levi.label} (routes: {', '.join(routes)})"
    return Output(f"{header}\n{expansion.to_text()}", data)


def cmd_flatten(args: argparse.Namespace, settings: Settings) -> Output:
    datum = datum_for_group(args.group)
    levi = levi_from_cocharacter(datum, parse_eta(args.eta))
    result = levi.flatten(datum.parse_element(args.x))
    local = " x ".join(f"{factor}:{w}" for factor, w in zip(result.factors, result.sub_element)) or "trivial"
    text = f"{result.element} = {result.ambient_factor} * {result.rep}\nlocal: {local}"
    return Output(text, result.to_dict())


def cmd_cosets(args: argparse.Namespace, settings: Settings) -> Output:
    datum = datum_for_group(args.group)
    levi = levi_from_cocharacter(datum, parse_eta(args.eta))
    lines = [f"# {levi.label} in {datum.label}: {len(levi.cosets)} cosets"]
    for coset in levi.cosets:
        lines.append(f"{coset.rep}\tlength {datum.length(coset.rep)}\tsize {len(coset.members)}")
    return Output("\n".join(lines), levi.to_dict())


def cmd_skeleton(args: argparse.Namespace, settings: Settings) -> Output:
    datum = datum_for_group(args.group)
    levi = levi_from_cocharacter(datum, parse_eta(args.eta)) if args.eta else None
    skeleton = skeleton_export(datum, levi)
    fixed = sum(1 for e in skeleton.edges if e.fixed)
    text = f"{datum.label}: {len(skeleton.vertices)} vertices, {len(skeleton.edges)} edges"
    if levi is not None:
        text += f", {fixed} fixed by eta, {len(skeleton.components)} components"
    return Output(text, skeleton.to_dict(), dot=skeleton.to_dot())


def cmd_reproduce_paper(args: argparse.Namespace, settings: Settings) -> Output:
    fixtures = load_fixtures(settings.fixtures)
    errors = validate_fixtures(fixtures)
    if errors:
        for error in errors:
            logger.error(f"Fixture: {error}")
        text = "INVALID fixtures:\n" + "\n".join(f"  - {e}" for e in errors)
        return Output(text, {"ok": False, "errors": errors}, exit_code=EXIT_MISMATCH)
    report = reproduce(fixtures, args.only)
    return Output(report.to_text(), report.to_dict(), exit_code=EXIT_OK if report.ok else EXIT_MISMATCH)


COMMANDS: dict[str, Callable[[argparse.Namespace, Settings], Output]] = {
    "localize": cmd_localize,
    "mult": cmd_mult,
    "pattern": cmd_pattern,
    "flatten": cmd_flatten,
    "cosets": cmd_cosets,
    "skeleton": cmd_skeleton,
    "reproduce-paper": cmd_reproduce_paper,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML config file (patternmap: section)")
    common.add_argument("--theory", choices=[t.value for t in Theory], help="coh (default) or K")
    common.add_argument("--mode", choices=[m.value for m in Mode], help="checked (default) or fast")
    common.add_argument("--format", choices=OUTPUT_FORMATS, help="Output format")
    common.add_argument("--output", help="Write the result to this file instead of stdout")
    common.add_argument("--log-level", help="DEBUG, INFO, WARNING (default), ERROR")
    common.add_argument("--log-file", help="Also write logs to this file")

    parser = argparse.ArgumentParser(
        prog="patternmap",
        description="Equivariant Schubert calculus and pattern-map pullbacks on G/B",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("localize", parents=[common], help="Localized Schubert class of one element")
    p.add_argument("group", help="Group, e.g. A3 or C4")
    p.add_argument("element", help="Window, e.g. 2143 or 3,-1,4,2")
    p.add_argument("--check", action="store_true", help="Verify the GKM relations")

    p = sub.add_parser("mult", parents=[common], help="Structure constants of a product of two classes")
    p.add_argument("group")
    p.add_argument("u")
    p.add_argument("v")

    p = sub.add_parser("pattern", parents=[common], help="Pullback of a Schubert class to a fixed-locus component")
    p.add_argument("group")
    p.add_argument("--eta", required=True, help="Cocharacter, e.g. 1,1,-1,-1")
    p.add_argument("--u", required=True, help="Class being pulled back")
    p.add_argument("--sigma", required=True, help="Minimal coset representative")

    p = sub.add_parser("flatten", parents=[common], help="Factor x = w·ς with w in the Levi Weyl group")
    p.add_argument("group")
    p.add_argument("--eta", required=True)
    p.add_argument("--x", required=True, help="Element to flatten")

    p = sub.add_parser("cosets", parents=[common], help="Minimal coset representatives for a cocharacter")
    p.add_argument("group")
    p.add_argument("--eta", required=True)

    p = sub.add_parser("skeleton", parents=[common], help="Export the one-skeleton, optionally grouped by coset")
    p.add_argument("group")
    p.add_argument("--eta", help="Highlight the fixed locus of this cocharacter")

    p = sub.add_parser("reproduce-paper", parents=[common], help="Recompute the worked examples and compare")
    p.add_argument("--fixtures", help="Fixture file (defaults to the bundled one)")
    p.add_argument("--only", nargs="+", choices=list(CHECKS), help="Run only these checks")

    return parser


def resolve_settings(args: argparse.Namespace) -> Settings:
    settings = Settings.from_config(args.config) if args.config else Settings.from_dict()
    return settings.override(
        theory=args.theory,
        mode=args.mode,
        format=args.format,
        log_level=args.log_level,
        log_file=args.log_file,
        fixtures=getattr(args, "fixtures", None),
    )


def emit(rendered: str, output: str | None) -> None:
    if output:
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(rendered + "\n")
        logger.info(f"Wrote {path}")
    else:
        print(rendered)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(protect_negative_args(sys.argv[1:] if argv is None else argv))

    try:
        settings = resolve_settings(args)
        setup_logging(settings.log_level, settings.log_file)
    except (InputError, ValueError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT

    try:
        result = COMMANDS[args.command](args, settings)
        emit(result.render(settings.format), args.output)
        return result.exit_code
    except CrossCheckFailure as e:
        print(f"cross-check failed: {e}", file=sys.stderr)
        if e.details:
            print(json.dumps(e.details, indent=2, ensure_ascii=False), file=sys.stderr)
        return EXIT_MISMATCH
    except (InputError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except PatternMapError as e:
        if isinstance(e, ValueError):
            print(f"error: {e}", file=sys.stderr)
            return EXIT_INPUT
        logger.exception(f"Internal consistency failure: {e}")
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
