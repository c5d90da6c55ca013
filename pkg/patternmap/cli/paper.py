"""
Reproduce the worked examples against the golden fixture file.

Each registered check walks one fixture section, recomputes every entry
from scratch and records a CheckResult per comparison. The report fails if
any result does; the CLI turns that into exit code 3.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from patternmap.base.config import Mode, Theory
from patternmap.base.errors import CrossCheckFailure, PatternMapError
from patternmap.base.symbolic import PolyS
from patternmap.borel.presentation import expand_pullback_via_borel
from patternmap.borel.representatives import double_schubert
from patternmap.cli.fixtures import eta_text
from patternmap.gkm.classes import SchubertExpansion
from patternmap.gkm.cohomology import schubert_class, structure_constants_coh
from patternmap.pattern.levi import levi_from_cocharacter, parse_eta
from patternmap.pattern.pullback import ROUTES, pullback_schubert, restrict_constants
from patternmap.weyl.rootdatum import RootDatum, datum_for_group

logger = logging.getLogger("patternmap.cli")


@dataclass
class CheckResult:
    check: str
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.ok]

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "passed": len(self.results) - len(self.failures),
            "failed": len(self.failures),
            "results": [asdict(r) for r in self.results],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            status = "ok  " if r.ok else "FAIL"
            line = f"{status} {r.check}: {r.name}"
            if r.detail:
                line += f"  ({r.detail})"
            lines.append(line)
        summary = "all checks passed" if self.ok else f"{len(self.failures)} of {len(self.results)} checks failed"
        lines.append(summary)
        return "\n".join(lines)


def _expected_expansion(datum: RootDatum, terms: dict[str, Any]) -> SchubertExpansion:
    return SchubertExpansion(
        datum,
        Theory.COHOMOLOGY,
        {datum.parse_element(str(k)): PolyS.from_text(str(v), datum.rank) for k, v in terms.items()},
    )


def _compare(check: str, name: str, expected: SchubertExpansion, got: SchubertExpansion) -> CheckResult:
    if expected == got:
        return CheckResult(check, name, True)
    return CheckResult(check, name, False, f"expected {expected.to_text()}, got {got.to_text()}")


def check_localization(entries: list[dict]) -> list[CheckResult]:
    results = []
    for entry in entries:
        datum = datum_for_group(entry["group"])
        cls = schubert_class(datum, datum.parse_element(entry["element"]))
        wrong = []
        for key, text in entry["values"].items():
            w = datum.parse_element(str(key))
            if cls(w) != PolyS.from_text(str(text), datum.rank):
                wrong.append(f"{w}: expected {text}, got {cls(w).to_text()}")
        results.append(CheckResult("localization", entry["name"], not wrong, "; ".join(wrong)))
    return results


def check_lengths(entries: list[dict]) -> list[CheckResult]:
    results = []
    for entry in entries:
        datum = datum_for_group(entry["group"])
        wrong = []
        for key, expected in entry["values"].items():
            got = datum.length(datum.parse_element(str(key)))
            if got != expected:
                wrong.append(f"{key}: expected {expected}, got {got}")
        results.append(CheckResult("lengths", entry["name"], not wrong, "; ".join(wrong)))
    return results


def check_products(entries: list[dict]) -> list[CheckResult]:
    results = []
    for entry in entries:
        datum = datum_for_group(entry["group"])
        u, v = datum.parse_element(entry["u"]), datum.parse_element(entry["v"])
        got = structure_constants_coh(datum, u, v)
        results.append(_compare("products", entry["name"], _expected_expansion(datum, entry["terms"]), got))
    return results


def _route(route: str, levi, u, sigma) -> SchubertExpansion:
    if route == "localization":
        return pullback_schubert(levi, u, sigma, Theory.COHOMOLOGY, Mode.FAST)
    if route == "constants":
        constants = ROUTES[Theory.COHOMOLOGY].constants(levi.ambient, u, sigma)
        return restrict_constants(levi, constants, sigma)
    return expand_pullback_via_borel(levi, double_schubert(levi.ambient, u), sigma, mode=Mode.FAST)


def check_pullbacks(entries: list[dict]) -> list[CheckResult]:
    results = []
    for entry in entries:
        datum = datum_for_group(entry["group"])
        levi = levi_from_cocharacter(datum, parse_eta(eta_text(entry["eta"])))
        u, sigma = datum.parse_element(entry["u"]), datum.parse_element(entry["sigma"])
        expected = _expected_expansion(levi.sub, entry["terms"])
        for route in entry["routes"]:
            try:
                got = _route(route, levi, u, sigma)
            except PatternMapError as e:
                results.append(CheckResult("pullbacks", f"{entry['name']} [{route}]", False, str(e)))
                continue
            results.append(_compare("pullbacks", f"{entry['name']} [{route}]", expected, got))
    return results


def check_cosets(entries: list[dict]) -> list[CheckResult]:
    results = []
    for entry in entries:
        datum = datum_for_group(entry["group"])
        levi = levi_from_cocharacter(datum, parse_eta(eta_text(entry["eta"])))
        wrong = []
        if len(levi.cosets) != entry["count"]:
            wrong.append(f"expected {entry['count']} cosets, got {len(levi.cosets)}")
        if "levi" in entry and levi.label != entry["levi"]:
            wrong.append(f"expected Levi {entry['levi']}, got {levi.label}")
        if "reps" in entry:
            expected = {datum.parse_element(str(r)) for r in entry["reps"]}
            if expected != set(levi.reps):
                wrong.append(f"expected reps {sorted(map(str, expected))}, got {[str(r) for r in levi.reps]}")
        by_subset = {tuple(sorted(abs(i) for i in rep.negatives)): rep for rep in levi.reps}
        for subset, rep_text in (entry.get("subsets") or {}).items():
            key = tuple(sorted(int(p) for p in str(subset).split(",")))
            rep = datum.parse_element(str(rep_text))
            if by_subset.get(key) != rep:
                wrong.append(f"subset {{{subset}}}: expected {rep}, got {by_subset.get(key)}")
        results.append(CheckResult("cosets", entry["name"], not wrong, "; ".join(wrong)))
    return results


CHECKS: dict[str, Callable[[list[dict]], list[CheckResult]]] = {
    "lengths": check_lengths,
    "cosets": check_cosets,
    "localization": check_localization,
    "products": check_products,
    "pullbacks": check_pullbacks,
}


def reproduce(fixtures: dict[str, Any], only: list[str] | None = None) -> Report:
    """Run the registered checks (or the `only` subset) against a validated fixture mapping."""
    report = Report()
    for section, check in CHECKS.items():
        if only and section not in only:
            continue
        logger.info(f"Reproducing {section}")
        try:
            report.results.extend(check(fixtures.get(section, [])))
        except CrossCheckFailure as e:
            report.results.append(CheckResult(section, "cross-check", False, str(e)))
    return report
