"""
Loading and validation of the golden-value fixture file.

The bundled file is fixtures/paper.yml; a replacement can be passed with
--fixtures or the `fixtures` setting. validate_fixtures() only checks the
shape and that every window, eta and polynomial parses against its group;
comparing the values with fresh computations is the job of cli.paper.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

import yaml

from patternmap.base.errors import InputError
from patternmap.base.symbolic import PolyS
from patternmap.pattern.levi import parse_eta
from patternmap.weyl.rootdatum import datum_for_group

DEFAULT_FIXTURES = Path(__file__).parent / "fixtures" / "paper.yml"

SECTIONS = ("localization", "lengths", "products", "pullbacks", "cosets")

REQUIRED_FIELDS = {
    "localization": ["name", "group", "element", "values"],
    "lengths": ["name", "group", "values"],
    "products": ["name", "group", "u", "v", "terms"],
    "pullbacks": ["name", "group", "eta", "u", "sigma", "routes", "terms"],
    "cosets": ["name", "group", "eta", "count"],
}

ROUTE_NAMES = ("localization", "constants", "borel")


def load_fixtures(path: str | Path | None = None) -> dict[str, Any]:
    """Read a fixture file; raises FileNotFoundError or InputError."""
    path = Path(path) if path else DEFAULT_FIXTURES
    if not path.exists():
        raise FileNotFoundError(f"Fixtures not found: {path}")
    with open(path) as f:
        try:
            data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise InputError(f"Invalid YAML in {path}: {e}")
    if not isinstance(data, dict):
        raise InputError(f"Fixture file {path} must be a YAML mapping")
    return data


def eta_text(eta: Any) -> str:
    if isinstance(eta, (list, tuple)):
        return ",".join(str(c) for c in eta)
    return str(eta)


def _check_entry(section: str, entry: dict[str, Any]) -> list[str]:
    errors = []
    where = f"{section}/{entry.get('name', '?')}"

    try:
        datum = datum_for_group(str(entry["group"]))
    except InputError as e:
        return [f"{where}: {e}"]

    def element(text: Any, field: str) -> None:
        try:
            datum.parse_element(str(text))
        except (InputError, ValueError) as e:
            errors.append(f"{where}: {field} {text!r}: {e}")

    def poly(text: Any, field: str) -> None:
        try:
            PolyS.from_text(str(text), datum.rank)
        except (InputError, ValueError) as e:
            errors.append(f"{where}: {field} {text!r}: {e}")

    if "eta" in entry:
        try:
            eta = parse_eta(eta_text(entry["eta"]))
            if len(eta) != datum.rank:
                errors.append(f"{where}: eta has {len(eta)} entries, {datum.label} needs {datum.rank}")
        except InputError as e:
            errors.append(f"{where}: {e}")

    for field in ("element", "u", "v", "sigma"):
        if field in entry:
            element(entry[field], field)

    if section == "localization":
        for key, value in (entry["values"] or {}).items():
            element(key, "fixed point")
            poly(value, f"value at {key}")
    elif section == "lengths":
        for key, value in (entry["values"] or {}).items():
            element(key, "element")
            if not isinstance(value, int) or value < 0:
                errors.append(f"{where}: length of {key} must be a non-negative integer, got {value!r}")
    elif section in ("products", "pullbacks"):
        terms = entry["terms"]
        if not isinstance(terms, dict):
            errors.append(f"{where}: terms must be a mapping")
        else:
            for key, value in terms.items():
                element(key, "term")
                poly(value, f"coefficient of {key}")
        if section == "pullbacks":
            routes = entry["routes"]
            if not isinstance(routes, list) or not routes:
                errors.append(f"{where}: routes must be a non-empty list")
            else:
                for route in routes:
                    if route not in ROUTE_NAMES:
                        errors.append(f"{where}: unknown route {route!r}; expected one of {list(ROUTE_NAMES)}")
    elif section == "cosets":
        if not isinstance(entry["count"], int) or entry["count"] < 1:
            errors.append(f"{where}: count must be a positive integer")
        for rep in entry.get("reps", []) or []:
            element(rep, "rep")
        for subset, rep in (entry.get("subsets") or {}).items():
            element(rep, f"rep for subset {subset}")
            try:
                [int(p) for p in str(subset).split(",")]
            except ValueError:
                errors.append(f"{where}: subset {subset!r} must list positions separated by commas")

    return errors


def validate_fixtures(data: dict[str, Any]) -> list[str]:
    """Validate a fixture mapping, returning a list of errors (empty if valid)."""
    errors = []

    version = data.get("version")
    if not isinstance(version, int) or version < 1:
        errors.append(f"version must be a positive integer, got {version!r}")

    for section in SECTIONS:
        entries = data.get(section)
        if entries is None:
            errors.append(f"Missing required section: {section}")
            continue
        if not isinstance(entries, list):
            errors.append(f"Section {section} must be a list")
            continue
        for idx, entry in enumerate(entries):
            if not isinstance(entry, dict):
                errors.append(f"{section}[{idx}] must be a mapping")
                continue
            missing = [f for f in REQUIRED_FIELDS[section] if f not in entry]
            if missing:
                errors.append(f"{section}[{idx}]: missing required fields {missing}")
                continue
            errors.extend(_check_entry(section, entry))

    return errors
