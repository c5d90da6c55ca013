"""
Pullback along the section ι_ς: F′ → F of the fixed locus component indexed by ς.

Two independent routes compute ι*_ς of a Schubert class:
  localization  restrict the localized class to the coset, w ↦ φ(wς), and
                expand in the Schubert basis of W′
  constants     expand 𝔖_u·𝔖_ς (or [O^u]·[O^ς]) in W and keep the terms
                indexed by wς, w ∈ W′
Checked mode runs both and raises CrossCheckFailure when they disagree;
fast mode runs the localization route only.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

from patternmap.base.config import Mode, Theory
from patternmap.base.errors import CrossCheckFailure
from patternmap.base.symbolic import LaurentR
from patternmap.gkm.classes import GKMClass, SchubertExpansion
from patternmap.gkm.cohomology import expand_in_schubert_coh, schubert_class, structure_constants_coh
from patternmap.gkm.ktheory import (
    expand_in_schubert_K,
    ideal_sheaf_class,
    integrate_K,
    structure_constants_K,
    structure_sheaf_class,
)
from patternmap.pattern.levi import LeviDatum, check_same_ambient
from patternmap.weyl.element import WeylElem

logger = logging.getLogger("patternmap.pattern")


@dataclass(frozen=True)
class _Routes:
    localize: Callable
    expand: Callable
    constants: Callable


ROUTES: dict[Theory, _Routes] = {
    Theory.COHOMOLOGY: _Routes(schubert_class, expand_in_schubert_coh, structure_constants_coh),
    Theory.K_THEORY: _Routes(structure_sheaf_class, expand_in_schubert_K, structure_constants_K),
}


def pullback_localized(levi: LeviDatum, phi: GKMClass, sigma: WeylElem) -> GKMClass:
    """ι*_ς φ: the class w ↦ φ(wς) over W′."""
    check_same_ambient(levi, phi.datum)
    levi.require_rep(sigma)
    return type(phi)(levi.sub, {w: phi(w * sigma) for w in levi.sub.elements()})


def restrict_constants(levi: LeviDatum, expansion: SchubertExpansion, sigma: WeylElem) -> SchubertExpansion:
    """Keep the terms of an expansion over W indexed by wς, re-keyed by w ∈ W′."""
    levi.require_rep(sigma)
    sigma_inv = sigma.inverse()
    kept = {x * sigma_inv: c for x, c in expansion.items() if levi.coset_of(x).rep == sigma}
    return SchubertExpansion(levi.sub, expansion.theory, kept)


def compare_expansions(what: str, first: SchubertExpansion, second: SchubertExpansion) -> None:
    if first == second:
        return
    details = {"first": first.to_dict()["terms"], "second": second.to_dict()["terms"]}
    logger.warning(f"Cross-check failed for {what}: {details}")
    raise CrossCheckFailure(f"Independent computations of {what} disagree", details=details)


def pullback_schubert(
    levi: LeviDatum,
    u: WeylElem,
    sigma: WeylElem,
    theory: Theory | str = Theory.COHOMOLOGY,
    mode: Mode | str = Mode.CHECKED,
) -> SchubertExpansion:
    theory, mode = Theory(theory), Mode(mode)
    routes = ROUTES[theory]
    levi.ambient.check(u)
    restricted = pullback_localized(levi, routes.localize(levi.ambient, u), sigma)
    by_localization = routes.expand(restricted)
    if mode is Mode.FAST:
        return by_localization
    by_constants = restrict_constants(levi, routes.constants(levi.ambient, u, sigma), sigma)
    compare_expansions(f"the {theory.value} pullback of {u} along {sigma}", by_localization, by_constants)
    logger.info(f"Pullback of {u} along {sigma} ({theory.value}): {len(by_localization)} terms, routes agree")
    return by_localization


def pullback_schubert_coh(levi: LeviDatum, u: WeylElem, sigma: WeylElem, mode: Mode | str = Mode.CHECKED) -> SchubertExpansion:
    """ι*_ς 𝔖_u = Σ_{w∈W′} c^{wς}_{u,ς} 𝔖′_w."""
    return pullback_schubert(levi, u, sigma, Theory.COHOMOLOGY, mode)


def pullback_schubert_K(levi: LeviDatum, u: WeylElem, sigma: WeylElem, mode: Mode | str = Mode.CHECKED) -> SchubertExpansion:
    """ι*_ς [O_{X^u}] = Σ_{w∈W′} b^{wς}_{u,ς} [O_{X′^w}]."""
    return pullback_schubert(levi, u, sigma, Theory.K_THEORY, mode)


def pushforward_pairing(levi: LeviDatum, u: WeylElem, sigma: WeylElem, w: WeylElem) -> tuple[LaurentR, LaurentR]:
    """
    Both sides of ⟨ι*_ς [O^u], [I′_w]⟩_{F′} = ⟨[O^u], [O^ς]·[I_{wς}]⟩_F.
    """
    ambient, sub = levi.ambient, levi.sub
    sub.check(w)
    pulled = pullback_localized(levi, structure_sheaf_class(ambient, u), sigma)
    left = integrate_K(pulled * ideal_sheaf_class(sub, w))
    right = integrate_K(
        structure_sheaf_class(ambient, u) * structure_sheaf_class(ambient, sigma) * ideal_sheaf_class(ambient, w * sigma)
    )
    return left, right
