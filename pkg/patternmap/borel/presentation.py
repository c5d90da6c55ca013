"""
Fixed-point evaluation and the substitution form of the pullback.

A representative P(z; t) restricts to the fixed point w by z_i ↦ t_{w(i)},
and the pullback ι*_ς acts on the Borel presentation by z_i ↦ z_{ς(i)}
with the t variables untouched. Expanding the pulled-back representative in
the Schubert basis of W′ goes through its localization, so no quotient-ring
normal forms are ever needed.
"""

from __future__ import annotations

import logging
from itertools import combinations

from patternmap.base.config import Mode, Theory
from patternmap.base.errors import RankMismatchError
from patternmap.base.symbolic import LaurentR, PolyS, borel_names, variable_names
from patternmap.borel.representatives import DoublePoly, require_type_a
from patternmap.gkm.classes import CLASS_TYPES, GKMClass, SchubertExpansion
from patternmap.gkm.cohomology import expand_in_schubert_coh
from patternmap.gkm.ktheory import expand_in_schubert_K
from patternmap.pattern.levi import LeviDatum
from patternmap.pattern.pullback import compare_expansions, pullback_schubert
from patternmap.weyl.element import WeylElem
from patternmap.weyl.rootdatum import RootDatum

logger = logging.getLogger("patternmap.borel")


def _check_rank(p: DoublePoly, w: WeylElem) -> None:
    if w.rank != p.n:
        raise RankMismatchError(f"Element of rank {w.rank} against a representative in {p.n} + {p.n} variables")


def eval_borel(p: DoublePoly, w: WeylElem) -> PolyS | LaurentR:
    """i*_w P: substitute z_i ↦ t_{w(i)}."""
    _check_rank(p, w)
    n = p.n
    images = [(1, j) for j in range(n)] + [(1, w(i) - 1) for i in range(1, n + 1)]
    prefix = "t" if p.theory is Theory.COHOMOLOGY else "x"
    return p.poly.relabel(images, variable_names(n, prefix))


def pullback_borel(p: DoublePoly, sigma: WeylElem) -> DoublePoly:
    """ι*_ς P: substitute z_i ↦ z_{ς(i)}."""
    _check_rank(p, sigma)
    n = p.n
    images = [(1, j) for j in range(n)] + [(1, n + sigma(i) - 1) for i in range(1, n + 1)]
    return DoublePoly(p.poly.relabel(images), n)


def localize_representative(datum: RootDatum, p: DoublePoly) -> GKMClass:
    """The GKM class w ↦ P(z_i ↦ t_{w(i)}) over the fixed points of `datum`."""
    cls = CLASS_TYPES[p.theory]
    return cls(datum, {w: eval_borel(p, w) for w in datum.elements()})


def borel_relations(n: int) -> list[PolyS]:
    """e_k(z) − e_k(t), k = 1..n, generators of the kernel of the Borel map."""
    names = borel_names(n)
    t = [PolyS.gen(j, names=names) for j in range(1, n + 1)]
    z = [PolyS.gen(n + j, names=names) for j in range(1, n + 1)]

    def elementary(xs: list[PolyS], k: int) -> PolyS:
        total = PolyS.zero(names=names)
        for subset in combinations(xs, k):
            term = PolyS.one(names=names)
            for x in subset:
                term = term * x
            total = total + term
        return total

    return [elementary(z, k) - elementary(t, k) for k in range(1, n + 1)]


def expand_pullback_via_borel(
    levi: LeviDatum,
    p: DoublePoly,
    sigma: WeylElem,
    against: WeylElem | None = None,
    mode: Mode | str = Mode.CHECKED,
) -> SchubertExpansion:
    """
    Expand ι*_ς P in the Schubert basis of W′ by localizing the substituted
    representative over W′.

    With `against` = u in checked mode the result is compared with
    pullback_schubert for the same u and ς.
    """
    require_type_a(levi.ambient)
    levi.require_rep(sigma)
    pulled = pullback_borel(p, sigma)
    restricted = localize_representative(levi.sub, pulled)
    expand = expand_in_schubert_coh if p.theory is Theory.COHOMOLOGY else expand_in_schubert_K
    expansion = expand(restricted)
    if against is not None and Mode(mode) is Mode.CHECKED:
        other = pullback_schubert(levi, against, sigma, p.theory, Mode.FAST)
        compare_expansions(f"the Borel-presentation pullback of {against} along {sigma}", expansion, other)
        logger.info(f"Borel route for {against} along {sigma} agrees with the localization route")
    return expansion
