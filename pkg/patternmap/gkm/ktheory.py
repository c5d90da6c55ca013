"""
Localized equivariant K-theory of G/B.

The structure sheaves [O_{X^v}] are generated from the top class by the
pointwise Demazure operators

    D_i ψ(w) = (ψ(w) − x^{w.α_i} ψ(w s_i)) / (1 − x^{w.α_i})

starting from [O_{X^{w0}}], which is supported at w0 with value
∏_{β>0} (1 − x^{−β}). With this normalization the lowest-degree part of
[O_{X^v}](w) is the cohomology value 𝔖_v(w).
"""

from __future__ import annotations

import logging
from functools import lru_cache

from patternmap.base.errors import NonIntegralResultError, NotDivisibleError
from patternmap.base.symbolic import LaurentR, variable_names
from patternmap.gkm.classes import GKMCheck, GKMClassK, SchubertExpansion, check_gkm, expand_triangular
from patternmap.weyl.element import WeylElem
from patternmap.weyl.rootdatum import RootDatum

logger = logging.getLogger("patternmap.gkm")


def _names(datum: RootDatum) -> tuple[str, ...]:
    return variable_names(datum.rank, "x")


@lru_cache(maxsize=None)
def top_class_K(datum: RootDatum) -> GKMClassK:
    """[O_{X^{w0}}], the class of the point w0."""
    value = LaurentR.one(names=_names(datum))
    for beta in datum.positive_roots:
        value = value * LaurentR.one_minus(-beta, _names(datum))
    return GKMClassK.supported_at(datum, datum.longest_element, value)


def demazure_pointwise(psi: GKMClassK, i: int) -> GKMClassK:
    datum = psi.datum
    s = datum.simple_reflection(i)
    alpha = datum.simple_root(i)

    def apply(w: WeylElem, value: LaurentR) -> LaurentR:
        weight = w.act(alpha)
        numerator = value - weight.exp(_names(datum)) * psi(w * s)
        return numerator.exact_div_one_minus(weight)

    return psi.map(apply)


@lru_cache(maxsize=None)
def structure_sheaf_class(datum: RootDatum, v: WeylElem) -> GKMClassK:
    """[O_{X^v}] (memoized; treat as immutable)."""
    datum.check(v)
    if v == datum.longest_element:
        return top_class_K(datum)
    descents = set(datum.right_descents(v))
    i = min(label for label in datum.simple_labels if label not in descents)
    return demazure_pointwise(structure_sheaf_class(datum, v * datum.simple_reflections[i]), i)


def k_localize(datum: RootDatum, v: WeylElem) -> GKMClassK:
    return structure_sheaf_class(datum, v)


def check_gkm_K(psi: GKMClassK) -> GKMCheck:
    """ψ(u) − ψ(s_α u) ∈ ⟨1 − x^α⟩ for every positive root α and every u."""
    return check_gkm(psi, lambda diff, alpha: diff.exact_div_one_minus(alpha))


def expand_in_schubert_K(psi: GKMClassK) -> SchubertExpansion:
    return expand_triangular(psi, lambda x: structure_sheaf_class(psi.datum, x))


def structure_constants_K(datum: RootDatum, u: WeylElem, v: WeylElem) -> SchubertExpansion:
    """b^w_{u,v} with [O_{X^u}]·[O_{X^v}] = Σ_w b^w_{u,v} [O_{X^w}]."""
    logger.info(f"Expanding O[{u}]·O[{v}] over {datum.label}")
    product = structure_sheaf_class(datum, u) * structure_sheaf_class(datum, v)
    return expand_in_schubert_K(product)


def opposite_class_K(datum: RootDatum, w: WeylElem) -> GKMClassK:
    """[O_{X_w}]: x ↦ w0.[O_{X^{w0 w}}](w0 x)."""
    w0 = datum.longest_element
    twisted = structure_sheaf_class(datum, w0 * datum.check(w))
    return GKMClassK(datum, {x: twisted(w0 * x).act(w0) for x in datum.elements()})


def ideal_sheaf_class(datum: RootDatum, w: WeylElem) -> GKMClassK:
    """
    [I_w] = Σ_{v ≤ w} (−1)^{ℓ(w)−ℓ(v)} [O_{X_v}], the ideal sheaf of ∂X_w in X_w.

    Dual to the [O_{X^v}] under integrate_K.
    """
    datum.check(w)
    total = GKMClassK.constant(datum, 0)
    for v in datum.elements():
        if datum.bruhat_leq(v, w):
            term = opposite_class_K(datum, v)
            total = total + term if (datum.length(w) - datum.length(v)) % 2 == 0 else total - term
    return total


def integrate_K(psi: GKMClassK) -> LaurentR:
    """
    Σ_w ψ(w) / ∏_{α>0} (1 − x^{w.α}), the pushforward to a point.

    Each term is rewritten over the common denominator ∏_{β>0} (1 − x^β):
    1/∏(1 − x^{w.α}) = (−1)^{ℓ(w)} x^{ρ_w}/∏(1 − x^β) with ρ_w the sum of
    the roots −w.α that are positive.
    """
    datum = psi.datum
    names = _names(datum)
    total = LaurentR.zero(names=names)
    for w, value in psi:
        if not value:
            continue
        shift = [0] * datum.rank
        for alpha in datum.inversions(w):
            for k, c in enumerate(w.act(alpha).coeffs):
                shift[k] -= c
        term = value * LaurentR.monomial(shift, names)
        total = total + term if datum.length(w) % 2 == 0 else total - term
    for beta in datum.positive_roots:
        try:
            total = total.exact_div_one_minus(beta)
        except NotDivisibleError:
            raise NonIntegralResultError(f"Localization sum over {datum.label} is not in R(T)")
    return total


def structure_constants_K_by_pushforward(datum: RootDatum, u: WeylElem, v: WeylElem) -> SchubertExpansion:
    """b^w_{u,v} = χ([O_{X^u}]·[O_{X^v}]·[I_w])."""
    product = structure_sheaf_class(datum, u) * structure_sheaf_class(datum, v)
    coefficients = {}
    for w in datum.elements():
        if datum.bruhat_leq(u, w) and datum.bruhat_leq(v, w):
            coefficients[w] = integrate_K(product * ideal_sheaf_class(datum, w))
    return SchubertExpansion(datum, GKMClassK.theory, coefficients)
