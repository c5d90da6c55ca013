"""
Localized equivariant cohomology of G/B.

Schubert classes are computed with Billey's subword rule, evaluated along
the canonical reduced word of each fixed point. Peeling the first letter s
off the word gives the recursion

    𝔖_v(w) = s.𝔖_v(sw) + [sv < v] · α_s · s.𝔖_{sv}(sw)

which is memoized per (datum, v, w) and pruned to 0 outside {w ≥ v}.

Integration to a point uses the tangent weights w.(−α), α > 0, at each
fixed point, normalized so that 𝔖_{w0} integrates to 1.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Sequence

from patternmap.base.errors import InputError, NonPolynomialResultError, NotDivisibleError
from patternmap.base.symbolic import PolyS, variable_names
from patternmap.gkm.classes import GKMCheck, GKMClassS, SchubertExpansion, check_gkm, expand_triangular
from patternmap.weyl.element import WeylElem
from patternmap.weyl.rootdatum import RootDatum

logger = logging.getLogger("patternmap.gkm")


@lru_cache(maxsize=None)
def _billey_value(datum: RootDatum, v: WeylElem, w: WeylElem) -> PolyS:
    names = variable_names(datum.rank)
    if not datum.bruhat_leq(v, w):
        return PolyS.zero(names=names)
    if w.is_identity:
        return PolyS.one(names=names)
    i = min(datum.left_descents(w))
    s = datum.simple_reflections[i]
    sw = s * w
    value = _billey_value(datum, v, sw).act(s)
    sv = s * v
    if datum.length(sv) < datum.length(v):
        value = value + datum.simple_root(i).to_poly(names) * _billey_value(datum, sv, sw).act(s)
    return value


@lru_cache(maxsize=None)
def schubert_class(datum: RootDatum, v: WeylElem) -> GKMClassS:
    """The localized Schubert class 𝔖_v (memoized; treat as immutable)."""
    datum.check(v)
    return GKMClassS(datum, {w: _billey_value(datum, v, w) for w in datum.elements()})


def billey_localize(datum: RootDatum, v: WeylElem) -> GKMClassS:
    return schubert_class(datum, v)


def billey_subword_value(datum: RootDatum, v: WeylElem, w: WeylElem, word: Sequence[int]) -> PolyS:
    """
    𝔖_v(w) summed over reduced subwords of v inside the given reduced word of w.

    Any reduced word gives the same answer; this is the direct form of the
    rule, used to check independence from the canonical word.
    """
    word = tuple(word)
    if len(word) != datum.length(w) or datum.from_word(word) != w:
        raise InputError(f"{word} is not a reduced word for {w}")
    names = variable_names(datum.rank)
    zero = PolyS.zero(names=names)
    states: dict[WeylElem, PolyS] = {datum.identity: PolyS.one(names=names)}
    prefix = datum.identity
    for i in word:
        beta = prefix.act(datum.simple_root(i)).to_poly(names)
        s = datum.simple_reflections[i]
        following = dict(states)
        for u, value in states.items():
            us = u * s
            if datum.length(us) == datum.length(u) + 1 and datum.bruhat_leq(us, v):
                following[us] = following.get(us, zero) + value * beta
        states = following
        prefix = prefix * s
    return states.get(v, zero)


def check_gkm_coh(phi: GKMClassS) -> GKMCheck:
    """φ(u) − φ(s_α u) ∈ ⟨α⟩ for every positive root α and every u."""
    return check_gkm(phi, lambda diff, alpha: diff.exact_div_linear(alpha))


def expand_in_schubert_coh(phi: GKMClassS) -> SchubertExpansion:
    return expand_triangular(phi, lambda x: schubert_class(phi.datum, x))


def structure_constants_coh(datum: RootDatum, u: WeylElem, v: WeylElem) -> SchubertExpansion:
    """c^w_{u,v} with 𝔖_u·𝔖_v = Σ_w c^w_{u,v} 𝔖_w."""
    logger.info(f"Expanding S[{u}]·S[{v}] over {datum.label}")
    product = schubert_class(datum, u) * schubert_class(datum, v)
    expansion = expand_in_schubert_coh(product)
    logger.info(f"S[{u}]·S[{v}] has {len(expansion)} terms")
    return expansion


def divided_difference_pointwise(phi: GKMClassS, i: int) -> GKMClassS:
    """δ_i φ(w) = (φ(w s_i) − φ(w)) / w.α_i; sends 𝔖_v to 𝔖_{v s_i} or 0."""
    datum = phi.datum
    s = datum.simple_reflection(i)
    alpha = datum.simple_root(i)
    return phi.map(lambda w, value: (phi(w * s) - value).exact_div_linear(w.act(alpha)))


def integrate_coh(phi: GKMClassS) -> PolyS:
    """Σ_w φ(w) / ∏_{α>0} w.(−α), the equivariant pushforward to a point."""
    datum = phi.datum
    parity = len(datum.positive_roots)
    total = PolyS.zero(names=variable_names(datum.rank))
    for w, value in phi:
        if value:
            total = total + (value if (parity + datum.length(w)) % 2 == 0 else -value)
    for beta in datum.positive_roots:
        try:
            total = total.exact_div_linear(beta)
        except NotDivisibleError:
            raise NonPolynomialResultError(f"Localization sum over {datum.label} is not a polynomial")
    return total


def opposite_class_coh(datum: RootDatum, w: WeylElem) -> GKMClassS:
    """[X_w]: x ↦ w0.𝔖_{w0 w}(w0 x), dual to 𝔖_v under integrate_coh."""
    w0 = datum.longest_element
    twisted = schubert_class(datum, w0 * datum.check(w))
    return GKMClassS(datum, {x: twisted(w0 * x).act(w0) for x in datum.elements()})


def structure_constants_coh_by_pushforward(datum: RootDatum, u: WeylElem, v: WeylElem) -> SchubertExpansion:
    """c^w_{u,v} = ∫ 𝔖_u·𝔖_v·[X_w], computed independently of the triangular expansion."""
    product = schubert_class(datum, u) * schubert_class(datum, v)
    coefficients = {}
    for w in datum.elements():
        if datum.bruhat_leq(u, w) and datum.bruhat_leq(v, w):
            coefficients[w] = integrate_coh(product * opposite_class_coh(datum, w))
    return SchubertExpansion(datum, GKMClassS.theory, coefficients)
