"""
Positivity of structure constants.

Cohomology constants c^w_{u,v} are polynomials with nonnegative integer
coefficients in the simple roots. K-theory constants satisfy
(−1)^{ℓ(w)−ℓ(u)−ℓ(v)} b^w_{u,v} ∈ Z≥0[x^{−α_i} − 1].

Both checks rewrite the coefficient in simple-root coordinates through a
rational right inverse of the simple-root matrix and verify the rewrite
by substituting back, so classes outside the root subring are rejected.
"""

from __future__ import annotations

from functools import lru_cache

import sympy
from sympy.polys.domains import QQ

from patternmap.base.symbolic import LaurentR, PolyS, variable_names
from patternmap.weyl.rootdatum import RootDatum


@lru_cache(maxsize=None)
def _simple_root_section(datum: RootDatum) -> tuple[tuple[sympy.Rational, ...], ...]:
    """n × r matrix T with (simple-root matrix)·T = identity."""
    a = sympy.Matrix([list(root.coeffs) for root in datum.simple_roots])
    t = a.T * (a * a.T).inv()
    return tuple(tuple(t[j, k] for k in range(t.cols)) for j in range(t.rows))


def _unit(k: int, r: int) -> tuple[int, ...]:
    return tuple(1 if m == k else 0 for m in range(r))


def _nonnegative_integral(p: PolyS) -> bool:
    return all(c >= 0 and QQ.denom(c) == 1 for c in p.terms.values())


def express_in_simple_roots(p: PolyS, datum: RootDatum) -> PolyS | None:
    """
    The polynomial q(a_1..a_r) with q(α_1..α_r) = p, or None if p is not a
    polynomial in the simple roots. Variables follow simple-label order.
    """
    r = len(datum.simple_roots)
    if r == 0:
        return None
    section = _simple_root_section(datum)
    names = variable_names(r, "a")
    images = [PolyS.from_terms({_unit(k, r): c for k, c in enumerate(row) if c}, names=names) for row in section]
    q = p.compose(images)
    roots = [root.to_poly(p.names) for root in datum.simple_roots]
    if q.compose(roots) != p:
        return None
    return q


def graham_positive(p: PolyS, datum: RootDatum) -> bool:
    """p has nonnegative integer coefficients as a polynomial in the simple roots."""
    if p.is_zero:
        return True
    if not datum.simple_roots:
        return p.degree == 0 and _nonnegative_integral(p)
    q = express_in_simple_roots(p, datum)
    return q is not None and _nonnegative_integral(q)


def agm_positive(b: LaurentR, sign: int, datum: RootDatum) -> bool:
    """sign·b is a nonnegative integer combination of monomials in y_i = x^{−α_i} − 1."""
    if b.is_zero:
        return True
    r = len(datum.simple_roots)
    if r == 0:
        return set(b.terms) == {(0,) * datum.rank} and sign * b.constant_term() >= 0
    section = _simple_root_section(datum)
    u_names = variable_names(r, "u")
    terms = {}
    for exps, coeff in b.terms.items():
        coords = [sum(exps[j] * section[j][k] for j in range(datum.rank)) for k in range(r)]
        if any(not c.is_integer or c > 0 for c in map(sympy.Rational, coords)):
            return False
        rebuilt = [sum(int(coords[k]) * root.coeffs[j] for k, root in enumerate(datum.simple_roots)) for j in range(datum.rank)]
        if tuple(rebuilt) != exps:
            return False
        terms[tuple(-int(c) for c in coords)] = sign * coeff
    f = PolyS.from_terms(terms, names=u_names)
    y_names = variable_names(r, "y")
    shifted = [PolyS.gen(k + 1, names=y_names) + 1 for k in range(r)]
    return _nonnegative_integral(f.compose(shifted))
