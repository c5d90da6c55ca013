"""
Double Schubert and double Grothendieck polynomials (type A).

Representatives live in the rank-2n ring with variables t1..tn, z1..zn
(x-exponents of the same names in K-theory). Both families are generated
from the longest element by divided differences in the z variables:

    𝔖_{w0} = ∏_{i+j≤n} (z_i − t_j)        ∂_i f = (f − s_i f)/(z_i − z_{i+1})
    G_{w0}  = ∏_{i+j≤n} (1 − x^{t_j−z_i})  π_i G = (G − x^{z_{i+1}−z_i} s_i G)/(1 − x^{z_{i+1}−z_i})

with 𝔖_w = ∂_i 𝔖_{w s_i} and G_w = π_i G_{w s_i} whenever w s_i > w.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from patternmap.base.config import Theory
from patternmap.base.errors import UnsupportedTypeError
from patternmap.base.symbolic import LaurentR, LinearForm, PolyS, borel_names
from patternmap.weyl.element import WeylElem
from patternmap.weyl.rootdatum import RootDatum


@dataclass(frozen=True)
class DoublePoly:
    """A Borel-presentation representative over t1..tn, z1..zn."""
    poly: Union[PolyS, LaurentR]
    n: int

    @property
    def theory(self) -> Theory:
        return Theory.COHOMOLOGY if isinstance(self.poly, PolyS) else Theory.K_THEORY

    def __mul__(self, other: DoublePoly) -> DoublePoly:
        return DoublePoly(self.poly * other.poly, self.n)

    def to_text(self) -> str:
        return self.poly.to_text()

    def __str__(self) -> str:
        return self.to_text()

    def to_dict(self) -> dict:
        return {"n": self.n, "theory": self.theory.value, "poly": self.poly.to_dict()}

    @classmethod
    def from_dict(cls, data: dict) -> DoublePoly:
        ring = PolyS if data["theory"] == Theory.COHOMOLOGY.value else LaurentR
        return cls(ring.from_dict(data["poly"]), int(data["n"]))


def require_type_a(datum: RootDatum) -> None:
    if datum.family != "A":
        raise UnsupportedTypeError(f"Double polynomial representatives exist in type A only, not {datum.label}")


def _z_swap(n: int, i: int) -> list[tuple[int, int]]:
    """Images swapping z_i and z_{i+1}, fixing everything else."""
    images = [(1, k) for k in range(2 * n)]
    images[n + i - 1], images[n + i] = (1, n + i), (1, n + i - 1)
    return images


def _z_root(n: int, i: int) -> LinearForm:
    """z_{i+1} − z_i in the rank-2n character lattice."""
    coeffs = [0] * (2 * n)
    coeffs[n + i - 1], coeffs[n + i] = -1, 1
    return LinearForm(tuple(coeffs))


def divided_difference_z(f: PolyS, n: int, i: int) -> PolyS:
    return (f - f.relabel(_z_swap(n, i))).exact_div_linear(-_z_root(n, i))


def isobaric_divided_difference_z(g: LaurentR, n: int, i: int) -> LaurentR:
    root = _z_root(n, i)
    names = borel_names(n)
    return (g - root.exp(names) * g.relabel(_z_swap(n, i))).exact_div_one_minus(root)


def _top_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i + j <= n]


def _ascent(w: WeylElem) -> int:
    """Smallest i with w(i) < w(i+1), i.e. w s_i > w."""
    return next(i for i in range(1, w.rank) if w.window[i - 1] < w.window[i])


@lru_cache(maxsize=None)
def _schubert(window: tuple[int, ...]) -> PolyS:
    n = len(window)
    names = borel_names(n)
    w = WeylElem(window)
    if list(window) == list(range(n, 0, -1)):
        top = PolyS.one(names=names)
        for i, j in _top_pairs(n):
            top = top * (PolyS.gen(n + i, names=names) - PolyS.gen(j, names=names))
        return top
    i = _ascent(w)
    ws = list(window)
    ws[i - 1], ws[i] = ws[i], ws[i - 1]
    return divided_difference_z(_schubert(tuple(ws)), n, i)


@lru_cache(maxsize=None)
def _grothendieck(window: tuple[int, ...]) -> LaurentR:
    n = len(window)
    names = borel_names(n)
    w = WeylElem(window)
    if list(window) == list(range(n, 0, -1)):
        top = LaurentR.one(names=names)
        for i, j in _top_pairs(n):
            coeffs = [0] * (2 * n)
            coeffs[j - 1], coeffs[n + i - 1] = 1, -1
            top = top * LaurentR.one_minus(LinearForm(tuple(coeffs)), names)
        return top
    i = _ascent(w)
    ws = list(window)
    ws[i - 1], ws[i] = ws[i], ws[i - 1]
    return isobaric_divided_difference_z(_grothendieck(tuple(ws)), n, i)


def double_schubert(datum: RootDatum, w: WeylElem) -> DoublePoly:
    """The double Schubert polynomial 𝔖_w(z; t)."""
    require_type_a(datum)
    datum.check(w)
    return DoublePoly(_schubert(w.window), datum.rank)


def double_grothendieck(datum: RootDatum, w: WeylElem) -> DoublePoly:
    """The double Grothendieck polynomial G_w(z; t); G_identity = 1."""
    require_type_a(datum)
    datum.check(w)
    return DoublePoly(_grothendieck(w.window), datum.rank)


def representative(datum: RootDatum, w: WeylElem, theory: Theory | str = Theory.COHOMOLOGY) -> DoublePoly:
    if Theory(theory) is Theory.COHOMOLOGY:
        return double_schubert(datum, w)
    return double_grothendieck(datum, w)
