"""
Levi data cut out by a cocharacter.

For an integer vector η the roots orthogonal to η form a closed subsystem
Φ′ whose positive part is Φ⁺ ∩ η^⊥. Its indecomposable positive roots Δ′
are the simple roots of the reflection subgroup W′, which need not be
generated by ambient simple roots (GL(4) inside Sp(8) is the standard
example). The fixed locus of η on G/B has one component for each right
coset W′x, and each coset has a unique shortest element ς.

Each irreducible factor of Φ′ is matched to a standard A/B/C/D datum by its
Dynkin diagram, so an element of W′ can also be written in the factors' own
window notation.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from patternmap.base.errors import DatumMismatchError, InputError, RepNotMinimalError, UnsupportedTypeError
from patternmap.base.symbolic import LinearForm
from patternmap.weyl.element import WeylElem
from patternmap.weyl.rootdatum import RootDatum, make_root_datum

logger = logging.getLogger("patternmap.pattern")


def _root_key(root: LinearForm) -> tuple[int, tuple[int, ...]]:
    last = max((i for i, c in enumerate(root.coeffs) if c), default=-1)
    return (last, root.coeffs)


@dataclass(frozen=True)
class LeviFactor:
    """An irreducible factor of Φ′ matched to a standard root datum."""
    family: str
    simple_roots: tuple[LinearForm, ...]
    local_labels: tuple[int, ...]
    local: RootDatum

    @property
    def label(self) -> str:
        return self.local.label


@dataclass(frozen=True)
class Coset:
    rep: WeylElem
    members: tuple[WeylElem, ...]


@dataclass(frozen=True)
class FlattenResult:
    """x = ambient_factor · rep, with ambient_factor ∈ W′ also given factor by factor."""
    element: WeylElem
    sub_element: tuple[WeylElem, ...]
    rep: WeylElem
    ambient_factor: WeylElem
    factors: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "element": str(self.element),
            "rep": str(self.rep),
            "ambient_factor": str(self.ambient_factor),
            "sub_element": [str(w) for w in self.sub_element],
            "factors": list(self.factors),
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> FlattenResult:
        return cls(
            element=WeylElem.parse(data["element"]),
            sub_element=tuple(WeylElem.parse(w) for w in data["sub_element"]),
            rep=WeylElem.parse(data["rep"]),
            ambient_factor=WeylElem.parse(data["ambient_factor"]),
            factors=tuple(data.get("factors", ())),
        )

    @classmethod
    def from_json(cls, json_str: str) -> FlattenResult:
        return cls.from_dict(json.loads(json_str))


def _bond(a: LinearForm, b: LinearForm) -> int:
    """a_ij·a_ji: 0 unlinked, 1 single, 2 double, 3 triple bond."""
    return 4 * a.dot(b) ** 2 // (a.dot(a) * b.dot(b))


def _components(roots: Sequence[LinearForm]) -> list[list[LinearForm]]:
    remaining = sorted(roots, key=_root_key)
    components = []
    while remaining:
        stack = [remaining.pop(0)]
        component = []
        while stack:
            node = stack.pop()
            component.append(node)
            linked = [r for r in remaining if node.dot(r) != 0]
            for r in linked:
                remaining.remove(r)
            stack.extend(linked)
        components.append(sorted(component, key=_root_key))
    return components


def _walk(start: LinearForm, nodes: Sequence[LinearForm], skip: Sequence[LinearForm] = ()) -> list[LinearForm]:
    """Order the nodes of a path starting at `start`."""
    path = [start]
    seen = {start, *skip}
    while True:
        nxt = [r for r in nodes if r not in seen and path[-1].dot(r) != 0]
        if not nxt:
            return path
        path.append(nxt[0])
        seen.add(nxt[0])


def _classify(component: list[LinearForm]) -> LeviFactor:
    m = len(component)
    degree = {r: sum(1 for s in component if s != r and r.dot(s) != 0) for r in component}
    bonds = {(a, b): _bond(a, b) for a in component for b in component if a != b}
    if any(v == 3 for v in bonds.values()):
        raise UnsupportedTypeError("Root subsystem of type G2 is not supported")

    if any(d >= 3 for d in degree.values()):
        family = "D"
        branch = next(r for r in component if degree[r] >= 3)
        neighbors = sorted((r for r in component if r != branch and r.dot(branch) != 0), key=_root_key)
        leaves = [r for r in neighbors if degree[r] == 1]
        first, second = leaves[0], leaves[1]
        arm = [r for r in neighbors if r not in (first, second)]
        ordered = [first, second, branch]
        if arm:
            ordered += _walk(arm[0], component, skip=ordered)
        labels = tuple(range(m))
    elif any(v == 2 for v in bonds.values()):
        a, b = next(pair for pair, v in bonds.items() if v == 2)
        ends = [r for r in (a, b) if degree[r] == 1]
        if len(ends) == 2:
            node0 = a if a.dot(a) > b.dot(b) else b
        else:
            node0 = ends[0]
        other = b if node0 == a else a
        family = "C" if node0.dot(node0) > other.dot(other) else "B"
        ordered = _walk(node0, component)
        labels = tuple(range(m))
    else:
        family = "A"
        ends = sorted((r for r in component if degree[r] <= 1), key=_root_key)
        ordered = _walk(ends[0], component)
        labels = tuple(range(1, m + 1))

    local = make_root_datum(family, m + 1 if family == "A" else m)
    expected = local.cartan_matrix()
    actual = [[2 * x.dot(y) // y.dot(y) for y in ordered] for x in ordered]
    if expected != actual or len(ordered) != m:
        raise UnsupportedTypeError(f"Cannot identify the root subsystem spanned by {[str(r) for r in component]}")
    return LeviFactor(family, tuple(ordered), labels, local)


class LeviDatum:
    """
    Φ′, Δ′, the reflection subgroup W′ (as the RootDatum `sub`) and the cosets W′\\W.

    `sub` shares the ambient torus, so its elements are ambient WeylElems and
    GKM classes over it take values in the ambient coefficient rings.
    """

    def __init__(
        self,
        ambient: RootDatum,
        eta: tuple[int, ...],
        sub: RootDatum,
        factors: Sequence[LeviFactor],
        cosets: Sequence[Coset],
    ):
        self.ambient = ambient
        self.eta = eta
        self.sub = sub
        self.factors = tuple(factors)
        self.cosets = tuple(cosets)
        self._coset_index = {x: k for k, coset in enumerate(self.cosets) for x in coset.members}
        self._label_map = {}
        label = 1
        for f_idx, factor in enumerate(self.factors):
            for local_label in factor.local_labels:
                self._label_map[label] = (f_idx, local_label)
                label += 1

    def __repr__(self) -> str:
        return f"LeviDatum({self.ambient.label}, eta={list(self.eta)}, {self.label}, {len(self.cosets)} cosets)"

    @property
    def label(self) -> str:
        return self.sub.label

    @property
    def reps(self) -> list[WeylElem]:
        return [coset.rep for coset in self.cosets]

    def coset_of(self, x: WeylElem) -> Coset:
        self.ambient.check(x)
        return self.cosets[self._coset_index[x]]

    def is_rep(self, sigma: WeylElem) -> bool:
        return sigma in self._coset_index and self.coset_of(sigma).rep == sigma

    def require_rep(self, sigma: WeylElem) -> WeylElem:
        if not self.is_rep(sigma):
            valid = [str(r) for r in self.reps]
            raise RepNotMinimalError(
                f"{sigma} is not a minimal coset representative for {self.label} in {self.ambient.label}; "
                f"valid representatives: {', '.join(valid)}",
                valid=valid,
            )
        return sigma

    def local_elements(self, w: WeylElem) -> tuple[WeylElem, ...]:
        """w ∈ W′ written in each factor's own window notation."""
        self.sub.check(w)
        parts = [factor.local.identity for factor in self.factors]
        for label in self.sub.reduced_word(w):
            f_idx, local_label = self._label_map[label]
            parts[f_idx] = parts[f_idx] * self.factors[f_idx].local.simple_reflections[local_label]
        return tuple(parts)

    def flatten(self, x: WeylElem) -> FlattenResult:
        rep = self.coset_of(x).rep
        w = x * rep.inverse()
        return FlattenResult(
            element=x,
            sub_element=self.local_elements(w),
            rep=rep,
            ambient_factor=w,
            factors=tuple(f.label for f in self.factors),
        )

    def to_dict(self) -> dict:
        return {
            "group": self.ambient.label,
            "eta": list(self.eta),
            "levi": self.label,
            "simple_roots": [str(r) for r in self.sub.simple_roots],
            "positive_roots": [str(r) for r in self.sub.positive_roots],
            "cosets": [
                {"rep": str(c.rep), "length": self.ambient.length(c.rep), "size": len(c.members)}
                for c in self.cosets
            ],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)


def _indecomposable(roots: Sequence[LinearForm]) -> list[LinearForm]:
    sums = {(a + b).coeffs for a in roots for b in roots}
    return [r for r in roots if r.coeffs not in sums]


@lru_cache(maxsize=None)
def _levi(datum: RootDatum, eta: tuple[int, ...]) -> LeviDatum:
    eta_form = LinearForm(eta)
    sub_positive = [beta for beta in datum.positive_roots if beta.dot(eta_form) == 0]
    sub_simple = _indecomposable(sub_positive)
    factors = sorted((_classify(c) for c in _components(sub_simple)), key=lambda f: _root_key(f.simple_roots[0]))
    ordered = [root for factor in factors for root in factor.simple_roots]
    label = "x".join(f.label for f in factors) or "trivial"
    sub = RootDatum(label, datum.rank, sub_positive, ordered, range(1, len(ordered) + 1))

    sub_elements = sub.elements()
    cosets: list[Coset] = []
    assigned: set[WeylElem] = set()
    for x in datum.elements():
        if x in assigned:
            continue
        members = tuple(sorted({w * x for w in sub_elements}, key=datum.sort_key))
        assigned.update(members)
        cosets.append(Coset(rep=x, members=members))
        logger.debug(f"Coset of {x}: {len(members)} members")
    logger.info(f"Levi of {datum.label} at eta={list(eta)}: {label}, {len(cosets)} cosets")
    return LeviDatum(datum, eta, sub, factors, cosets)


def levi_from_cocharacter(datum: RootDatum, eta: Sequence[int]) -> LeviDatum:
    """Φ′ = Φ ∩ η^⊥ with its Weyl group W′ and the cosets W′\\W (cached per (datum, η))."""
    eta = tuple(int(c) for c in eta)
    if len(eta) != datum.rank:
        raise InputError(f"eta has {len(eta)} entries, {datum.label} needs {datum.rank}")
    return _levi(datum, eta)


def parse_eta(text: str) -> tuple[int, ...]:
    values = []
    for pos, tok in enumerate(text.replace(" ", "").split(","), start=1):
        try:
            values.append(int(tok))
        except ValueError:
            raise InputError(f"eta {text!r}, position {pos}: {tok!r} is not an integer")
    return tuple(values)


def min_coset_reps(levi: LeviDatum) -> list[WeylElem]:
    """One shortest element per coset, sorted by (length, window)."""
    return levi.reps


def flatten(levi: LeviDatum, x: WeylElem) -> FlattenResult:
    return levi.flatten(x)


def check_same_ambient(levi: LeviDatum, datum: RootDatum) -> None:
    if datum is not levi.ambient:
        raise DatumMismatchError(f"Class over {datum.label}, Levi data over {levi.ambient.label}")
