"""
Localized classes and Schubert expansions.

A GKM class is a total map W → coefficient ring: the restrictions of an
equivariant class to the torus fixed points. GKMClassS takes values in
S = Q[t1..tn] (cohomology), GKMClassK in R(T) = Z[x1^±1..xn^±1] (K-theory).
Products are pointwise. Both carry the root datum whose Weyl group indexes
the fixed points, which may be a reflection subgroup W′ of a larger group.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, ClassVar, Iterator, Mapping, Union

from patternmap.base.config import Theory
from patternmap.base.errors import DatumMismatchError, InputError, NotDivisibleError, NotInSpanError
from patternmap.base.symbolic import LaurentR, LinearForm, PolyS, variable_names
from patternmap.weyl.element import WeylElem
from patternmap.weyl.rootdatum import RootDatum

logger = logging.getLogger("patternmap.gkm")

Coefficient = Union[PolyS, LaurentR]


class GKMClass:
    """Base for localized classes; subclasses fix the coefficient ring."""

    theory: ClassVar[Theory]
    prefix: ClassVar[str]

    def __init__(self, datum: RootDatum, values: Mapping[WeylElem, Any]):
        self.datum = datum
        zero = self.zero_value(datum)
        self.values: dict[WeylElem, Coefficient] = {}
        for w in datum.elements():
            value = values.get(w, zero)
            if isinstance(value, int):
                value = self.constant_value(datum, value)
            self.values[w] = value
        extra = set(values) - set(self.values)
        if extra:
            raise DatumMismatchError(f"Values given at elements outside {datum.label}: {sorted(map(str, extra))}")

    # --- coefficient ring ---

    @classmethod
    def names(cls, datum: RootDatum) -> tuple[str, ...]:
        return variable_names(datum.rank, cls.prefix)

    @classmethod
    def zero_value(cls, datum: RootDatum) -> Coefficient:
        return cls.constant_value(datum, 0)

    @classmethod
    def constant_value(cls, datum: RootDatum, c: int) -> Coefficient:
        raise NotImplementedError

    @classmethod
    def parse_value(cls, datum: RootDatum, text: str) -> Coefficient:
        raise NotImplementedError

    @classmethod
    def constant(cls, datum: RootDatum, c: int = 1) -> GKMClass:
        value = cls.constant_value(datum, c)
        return cls(datum, {w: value for w in datum.elements()})

    @classmethod
    def supported_at(cls, datum: RootDatum, w: WeylElem, value: Coefficient) -> GKMClass:
        return cls(datum, {datum.check(w): value})

    # --- access ---

    def __call__(self, w: WeylElem) -> Coefficient:
        try:
            return self.values[w]
        except KeyError:
            raise DatumMismatchError(f"{w} is not a fixed point of {self.datum.label}")

    def __iter__(self) -> Iterator[tuple[WeylElem, Coefficient]]:
        return iter(self.values.items())

    def support(self) -> list[WeylElem]:
        return [w for w, value in self.values.items() if value]

    @property
    def is_zero(self) -> bool:
        return not self.support()

    # --- arithmetic ---

    def _check(self, other: GKMClass) -> None:
        if type(other) is not type(self):
            raise TypeError(f"Cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.datum is not self.datum:
            raise DatumMismatchError(f"Classes over {self.datum.label} and {other.datum.label}")

    def map(self, fn: Callable[[WeylElem, Coefficient], Coefficient]) -> GKMClass:
        return type(self)(self.datum, {w: fn(w, value) for w, value in self.values.items()})

    def __add__(self, other: GKMClass) -> GKMClass:
        self._check(other)
        return self.map(lambda w, value: value + other.values[w])

    def __sub__(self, other: GKMClass) -> GKMClass:
        self._check(other)
        return self.map(lambda w, value: value - other.values[w])

    def __neg__(self) -> GKMClass:
        return self.map(lambda w, value: -value)

    def __mul__(self, other: Any) -> GKMClass:
        """Pointwise product with a class, or scaling by a ring element or integer."""
        if isinstance(other, GKMClass):
            self._check(other)
            return self.map(lambda w, value: value * other.values[w])
        if isinstance(other, (int, PolyS, LaurentR)):
            return self.map(lambda w, value: value * other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GKMClass):
            return NotImplemented
        return type(other) is type(self) and other.datum is self.datum and other.values == self.values

    __hash__ = None

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.datum.label}, support={len(self.support())})"

    # --- serialization ---

    def to_dict(self) -> dict:
        return {
            "group": self.datum.label,
            "theory": self.theory.value,
            "values": {str(w): value.to_text() for w, value in self.values.items()},
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    def to_text(self) -> str:
        width = max(len(str(w)) for w in self.values)
        return "\n".join(f"{str(w):>{width}}  {value.to_text()}" for w, value in self.values.items())

    @classmethod
    def from_dict(cls, data: dict, datum: RootDatum) -> GKMClass:
        if data.get("theory", cls.theory.value) != cls.theory.value:
            raise InputError(f"Expected a {cls.theory.value} class, got {data.get('theory')}")
        values = {datum.parse_element(k): cls.parse_value(datum, v) for k, v in data["values"].items()}
        return cls(datum, values)

    @classmethod
    def from_json(cls, json_str: str, datum: RootDatum) -> GKMClass:
        return cls.from_dict(json.loads(json_str), datum)

    def write_to(self, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json())
        return path


class GKMClassS(GKMClass):
    """Localized equivariant cohomology class, values in S."""
    theory = Theory.COHOMOLOGY
    prefix = "t"

    @classmethod
    def constant_value(cls, datum: RootDatum, c: int) -> PolyS:
        return PolyS.constant(c, names=cls.names(datum))

    @classmethod
    def parse_value(cls, datum: RootDatum, text: str) -> PolyS:
        return PolyS.from_text(text, names=cls.names(datum))


class GKMClassK(GKMClass):
    """Localized equivariant K-theory class, values in R(T)."""
    theory = Theory.K_THEORY
    prefix = "x"

    @classmethod
    def constant_value(cls, datum: RootDatum, c: int) -> LaurentR:
        return LaurentR.constant(c, names=cls.names(datum))

    @classmethod
    def parse_value(cls, datum: RootDatum, text: str) -> LaurentR:
        return LaurentR.from_text(text, names=cls.names(datum))


CLASS_TYPES: dict[Theory, type[GKMClass]] = {
    Theory.COHOMOLOGY: GKMClassS,
    Theory.K_THEORY: GKMClassK,
}


@dataclass(frozen=True)
class GKMCheck:
    """Outcome of a GKM divisibility check; falsy on failure, with the violating edge."""
    ok: bool
    witness: tuple[WeylElem, LinearForm] | None = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "GKM relations hold"
        u, alpha = self.witness
        return f"GKM relation fails on the edge {u} -- s_({alpha})·{u}"


def check_gkm(phi: GKMClass, divide: Callable[[Coefficient, LinearForm], Coefficient]) -> GKMCheck:
    """Check that φ(u) − φ(s_α u) is divisible (via `divide`) for every edge of the one-skeleton."""
    datum = phi.datum
    for alpha, s in datum.reflections.items():
        for u in datum.elements():
            su = s * u
            if datum.sort_key(su) < datum.sort_key(u):
                continue
            diff = phi(u) - phi(su)
            if not diff:
                continue
            try:
                divide(diff, alpha)
            except NotDivisibleError:
                logger.debug(f"GKM failure over {datum.label} at {u}, root {alpha}")
                return GKMCheck(False, (u, alpha))
    return GKMCheck(True)


@dataclass
class SchubertExpansion:
    """
    Σ coeff(v)·basis(v) in the Schubert basis of `datum`; only nonzero coefficients are stored.

    The basis is 𝔖_v in cohomology and [O_{X^v}] in K-theory.
    """
    datum: RootDatum
    theory: Theory
    coefficients: dict[WeylElem, Coefficient] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.theory = Theory(self.theory)
        self.coefficients = {
            w: c for w, c in sorted(self.coefficients.items(), key=lambda kv: self.datum.sort_key(kv[0])) if c
        }

    def __getitem__(self, w: WeylElem) -> Coefficient:
        if w in self.coefficients:
            return self.coefficients[w]
        return CLASS_TYPES[self.theory].zero_value(self.datum)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self) -> Iterator[WeylElem]:
        return iter(self.coefficients)

    def items(self):
        return self.coefficients.items()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchubertExpansion):
            return NotImplemented
        return (
            other.datum is self.datum
            and other.theory == self.theory
            and other.coefficients == self.coefficients
        )

    def assemble(self) -> GKMClass:
        """Σ coeff(v)·basis(v) as a localized class."""
        from patternmap.gkm.cohomology import schubert_class
        from patternmap.gkm.ktheory import structure_sheaf_class

        basis = schubert_class if self.theory is Theory.COHOMOLOGY else structure_sheaf_class
        total = CLASS_TYPES[self.theory].constant(self.datum, 0)
        for v, c in self.coefficients.items():
            total = total + basis(self.datum, v) * c
        return total

    def to_dict(self) -> dict:
        return {
            "group": self.datum.label,
            "theory": self.theory.value,
            "terms": {str(w): c.to_text() for w, c in self.coefficients.items()},
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    def to_text(self) -> str:
        symbol = "S" if self.theory is Theory.COHOMOLOGY else "O"
        if not self.coefficients:
            return "0"
        parts = []
        for w, c in self.coefficients.items():
            text = c.to_text()
            if text == "1":
                parts.append(f"{symbol}[{w}]")
            else:
                parts.append(f"({text})*{symbol}[{w}]")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def from_dict(cls, data: dict, datum: RootDatum) -> SchubertExpansion:
        theory = Theory(data["theory"])
        parse = CLASS_TYPES[theory].parse_value
        return cls(
            datum,
            theory,
            {datum.parse_element(k): parse(datum, v) for k, v in data["terms"].items()},
        )

    @classmethod
    def from_json(cls, json_str: str, datum: RootDatum) -> SchubertExpansion:
        return cls.from_dict(json.loads(json_str), datum)


def expand_triangular(phi: GKMClass, basis: Callable[[WeylElem], GKMClass]) -> SchubertExpansion:
    """
    Expand φ in a basis that is upper triangular for Bruhat order.

    Elements are visited by (length, window), a linear extension of Bruhat
    order, so when x is reached the residual at x is c_x·basis(x)(x).
    Basis classes are only built for nonzero coefficients.
    """
    datum = phi.datum
    residual = dict(phi.values)
    coefficients: dict[WeylElem, Coefficient] = {}
    for x in datum.elements():
        r = residual[x]
        if not r:
            continue
        b = basis(x)
        try:
            c = r.exact_div(b(x))
        except NotDivisibleError:
            raise NotInSpanError(f"Residual {r} at {x} is not a multiple of the diagonal value {b(x)}")
        coefficients[x] = c
        for y in b.support():
            residual[y] = residual[y] - c * b(y)
    return SchubertExpansion(datum, phi.theory, coefficients)
