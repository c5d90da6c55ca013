"""
Exact coefficient rings.

  PolyS:      S = Q[t1..tn], a sympy PolyRing element over QQ
  LaurentR:   R(T) = Z[x1^±1..xn^±1], stored as x^shift * (ZZ polynomial);
              the monomial x^λ is the character e^λ
  LinearForm: an integer character λ = Σ λ_i t_i (roots, weights, cocharacters)

Weyl group elements act on both rings by signed relabelling of variables:
t_i ↦ sign(w(i)) t_|w(i)| in S and x^{t_i} ↦ x^{sign(w(i)) t_|w(i)|} in R(T).
Everything is exact; nothing here ever touches floating point.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Any, Iterable, Mapping, Sequence, Union

import sympy
from sympy.polys.domains import QQ, ZZ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing

from patternmap.base.errors import InputError, NotDivisibleError, RankMismatchError

if TYPE_CHECKING:
    from patternmap.weyl.element import WeylElem

Exponents = tuple[int, ...]
# A variable image for relabelling: (sign, 0-based index in the target ring)
SignedIndex = tuple[int, int]


def variable_names(n: int, prefix: str = "t") -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, n + 1))


def borel_names(n: int) -> tuple[str, ...]:
    """t1..tn followed by z1..zn, the variables of the Borel presentation."""
    return variable_names(n, "t") + variable_names(n, "z")


@lru_cache(maxsize=None)
def poly_ring(names: tuple[str, ...], domain: Any = QQ) -> PolyRing:
    if not names:
        raise RankMismatchError("Polynomial rings need at least one variable")
    return PolyRing(names, domain)


def _to_qq(value: Any) -> Any:
    if isinstance(value, str):
        num, _, den = value.strip().partition("/")
        return QQ(int(num), int(den or 1))
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, sympy.Basic):
        return QQ.from_sympy(sympy.Rational(value))
    return QQ.convert(value)


def _qq_str(value: Any) -> str:
    num, den = int(QQ.numer(value)), int(QQ.denom(value))
    return str(num) if den == 1 else f"{num}/{den}"


def _monomial_str(exps: Exponents, names: Sequence[str]) -> str:
    factors = []
    for name, e in zip(names, exps):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def _format_terms(terms: list[tuple[Exponents, Any]], names: Sequence[str], coeff_str) -> str:
    """Canonical text: terms in descending lexicographic order of exponents."""
    if not terms:
        return "0"
    pieces = []
    for k, (exps, coeff) in enumerate(sorted(terms, key=lambda t: t[0], reverse=True)):
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        mono = _monomial_str(exps, names)
        if not mono:
            body = coeff_str(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{coeff_str(magnitude)}*{mono}"
        if k == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def _parse_terms(text: str, names: Sequence[str]) -> dict[Exponents, Any]:
    """Parse polynomial/Laurent text over the given variables into {exponents: Rational}."""
    symbols = {name: sympy.Symbol(name) for name in names}
    try:
        expr = sympy.expand(sympy.sympify(text, locals=symbols))
    except (sympy.SympifyError, SyntaxError, TypeError) as e:
        raise InputError(f"Cannot parse polynomial {text!r}: {e}")
    index = {sym: i for i, sym in enumerate(symbols.values())}
    terms: dict[Exponents, Any] = {}
    for mono, coeff in expr.as_coefficients_dict().items():
        if not coeff.is_Rational:
            raise InputError(f"Non-rational coefficient {coeff} in {text!r}")
        exps = [0] * len(names)
        for factor in sympy.Mul.make_args(mono):
            if factor == 1:
                continue
            base, exp = factor.as_base_exp()
            if base not in index or not exp.is_Integer:
                raise InputError(f"Unexpected factor {factor} in {text!r}; variables are {list(names)}")
            exps[index[base]] += int(exp)
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return {k: v for k, v in terms.items() if v != 0}


@dataclass(frozen=True)
class LinearForm:
    """An integral character Σ coeffs[i]·t_{i+1}."""
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def basis(cls, i: int, n: int) -> LinearForm:
        """The weight t_i (1-based)."""
        return cls(tuple(1 if k == i - 1 else 0 for k in range(n)))

    @classmethod
    def difference(cls, i: int, j: int, n: int) -> LinearForm:
        """The root α_{ij} = t_j − t_i."""
        return cls.basis(j, n) - cls.basis(i, n)

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: LinearForm) -> None:
        if other.rank != self.rank:
            raise RankMismatchError(f"Linear forms of rank {self.rank} and {other.rank}")

    def __neg__(self) -> LinearForm:
        return LinearForm(tuple(-c for c in self.coeffs))

    def __add__(self, other: LinearForm) -> LinearForm:
        self._check(other)
        return LinearForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: LinearForm) -> LinearForm:
        return self + (-other)

    def __mul__(self, scalar: int) -> LinearForm:
        return LinearForm(tuple(scalar * c for c in self.coeffs))

    __rmul__ = __mul__

    def dot(self, other: LinearForm | Sequence[int]) -> int:
        values = other.coeffs if isinstance(other, LinearForm) else tuple(other)
        if len(values) != self.rank:
            raise RankMismatchError(f"Pairing vectors of length {self.rank} and {len(values)}")
        return sum(a * b for a, b in zip(self.coeffs, values))

    def to_poly(self, names: Sequence[str] | None = None) -> PolyS:
        names = tuple(names) if names else variable_names(self.rank)
        if len(names) != self.rank:
            raise RankMismatchError(f"Form of rank {self.rank} in a ring with {len(names)} variables")
        return PolyS.from_terms({LinearForm.basis(i + 1, self.rank).coeffs: c for i, c in enumerate(self.coeffs) if c}, names=names)

    def exp(self, names: Sequence[str] | None = None) -> LaurentR:
        """The character e^λ as the Laurent monomial x^λ."""
        return LaurentR.monomial(self.coeffs, names)

    def __str__(self) -> str:
        return self.to_poly().to_text().replace(" ", "")


Scalar = Union[int, Fraction]


class PolyS:
    """
    An element of S = Q[t1..tn] (or of any QQ polynomial ring with named variables).

    Immutable. Arithmetic requires both operands to share variable names;
    plain ints and Fractions are promoted to constants.
    """

    __slots__ = ("_p",)

    def __init__(self, poly: PolyElement):
        self._p = poly

    # --- construction ---

    @staticmethod
    def _names(n: int | None, names: Sequence[str] | None) -> tuple[str, ...]:
        if names is not None:
            return tuple(names)
        if n is None:
            raise RankMismatchError("Either a rank or variable names are required")
        return variable_names(n)

    @classmethod
    def zero(cls, n: int | None = None, names: Sequence[str] | None = None) -> PolyS:
        return cls(poly_ring(cls._names(n, names), QQ).zero)

    @classmethod
    def one(cls, n: int | None = None, names: Sequence[str] | None = None) -> PolyS:
        return cls(poly_ring(cls._names(n, names), QQ).one)

    @classmethod
    def constant(cls, value: Any, n: int | None = None, names: Sequence[str] | None = None) -> PolyS:
        ring = poly_ring(cls._names(n, names), QQ)
        return cls(ring.ground_new(_to_qq(value)))

    @classmethod
    def gen(cls, i: int, n: int | None = None, names: Sequence[str] | None = None) -> PolyS:
        """The i-th variable (1-based)."""
        return cls(poly_ring(cls._names(n, names), QQ).gens[i - 1])

    @classmethod
    def from_terms(
        cls,
        terms: Mapping[Exponents, Any],
        n: int | None = None,
        names: Sequence[str] | None = None,
    ) -> PolyS:
        ring = poly_ring(cls._names(n, names), QQ)
        converted = {}
        for exps, coeff in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != ring.ngens or any(e < 0 for e in exps):
                raise InputError(f"Bad exponent vector {exps} for {ring.ngens} variables")
            converted[exps] = _to_qq(coeff)
        return cls(ring.from_dict(converted))

    @classmethod
    def from_text(cls, text: str, n: int | None = None, names: Sequence[str] | None = None) -> PolyS:
        names = cls._names(n, names)
        terms = _parse_terms(text, names)
        if any(e < 0 for exps in terms for e in exps):
            raise InputError(f"Negative exponent in polynomial {text!r}")
        return cls.from_terms(terms, names=names)

    # --- queries ---

    @property
    def poly(self) -> PolyElement:
        return self._p

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(str(s) for s in self._p.ring.symbols)

    @property
    def rank(self) -> int:
        return self._p.ring.ngens

    @property
    def terms(self) -> dict[Exponents, Any]:
        return dict(self._p.items())

    @property
    def is_zero(self) -> bool:
        return not self._p

    @property
    def degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(m) for m in self._p.keys()), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {sum(m) for m in self._p.keys()}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return degree is None or degrees == {degree}

    def homogeneous_part(self, degree: int) -> PolyS:
        return PolyS.from_terms({m: c for m, c in self._p.items() if sum(m) == degree}, names=self.names)

    def constant_term(self) -> Any:
        return self._p.get((0,) * self.rank, QQ.zero)

    # --- arithmetic ---

    def _coerce(self, other: Any) -> PolyElement:
        if isinstance(other, PolyS):
            if other._p.ring is not self._p.ring:
                raise RankMismatchError(f"Polynomials over {self.names} and {other.names}")
            return other._p
        if isinstance(other, (int, Fraction)):
            return self._p.ring.ground_new(_to_qq(other))
        return NotImplemented

    def __add__(self, other: Any) -> PolyS:
        q = self._coerce(other)
        return NotImplemented if q is NotImplemented else PolyS(self._p + q)

    __radd__ = __add__

    def __sub__(self, other: Any) -> PolyS:
        q = self._coerce(other)
        return NotImplemented if q is NotImplemented else PolyS(self._p - q)

    def __rsub__(self, other: Any) -> PolyS:
        q = self._coerce(other)
        return NotImplemented if q is NotImplemented else PolyS(q - self._p)

    def __mul__(self, other: Any) -> PolyS:
        q = self._coerce(other)
        return NotImplemented if q is NotImplemented else PolyS(self._p * q)

    __rmul__ = __mul__

    def __neg__(self) -> PolyS:
        return PolyS(-self._p)

    def __pow__(self, k: int) -> PolyS:
        return PolyS(self._p ** k)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._p == self._p.ring.ground_new(_to_qq(other))
        if not isinstance(other, PolyS):
            return NotImplemented
        return self._p.ring is other._p.ring and dict.__eq__(self._p, other._p)

    def __hash__(self) -> int:
        return hash((self.names, frozenset(self._p.items())))

    def __bool__(self) -> bool:
        return bool(self._p)

    def exact_div(self, divisor: PolyS) -> PolyS:
        """Quotient q with q·divisor = self; NotDivisibleError otherwise."""
        d = self._coerce(divisor)
        if not d:
            raise ZeroDivisionError("Division by the zero polynomial")
        if not self._p:
            return self
        try:
            return PolyS(self._p.exquo(d))
        except ExactQuotientFailed:
            raise NotDivisibleError(f"{self} is not divisible by {PolyS(d)}")

    def exact_div_linear(self, form: LinearForm) -> PolyS:
        if form.is_zero:
            raise ZeroDivisionError("Division by the zero linear form")
        if form.rank != self.rank:
            raise RankMismatchError(f"Form of rank {form.rank} against a ring of rank {self.rank}")
        return self.exact_div(form.to_poly(self.names))

    # --- substitution ---

    def relabel(self, images: Sequence[SignedIndex], names: Sequence[str] | None = None) -> PolyS:
        """
        Ring map sending variable i to sign·(target variable), images[i] = (sign, target).

        Several variables may land on the same target (e.g. z_i ↦ t_w(i)).
        """
        if len(images) != self.rank:
            raise RankMismatchError(f"{len(images)} images for {self.rank} variables")
        ring = poly_ring(tuple(names) if names else self.names, QQ)
        out: dict[Exponents, Any] = {}
        for monom, coeff in self._p.items():
            exps = [0] * ring.ngens
            negate = False
            for e, (sign, target) in zip(monom, images):
                if e:
                    exps[target] += e
                    if sign < 0 and e % 2:
                        negate = not negate
            key = tuple(exps)
            out[key] = out.get(key, ring.domain.zero) + (-coeff if negate else coeff)
        return PolyS(ring.from_dict({k: v for k, v in out.items() if v}))

    def compose(self, images: Sequence[PolyS]) -> PolyS:
        """Substitute variable i ↦ images[i]; all images share one ring."""
        if len(images) != self.rank:
            raise RankMismatchError(f"{len(images)} images for {self.rank} variables")
        names = images[0].names
        result = PolyS.zero(names=names)
        for monom, coeff in self._p.items():
            term = PolyS.constant(coeff, names=names)
            for image, e in zip(images, monom):
                if e:
                    term = term * image ** e
            result = result + term
        return result

    def act(self, w: WeylElem) -> PolyS:
        """Weyl action t_i ↦ ±t_|w(i)|."""
        if len(w.window) != self.rank:
            raise RankMismatchError(f"Element of rank {len(w.window)} acting on a ring of rank {self.rank}")
        return self.relabel([(1 if a > 0 else -1, abs(a) - 1) for a in w.window])

    # --- serialization ---

    def to_text(self) -> str:
        return _format_terms(list(self._p.items()), self.names, _qq_str)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"PolyS({self.to_text()!r})"

    def to_dict(self) -> dict:
        return {
            "names": list(self.names),
            "terms": [
                {"exponents": list(m), "coeff": _qq_str(c)}
                for m, c in sorted(self._p.items(), key=lambda t: t[0], reverse=True)
            ],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> PolyS:
        return cls.from_terms(
            {tuple(t["exponents"]): t["coeff"] for t in data["terms"]},
            names=data["names"],
        )

    @classmethod
    def from_json(cls, json_str: str) -> PolyS:
        return cls.from_dict(json.loads(json_str))


class LaurentR:
    """
    An element of R(T) = Z[x1^±1..xn^±1], the group algebra of the character lattice.

    Stored as x^shift · num with num an integer polynomial divisible by no
    variable, so exact division reduces to polynomial division.
    """

    __slots__ = ("_shift", "_num")

    def __init__(self, shift: Exponents, num: PolyElement):
        self._shift = tuple(shift)
        self._num = num

    @staticmethod
    def _names(n: int | None, names: Sequence[str] | None) -> tuple[str, ...]:
        if names is not None:
            return tuple(names)
        if n is None:
            raise RankMismatchError("Either a rank or variable names are required")
        return variable_names(n, "x")

    @classmethod
    def _normalized(cls, shift: Sequence[int], num: PolyElement) -> LaurentR:
        n = num.ring.ngens
        if not num:
            return cls((0,) * n, num)
        low = [min(m[i] for m in num.keys()) for i in range(n)]
        if any(low):
            num = num.ring.from_dict({tuple(e - l for e, l in zip(m, low)): c for m, c in num.items()})
            shift = tuple(s + l for s, l in zip(shift, low))
        return cls(tuple(shift), num)

    @classmethod
    def from_terms(
        cls,
        terms: Mapping[Exponents, Any],
        n: int | None = None,
        names: Sequence[str] | None = None,
    ) -> LaurentR:
        ring = poly_ring(cls._names(n, names), ZZ)
        terms = {tuple(int(e) for e in m): int(c) for m, c in terms.items() if c}
        for m in terms:
            if len(m) != ring.ngens:
                raise InputError(f"Bad exponent vector {m} for {ring.ngens} variables")
        if not terms:
            return cls((0,) * ring.ngens, ring.zero)
        low = tuple(min(m[i] for m in terms) for i in range(ring.ngens))
        num = ring.from_dict({tuple(e - l for e, l in zip(m, low)): c for m, c in terms.items()})
        return cls(low, num)

    @classmethod
    def zero(cls, n: int | None = None, names: Sequence[str] | None = None) -> LaurentR:
        return cls.from_terms({}, n, names)

    @classmethod
    def one(cls, n: int | None = None, names: Sequence[str] | None = None) -> LaurentR:
        names = cls._names(n, names)
        return cls.from_terms({(0,) * len(names): 1}, names=names)

    @classmethod
    def constant(cls, value: int, n: int | None = None, names: Sequence[str] | None = None) -> LaurentR:
        names = cls._names(n, names)
        return cls.from_terms({(0,) * len(names): value}, names=names)

    @classmethod
    def monomial(cls, exps: Sequence[int], names: Sequence[str] | None = None) -> LaurentR:
        return cls.from_terms({tuple(exps): 1}, n=len(exps), names=names)

    @classmethod
    def one_minus(cls, form: LinearForm, names: Sequence[str] | None = None) -> LaurentR:
        """The class 1 − x^α."""
        names = cls._names(form.rank, names)
        zero = (0,) * form.rank
        if form.is_zero:
            return cls.zero(names=names)
        return cls.from_terms({zero: 1, form.coeffs: -1}, names=names)

    @classmethod
    def from_text(cls, text: str, n: int | None = None, names: Sequence[str] | None = None) -> LaurentR:
        names = cls._names(n, names)
        terms = _parse_terms(text, names)
        for coeff in terms.values():
            if not coeff.is_Integer:
                raise InputError(f"Non-integral coefficient {coeff} in {text!r}")
        return cls.from_terms({m: int(c) for m, c in terms.items()}, names=names)

    # --- queries ---

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(str(s) for s in self._num.ring.symbols)

    @property
    def rank(self) -> int:
        return self._num.ring.ngens

    @property
    def terms(self) -> dict[Exponents, int]:
        return {tuple(e + s for e, s in zip(m, self._shift)): int(c) for m, c in self._num.items()}

    @property
    def is_zero(self) -> bool:
        return not self._num

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.rank, 0)

    # --- arithmetic ---

    def _coerce(self, other: Any) -> LaurentR | Any:
        if isinstance(other, LaurentR):
            if other._num.ring is not self._num.ring:
                raise RankMismatchError(f"Laurent polynomials over {self.names} and {other.names}")
            return other
        if isinstance(other, int):
            return LaurentR.constant(other, names=self.names)
        return NotImplemented

    def __add__(self, other: Any) -> LaurentR:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        merged = self.terms
        for m, c in other.terms.items():
            merged[m] = merged.get(m, 0) + c
        return LaurentR.from_terms(merged, names=self.names)

    __radd__ = __add__

    def __neg__(self) -> LaurentR:
        return LaurentR(self._shift, -self._num)

    def __sub__(self, other: Any) -> LaurentR:
        other = self._coerce(other)
        return other if other is NotImplemented else self + (-other)

    def __rsub__(self, other: Any) -> LaurentR:
        other = self._coerce(other)
        return other if other is NotImplemented else other + (-self)

    def __mul__(self, other: Any) -> LaurentR:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        shift = tuple(a + b for a, b in zip(self._shift, other._shift))
        return LaurentR._normalized(shift, self._num * other._num)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentR:
        if k < 0:
            raise ValueError("Negative powers are only defined for monomials")
        result = LaurentR.one(names=self.names)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, int):
            other = LaurentR.constant(other, names=self.names)
        if not isinstance(other, LaurentR):
            return NotImplemented
        if other._num.ring is not self._num.ring:
            return False
        if not self._num or not other._num:
            return not self._num and not other._num
        return self._shift == other._shift and dict.__eq__(self._num, other._num)

    def __hash__(self) -> int:
        return hash((self.names, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self._num)

    def exact_div(self, divisor: LaurentR) -> LaurentR:
        divisor = self._coerce(divisor)
        if not divisor._num:
            raise ZeroDivisionError("Division by the zero Laurent polynomial")
        if not self._num:
            return self
        try:
            quotient = self._num.exquo(divisor._num)
        except ExactQuotientFailed:
            raise NotDivisibleError(f"{self} is not divisible by {divisor}")
        shift = tuple(a - b for a, b in zip(self._shift, divisor._shift))
        return LaurentR._normalized(shift, quotient)

    def exact_div_one_minus(self, form: LinearForm) -> LaurentR:
        if form.is_zero:
            raise ZeroDivisionError("1 − x^0 is zero")
        if form.rank != self.rank:
            raise RankMismatchError(f"Form of rank {form.rank} against a ring of rank {self.rank}")
        return self.exact_div(LaurentR.one_minus(form, self.names))

    # --- substitution ---

    def relabel(self, images: Sequence[SignedIndex], names: Sequence[str] | None = None) -> LaurentR:
        """Ring map x^{t_i} ↦ x^{sign·t_target}, images[i] = (sign, target)."""
        if len(images) != self.rank:
            raise RankMismatchError(f"{len(images)} images for {self.rank} variables")
        names = tuple(names) if names else self.names
        out: dict[Exponents, int] = {}
        for monom, coeff in self.terms.items():
            exps = [0] * len(names)
            for e, (sign, target) in zip(monom, images):
                exps[target] += sign * e
            key = tuple(exps)
            out[key] = out.get(key, 0) + coeff
        return LaurentR.from_terms(out, names=names)

    def act(self, w: WeylElem) -> LaurentR:
        if len(w.window) != self.rank:
            raise RankMismatchError(f"Element of rank {len(w.window)} acting on a ring of rank {self.rank}")
        return self.relabel([(1 if a > 0 else -1, abs(a) - 1) for a in w.window])

    def truncate(self, degree: int) -> PolyS:
        """Chern character truncated at `degree`: x^λ ↦ Σ_{k≤degree} λ^k/k!."""
        if degree < 0:
            raise ValueError("Truncation degree must be nonnegative")
        names = cohomology_names(self.names)
        result = PolyS.zero(names=names)
        for exps, coeff in self.terms.items():
            lam = LinearForm(exps).to_poly(names)
            power = PolyS.one(names=names)
            series = PolyS.one(names=names)
            for k in range(1, degree + 1):
                power = power * lam
                series = series + power * Fraction(1, math.factorial(k))
            result = result + series * coeff
        return result

    # --- serialization ---

    def to_text(self) -> str:
        return _format_terms(list(self.terms.items()), self.names, str)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentR({self.to_text()!r})"

    def to_dict(self) -> dict:
        return {
            "names": list(self.names),
            "terms": [
                {"exponents": list(m), "coeff": str(c)}
                for m, c in sorted(self.terms.items(), reverse=True)
            ],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> LaurentR:
        return cls.from_terms(
            {tuple(t["exponents"]): int(t["coeff"]) for t in data["terms"]},
            names=data["names"],
        )

    @classmethod
    def from_json(cls, json_str: str) -> LaurentR:
        return cls.from_dict(json.loads(json_str))


def cohomology_names(names: Iterable[str]) -> tuple[str, ...]:
    """Variable names of the cohomology ring matching a K-theory ring (x_i ↦ t_i)."""
    return tuple(f"t{name[1:]}" if name.startswith("x") else name for name in names)


# --- module-level operations ---

def poly_mul(p: PolyS, q: PolyS) -> PolyS:
    return p * q


def laurent_mul(p: LaurentR, q: LaurentR) -> LaurentR:
    return p * q


def exact_div_linear(p: PolyS, alpha: LinearForm) -> PolyS:
    return p.exact_div_linear(alpha)


def exact_div_one_minus(psi: LaurentR, alpha: LinearForm) -> LaurentR:
    return psi.exact_div_one_minus(alpha)


def weyl_subst(p: PolyS | LaurentR, w: WeylElem) -> PolyS | LaurentR:
    return p.act(w)


def truncate_to_cohomology(psi: LaurentR, degree: int) -> PolyS:
    return psi.truncate(degree)
