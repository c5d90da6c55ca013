"""
Weyl group elements as signed permutations in one-line (window) notation.

The window a1..an lists the images w(1)..w(n); negative entries are the
barred values of types B/C/D. Composition is (u·v)(i) = u(v(i)) with
u(−k) = −u(k), and w acts on characters by t_i ↦ sign(a_i)·t_|a_i|.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from patternmap.base.errors import DatumMismatchError, InputError
from patternmap.base.symbolic import LinearForm

_COMPACT = re.compile(r"^(\db?)+$")


@dataclass(frozen=True, order=True)
class WeylElem:
    """A signed permutation; ordering is lexicographic on the window."""
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        window = tuple(int(a) for a in self.window)
        object.__setattr__(self, "window", window)
        if sorted(abs(a) for a in window) != list(range(1, len(window) + 1)):
            raise InputError(f"{list(window)} is not a signed permutation of 1..{len(window)}")

    @classmethod
    def identity(cls, n: int) -> WeylElem:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> WeylElem:
        """
        Parse a window. Accepted forms:
          "2143"         compact, unsigned, one digit per entry
          "3,-1,4,2"     comma (or space) separated with minus signs
          "3,1b,4,2"     "b" suffix for a barred (negative) entry
          "31b42"        compact with "b" suffixes
        """
        text = text.strip()
        if not text:
            raise InputError("Empty Weyl group element")
        if _COMPACT.match(text) and "," not in text:
            tokens = re.findall(r"\db?", text)
        else:
            tokens = [tok for tok in re.split(r"[,\s]+", text) if tok]
        values = []
        for pos, tok in enumerate(tokens, start=1):
            sign = 1
            body = tok
            if body.endswith("b"):
                sign, body = -1, body[:-1]
            if body.startswith("-"):
                sign, body = -sign, body[1:]
            if not body.isdigit():
                raise InputError(f"Window {text!r}, position {pos}: {tok!r} is not a (signed) integer")
            values.append(sign * int(body))
        size = len(values)
        if n is not None and size != n:
            raise InputError(f"Window {text!r} has {size} entries, expected {n}")
        seen: set[int] = set()
        for pos, value in enumerate(values, start=1):
            if not 1 <= abs(value) <= size:
                raise InputError(f"Window {text!r}, position {pos}: |{value}| is outside 1..{size}")
            if abs(value) in seen:
                raise InputError(f"Window {text!r}, position {pos}: value {abs(value)} repeats")
            seen.add(abs(value))
        return cls(tuple(values))

    @property
    def rank(self) -> int:
        return len(self.window)

    @property
    def is_identity(self) -> bool:
        return all(a == i for i, a in enumerate(self.window, start=1))

    @property
    def negatives(self) -> frozenset[int]:
        """Positions (1-based) holding negative entries."""
        return frozenset(i for i, a in enumerate(self.window, start=1) if a < 0)

    def __call__(self, i: int) -> int:
        value = self.window[abs(i) - 1]
        return value if i > 0 else -value

    def __mul__(self, other: WeylElem) -> WeylElem:
        if not isinstance(other, WeylElem):
            return NotImplemented
        if other.rank != self.rank:
            raise DatumMismatchError(f"Cannot multiply elements of rank {self.rank} and {other.rank}")
        return WeylElem(tuple(self(b) for b in other.window))

    def inverse(self) -> WeylElem:
        inv = [0] * self.rank
        for i, a in enumerate(self.window, start=1):
            inv[abs(a) - 1] = i if a > 0 else -i
        return WeylElem(tuple(inv))

    def act(self, form: LinearForm) -> LinearForm:
        """w.λ, with t_i ↦ sign(a_i)·t_|a_i|."""
        if form.rank != self.rank:
            raise DatumMismatchError(f"Element of rank {self.rank} acting on a form of rank {form.rank}")
        out = [0] * self.rank
        for c, a in zip(form.coeffs, self.window):
            out[abs(a) - 1] += c if a > 0 else -c
        return LinearForm(tuple(out))

    def __str__(self) -> str:
        if self.rank <= 9 and not self.negatives:
            return "".join(str(a) for a in self.window)
        return ",".join(str(a) for a in self.window)

    def __repr__(self) -> str:
        return f"WeylElem({self})"


def multiply(u: WeylElem, v: WeylElem) -> WeylElem:
    return u * v


def inverse(w: WeylElem) -> WeylElem:
    return w.inverse()
