"""
Root data for the classical types and the Weyl group combinatorics built on them.

A RootDatum is nothing more than a rank n (the number of torus coordinates),
a list of positive roots and an ordered list of labelled simple roots. Every
group-theoretic query (length, descents, reduced words, Bruhat order,
enumeration) is computed from those roots alone, so the same class also
serves the reflection subgroups W′ ⊂ W cut out by a cocharacter: their
elements are ambient WeylElems, their roots a subset of the ambient ones.

Simple root labels:
    A_{n-1}  1..n-1   α_i = t_{i+1} − t_i
    B_n      0, 1..n-1  α_0 = t_1
    C_n      0, 1..n-1  α_0 = 2t_1
    D_n      0, 1..n-1  α_0 = t_1 + t_2
"""

from __future__ import annotations

import logging
import re
from collections import Counter, deque
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from patternmap.base.errors import DatumMismatchError, InputError, NotARootError, UnsupportedTypeError
from patternmap.base.symbolic import LinearForm
from patternmap.weyl.element import WeylElem

logger = logging.getLogger("patternmap.weyl")

ReducedWord = tuple[int, ...]

SUPPORTED_TYPES = ("A", "B", "C", "D")


class RootDatum:
    """
    Positive and simple roots in the character lattice Z^n, plus the Weyl group they generate.

    Instances hash by identity; make_root_datum caches one instance per (type, n).
    """

    def __init__(
        self,
        label: str,
        rank: int,
        positive_roots: Sequence[LinearForm],
        simple_roots: Sequence[LinearForm],
        simple_labels: Sequence[int] | None = None,
        family: str | None = None,
    ):
        self.label = label
        self.rank = rank
        self.family = family
        self.positive_roots = tuple(positive_roots)
        self.simple_roots = tuple(simple_roots)
        self.simple_labels = tuple(simple_labels) if simple_labels is not None else tuple(range(1, len(simple_roots) + 1))
        if len(self.simple_labels) != len(self.simple_roots):
            raise ValueError("Each simple root needs exactly one label")
        for root in self.positive_roots:
            if root.rank != rank:
                raise DatumMismatchError(f"Root {root} does not have rank {rank}")
        self._positive = frozenset(r.coeffs for r in self.positive_roots)
        self._simple = dict(zip(self.simple_labels, self.simple_roots))
        self.length = lru_cache(maxsize=None)(self._length)
        self.bruhat_leq = lru_cache(maxsize=None)(self._bruhat_leq)

    def __repr__(self) -> str:
        return f"RootDatum({self.label}, rank={self.rank})"

    # --- roots ---

    def is_positive(self, form: LinearForm) -> bool:
        return form.coeffs in self._positive

    def is_root(self, form: LinearForm) -> bool:
        return form.coeffs in self._positive or (-form).coeffs in self._positive

    def simple_root(self, label: int) -> LinearForm:
        try:
            return self._simple[label]
        except KeyError:
            raise InputError(f"{self.label} has no simple root labelled {label}; labels are {list(self.simple_labels)}")

    def positive_part(self, form: LinearForm) -> LinearForm:
        """The positive root among ±form."""
        if not self.is_root(form):
            raise NotARootError(f"{form} is not a root of {self.label}")
        return form if self.is_positive(form) else -form

    def cartan_matrix(self) -> list[list[int]]:
        """Entries ⟨α_i, α_j^∨⟩ = 2(α_i, α_j)/(α_j, α_j) in simple-label order."""
        roots = self.simple_roots
        return [[2 * a.dot(b) // b.dot(b) for b in roots] for a in roots]

    # --- elements ---

    @cached_property
    def identity(self) -> WeylElem:
        return WeylElem.identity(self.rank)

    @cached_property
    def simple_reflections(self) -> dict[int, WeylElem]:
        return {label: self.reflection(root) for label, root in self._simple.items()}

    def simple_reflection(self, label: int) -> WeylElem:
        self.simple_root(label)
        return self.simple_reflections[label]

    @cached_property
    def reflections(self) -> dict[LinearForm, WeylElem]:
        """s_β for every positive root β."""
        return {root: self.reflection(root) for root in self.positive_roots}

    def reflection(self, alpha: LinearForm) -> WeylElem:
        """s_α: λ ↦ λ − 2(λ, α)/(α, α)·α, read off on the basis t_1..t_n."""
        if alpha.rank != self.rank:
            raise DatumMismatchError(f"Form of rank {alpha.rank} in a datum of rank {self.rank}")
        if not self.is_root(alpha):
            raise NotARootError(f"{alpha} is not a root of {self.label}")
        norm = alpha.dot(alpha)
        window = []
        for i in range(self.rank):
            scale = Fraction(2 * alpha.coeffs[i], norm)
            image = [(1 if k == i else 0) - scale * alpha.coeffs[k] for k in range(self.rank)]
            support = [k for k, c in enumerate(image) if c != 0]
            if len(support) != 1 or abs(image[support[0]]) != 1:
                raise NotARootError(f"Reflection in {alpha} does not permute the coordinates")
            k = support[0]
            window.append(k + 1 if image[k] > 0 else -(k + 1))
        return WeylElem(tuple(window))

    def _bfs(self) -> list[WeylElem]:
        seen = {self.identity}
        queue = deque([self.identity])
        gens = list(self.simple_reflections.values())
        while queue:
            w = queue.popleft()
            for s in gens:
                ws = w * s
                if ws not in seen:
                    seen.add(ws)
                    queue.append(ws)
        return sorted(seen, key=self.sort_key)

    @cached_property
    def _elements(self) -> tuple[WeylElem, ...]:
        elements = tuple(self._bfs())
        logger.debug(f"Enumerated {len(elements)} elements of {self.label}")
        return elements

    @cached_property
    def _element_set(self) -> frozenset[WeylElem]:
        return frozenset(self._elements)

    def elements(self) -> tuple[WeylElem, ...]:
        """All of W, sorted by (length, window)."""
        return self._elements

    def enumerate(self) -> tuple[WeylElem, ...]:
        return self._elements

    @property
    def order(self) -> int:
        return len(self._elements)

    def sort_key(self, w: WeylElem) -> tuple[int, tuple[int, ...]]:
        return (self.length(w), w.window)

    def __contains__(self, w: object) -> bool:
        return isinstance(w, WeylElem) and w.rank == self.rank and w in self._element_set

    def check(self, w: WeylElem) -> WeylElem:
        """Return w if it belongs to this group, raise otherwise."""
        if w.rank != self.rank:
            raise DatumMismatchError(f"{w} has rank {w.rank}, {self.label} has rank {self.rank}")
        if w not in self._element_set:
            raise InputError(f"{w} is not an element of the Weyl group of {self.label}")
        return w

    def parse_element(self, text: str) -> WeylElem:
        return self.check(WeylElem.parse(text, self.rank))

    def multiply(self, u: WeylElem, v: WeylElem) -> WeylElem:
        return self.check(u) * self.check(v)

    @cached_property
    def longest_element(self) -> WeylElem:
        return self._elements[-1]

    # --- length, descents, words ---

    def _length(self, w: WeylElem) -> int:
        return sum(1 for beta in self.positive_roots if not self.is_positive(w.act(beta)))

    def inversions(self, w: WeylElem) -> list[LinearForm]:
        """Positive roots β with w.β negative."""
        return [beta for beta in self.positive_roots if not self.is_positive(w.act(beta))]

    def right_descents(self, w: WeylElem) -> list[int]:
        """Labels i with ℓ(w s_i) < ℓ(w)."""
        return [i for i, a in self._simple.items() if not self.is_positive(w.act(a))]

    def left_descents(self, w: WeylElem) -> list[int]:
        """Labels i with ℓ(s_i w) < ℓ(w)."""
        winv = w.inverse()
        return [i for i, a in self._simple.items() if not self.is_positive(winv.act(a))]

    def reduced_word(self, w: WeylElem) -> ReducedWord:
        """Lexicographically smallest reduced word (leftmost-descent greedy)."""
        word = []
        while not w.is_identity:
            i = min(self.left_descents(w))
            word.append(i)
            w = self.simple_reflections[i] * w
        return tuple(word)

    def from_word(self, word: Sequence[int]) -> WeylElem:
        w = self.identity
        for i in word:
            w = w * self.simple_reflection(i)
        return w

    def length_distribution(self) -> list[int]:
        """Number of elements of each length 0..ℓ(w0)."""
        counts = Counter(self.length(w) for w in self._elements)
        return [counts[k] for k in range(max(counts) + 1)]

    # --- Bruhat order ---

    def _bruhat_leq(self, v: WeylElem, w: WeylElem) -> bool:
        if v.is_identity:
            return True
        if self.length(v) >= self.length(w):
            return v == w
        i = min(self.right_descents(w))
        s = self.simple_reflections[i]
        if i in self.right_descents(v):
            return self.bruhat_leq(v * s, w * s)
        return self.bruhat_leq(v, w * s)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "rank": self.rank,
            "positive_roots": [list(r.coeffs) for r in self.positive_roots],
            "simple_roots": {str(k): list(r.coeffs) for k, r in self._simple.items()},
        }


def _type_a_roots(n: int) -> list[LinearForm]:
    return [LinearForm.difference(i, j, n) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def _sum_roots(n: int) -> list[LinearForm]:
    return [LinearForm.basis(i, n) + LinearForm.basis(j, n) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


@lru_cache(maxsize=None)
def make_root_datum(type_label: str, n: int) -> RootDatum:
    """
    Root datum of type A_{n−1}, B_n, C_n or D_n on the torus of rank n.

    Raises UnsupportedTypeError for other letters or ranks.
    """
    family = type_label.upper()
    if family not in SUPPORTED_TYPES:
        raise UnsupportedTypeError(f"Unsupported root system type {type_label!r}; expected one of {SUPPORTED_TYPES}")
    if n < 1 or (family == "D" and n < 2):
        raise UnsupportedTypeError(f"Rank {n} is too small for type {family}")

    type_a = _type_a_roots(n)
    simple = [LinearForm.difference(i, i + 1, n) for i in range(1, n)]
    labels = list(range(1, n))
    if family == "A":
        return RootDatum(f"A{n - 1}", n, type_a, simple, labels, family)

    if family == "B":
        extra = [LinearForm.basis(i, n) for i in range(1, n + 1)]
        first = LinearForm.basis(1, n)
    elif family == "C":
        extra = [2 * LinearForm.basis(i, n) for i in range(1, n + 1)]
        first = 2 * LinearForm.basis(1, n)
    else:
        extra = []
        first = LinearForm.basis(1, n) + LinearForm.basis(2, n)
    positive = type_a + _sum_roots(n) + extra
    return RootDatum(f"{family}{n}", n, positive, [first] + simple, [0] + labels, family)


_GROUP = re.compile(r"^\s*([A-Za-z])\s*(\d+)\s*$")


def parse_group(spec: str) -> tuple[str, int]:
    """
    Parse "A3", "C4", ... into (type, torus rank). A_k acts on k+1 coordinates.
    """
    match = _GROUP.match(spec)
    if not match:
        raise InputError(f"Cannot parse group {spec!r}; expected a type letter and a rank, e.g. A3 or C4")
    family, k = match.group(1).upper(), int(match.group(2))
    if family not in SUPPORTED_TYPES:
        raise UnsupportedTypeError(f"Unsupported root system type {family!r} in {spec!r}; expected one of {SUPPORTED_TYPES}")
    if k < 1:
        raise UnsupportedTypeError(f"Rank must be at least 1 in {spec!r}")
    return family, (k + 1 if family == "A" else k)


def datum_for_group(spec: str) -> RootDatum:
    return make_root_datum(*parse_group(spec))
