"""Root data and Weyl groups of types A, B, C, D."""

from patternmap.weyl.element import WeylElem, inverse, multiply
from patternmap.weyl.rootdatum import ReducedWord, RootDatum, datum_for_group, make_root_datum, parse_group

__all__ = [
    "ReducedWord", "RootDatum", "WeylElem",
    "datum_for_group", "inverse", "make_root_datum", "multiply", "parse_group",
]
