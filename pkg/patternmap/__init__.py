"""
patternmap: equivariant Schubert calculus on G/B by GKM localization, and
the pullback of Schubert classes to the components of a torus-fixed locus.

Subpackages:
  base     symbolic rings, errors, logging, settings
  weyl     signed-permutation Weyl groups of types A, B, C, D
  gkm      localized classes in cohomology and K-theory
  pattern  Levi data from a cocharacter and the pattern-map pullback
  borel    type-A double Schubert and Grothendieck representatives
  cli      the `patternmap` command
"""

__version__ = "0.1.0"
