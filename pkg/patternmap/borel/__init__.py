"""Type-A Borel presentation: double Schubert and Grothendieck representatives."""

from patternmap.borel.presentation import (
    borel_relations,
    eval_borel,
    expand_pullback_via_borel,
    localize_representative,
    pullback_borel,
)
from patternmap.borel.representatives import DoublePoly, double_grothendieck, double_schubert, representative

__all__ = [
    "DoublePoly", "borel_relations", "double_grothendieck", "double_schubert", "eval_borel",
    "expand_pullback_via_borel", "localize_representative", "pullback_borel", "representative",
]
