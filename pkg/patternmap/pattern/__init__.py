"""Levi data from a cocharacter and the pattern-map pullback."""

from patternmap.pattern.levi import (
    Coset,
    FlattenResult,
    LeviDatum,
    LeviFactor,
    flatten,
    levi_from_cocharacter,
    min_coset_reps,
    parse_eta,
)
from patternmap.pattern.pullback import (
    pullback_localized,
    pullback_schubert,
    pullback_schubert_coh,
    pullback_schubert_K,
    pushforward_pairing,
    restrict_constants,
)
from patternmap.pattern.skeleton import Skeleton, SkeletonEdge, skeleton_export

__all__ = [
    "Coset", "FlattenResult", "LeviDatum", "LeviFactor", "Skeleton", "SkeletonEdge",
    "flatten", "levi_from_cocharacter", "min_coset_reps", "parse_eta", "pullback_localized",
    "pullback_schubert", "pullback_schubert_K", "pullback_schubert_coh", "pushforward_pairing",
    "restrict_constants", "skeleton_export",
]
