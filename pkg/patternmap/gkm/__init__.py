"""GKM (localized) classes in equivariant cohomology and K-theory of G/B."""

from patternmap.gkm.classes import (
    CLASS_TYPES,
    GKMCheck,
    GKMClass,
    GKMClassK,
    GKMClassS,
    SchubertExpansion,
    expand_triangular,
)
from patternmap.gkm.cohomology import (
    billey_localize,
    billey_subword_value,
    check_gkm_coh,
    divided_difference_pointwise,
    expand_in_schubert_coh,
    integrate_coh,
    opposite_class_coh,
    schubert_class,
    structure_constants_coh,
    structure_constants_coh_by_pushforward,
)
from patternmap.gkm.ktheory import (
    check_gkm_K,
    demazure_pointwise,
    expand_in_schubert_K,
    ideal_sheaf_class,
    integrate_K,
    k_localize,
    opposite_class_K,
    structure_constants_K,
    structure_constants_K_by_pushforward,
    structure_sheaf_class,
    top_class_K,
)
from patternmap.gkm.positivity import agm_positive, express_in_simple_roots, graham_positive

__all__ = [
    "CLASS_TYPES", "GKMCheck", "GKMClass", "GKMClassK", "GKMClassS", "SchubertExpansion",
    "agm_positive", "billey_localize", "billey_subword_value", "check_gkm_K", "check_gkm_coh",
    "demazure_pointwise", "divided_difference_pointwise", "expand_in_schubert_K",
    "expand_in_schubert_coh", "expand_triangular", "express_in_simple_roots", "graham_positive",
    "ideal_sheaf_class", "integrate_K", "integrate_coh", "k_localize", "opposite_class_K",
    "opposite_class_coh", "schubert_class", "structure_constants_K",
    "structure_constants_K_by_pushforward", "structure_constants_coh",
    "structure_constants_coh_by_pushforward", "structure_sheaf_class", "top_class_K",
]
