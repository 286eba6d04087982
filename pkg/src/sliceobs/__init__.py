"""Exact abelian slice obstructions computed from Seifert matrices."""

from .alexander_module import (
    BlanchfieldPairing,
    RationalAlexanderModule,
    Submodule,
    bl_pair,
    blanchfield_gram,
    build_module,
    enumerate_submodules,
    metabolisers,
    orthogonal_complement,
    radical,
    unique_metaboliser_containing,
)
from .branched_cover import (
    CoverPresentation,
    LinkingForm,
    cover_homology,
    cover_order_resultant,
    cover_presentation,
    deck_image,
    double_cover_linking_form,
    invariant_subgroup_check,
    is_z2_homology_sphere,
    lifted_generator,
    linking_metabolisers,
)
from .errors import (
    InvalidInputError,
    NotSeifertMatrixError,
    SingularMatrixError,
    SliceObsError,
    UnsupportedComputationError,
    VerificationError,
)
from .exact import AbelianGroup, LaurentPolynomial, RationalFunction, RationalFunctionClass
from .family import ObstructionReport, family_expected, family_seifert, obstruction_report
from .seifert import (
    SeifertMatrix,
    alexander_polynomial,
    classical_invariants,
    random_seifert,
    validate_seifert,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup", "BlanchfieldPairing", "CoverPresentation", "InvalidInputError",
    "LaurentPolynomial", "LinkingForm", "NotSeifertMatrixError", "ObstructionReport",
    "RationalAlexanderModule", "RationalFunction", "RationalFunctionClass", "SeifertMatrix",
    "SingularMatrixError", "SliceObsError", "Submodule", "UnsupportedComputationError",
    "VerificationError", "alexander_polynomial", "bl_pair", "blanchfield_gram",
    "build_module", "classical_invariants", "cover_homology", "cover_order_resultant",
    "cover_presentation", "deck_image", "double_cover_linking_form", "enumerate_submodules",
    "family_expected", "family_seifert", "invariant_subgroup_check", "is_z2_homology_sphere",
    "lifted_generator", "linking_metabolisers", "metabolisers", "obstruction_report",
    "orthogonal_complement", "radical", "random_seifert", "unique_metaboliser_containing",
    "validate_seifert",
]
