"""Syllable normal forms in right-angled Artin groups, the partial order
on syllables, symbolic subsurface images, Thurston-type classification,
and quasi-isometry lower-bound certificates."""

from .defining_graph import DefiningGraph
from .errors import (
    CapExceeded,
    DanglingEdge,
    DisjointnessMismatch,
    DuplicateVertex,
    InvalidConstants,
    MoveNotApplicable,
    NestingDetected,
    NotCyclicallyReduced,
    NotFilling,
    RaagError,
    SearchBudgetExceeded,
    SelfLoop,
    ShiftMapUndefined,
    UnknownVertex,
)
from .words import (
    DEFAULT_CAP,
    Syllable,
    Word,
    apply_move,
    concatenated_power,
    empty_word,
    equal_elements,
    in_special_subgroup,
    invert,
    is_minimal,
    minimal_representatives,
    multiply,
    normalize,
    oracle_min_syllables,
    parse_word,
    power,
    word_from_pairs,
)
from .syllables import (
    SyllableId,
    SyllableOrder,
    cyclically_reduce,
    is_cyclically_reduced,
    power_shift_map,
    syllable_ids,
    syllable_order,
)
from .realization import (
    FillResult,
    Realization,
    Subsurface,
    build_standard_realization,
    fill,
    validate_realization,
)
from .subsurface_map import (
    Certificate,
    CertificateEntry,
    CheckResult,
    Constants,
    MappedSubsurface,
    check_order_embedding,
    check_representative_independence,
    default_constants,
    make_certificate,
    syllable_subsurface_map,
)
from .classification import (
    ClassificationReport,
    ComponentReport,
    classify,
    translation_length_bound,
    verify_power_properties,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CAP",
    "Certificate",
    "CertificateEntry",
    "CheckResult",
    "ClassificationReport",
    "ComponentReport",
    "Constants",
    "DefiningGraph",
    "FillResult",
    "MappedSubsurface",
    "Realization",
    "Subsurface",
    "Syllable",
    "SyllableId",
    "SyllableOrder",
    "Word",
    "apply_move",
    "build_standard_realization",
    "check_order_embedding",
    "check_representative_independence",
    "classify",
    "concatenated_power",
    "cyclically_reduce",
    "default_constants",
    "empty_word",
    "equal_elements",
    "fill",
    "in_special_subgroup",
    "invert",
    "is_cyclically_reduced",
    "is_minimal",
    "make_certificate",
    "minimal_representatives",
    "multiply",
    "normalize",
    "oracle_min_syllables",
    "parse_word",
    "power",
    "power_shift_map",
    "syllable_ids",
    "syllable_order",
    "syllable_subsurface_map",
    "translation_length_bound",
    "validate_realization",
    "verify_power_properties",
    "word_from_pairs",
    # errors
    "RaagError",
    "CapExceeded",
    "DanglingEdge",
    "DisjointnessMismatch",
    "DuplicateVertex",
    "InvalidConstants",
    "MoveNotApplicable",
    "NestingDetected",
    "NotCyclicallyReduced",
    "NotFilling",
    "SearchBudgetExceeded",
    "SelfLoop",
    "ShiftMapUndefined",
    "UnknownVertex",
]
