"""Patterns in words with repeated letters.

Core objects are plain tuples of non-negative ints; positions in
occurrences are 1-based throughout.
"""

from .algebra import concat, direct_power, direct_sum, skew_power, skew_sum
from .construction import (
    ConstructionParts,
    MonotoneReport,
    VerifyReport,
    build,
    max_monotone_of_r,
    verify,
    verify_q_lemma,
)
from .guards import GuardExceeded
from .monotone import (
    NONDECREASING,
    NONINCREASING,
    GuaranteeUnavailable,
    es_extract,
    longest_nondecreasing,
    longest_nonincreasing,
)
from .oracle import (
    check_unavoidability_balanced,
    enumerate_balanced,
    enumerate_cayley,
    max_repeats_avoiding,
)
from .patterns import (
    Direction,
    FamilyId,
    constant_pattern,
    contains_any_family,
    contains_constant,
    contains_double_run,
    contains_multiplied_monotone,
    double_run_pattern,
    family,
    family_mult,
    find_family_member,
    multiplied_monotone_pattern,
    run_pattern,
    base_pattern,
)
from .witness import InsufficientRepeats, WitnessTrace, extract_witness, validate_trace
from .words import (
    InvalidOccurrence,
    Occurrence,
    Word,
    contains,
    format_word,
    is_inversion_sequence,
    is_pattern,
    multiplicities,
    occurrences_by_value,
    parse_word,
    render_grid,
    repeats,
    reverse,
    standardise,
    subword,
)

__all__ = [
    "Word",
    "Occurrence",
    "InvalidOccurrence",
    "standardise",
    "is_pattern",
    "repeats",
    "reverse",
    "subword",
    "occurrences_by_value",
    "multiplicities",
    "contains",
    "is_inversion_sequence",
    "render_grid",
    "parse_word",
    "format_word",
    "concat",
    "direct_sum",
    "skew_sum",
    "direct_power",
    "skew_power",
    "NONDECREASING",
    "NONINCREASING",
    "GuaranteeUnavailable",
    "longest_nondecreasing",
    "longest_nonincreasing",
    "es_extract",
    "Direction",
    "FamilyId",
    "constant_pattern",
    "multiplied_monotone_pattern",
    "run_pattern",
    "double_run_pattern",
    "family",
    "family_mult",
    "contains_constant",
    "contains_multiplied_monotone",
    "contains_double_run",
    "find_family_member",
    "base_pattern",
    "contains_any_family",
    "ConstructionParts",
    "VerifyReport",
    "MonotoneReport",
    "build",
    "verify",
    "verify_q_lemma",
    "max_monotone_of_r",
    "InsufficientRepeats",
    "WitnessTrace",
    "extract_witness",
    "validate_trace",
    "GuardExceeded",
    "enumerate_cayley",
    "enumerate_balanced",
    "max_repeats_avoiding",
    "check_unavoidability_balanced",
]

__version__ = "0.1.0"
