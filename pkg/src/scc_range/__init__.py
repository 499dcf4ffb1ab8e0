"""Range computations for social choice correspondences.

Rules, constructive witness profiles, and an exhaustive oracle over small
profile spaces.
"""

from .core import (
    ChoiceSet,
    MajorityMatrix,
    Ordering,
    Profile,
    ProfileError,
    ProfileFormatError,
    canonical_key,
    codec_emit,
    codec_parse,
    inverse_ordering,
    majority_matrix,
    make_profile,
    rank_of,
    relabel_alternatives,
    top_k,
)
from .rules import RULES, evaluate

__version__ = "0.1.0"
