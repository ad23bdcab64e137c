"""Palindromic richness of finite words."""

from .complexity import (
    ComplexityProfile,
    WindowError,
    WindowSpec,
    complexity_profile,
    factor_complexity,
    palindromic_complexity,
    prop2_residual,
)
from .eertree import Eertree, EertreeNode, LpsTrace, distinct_palindromes, lps_trace
from .generators import (
    Morphism,
    MorphismError,
    fibonacci_word,
    kleene_staircase,
    morphic_prefix,
    periodic_prefix,
    psi_of_fibonacci,
)
from .richness import (
    CharacterizationMatrix,
    CompleteReturn,
    Condition,
    RichnessReport,
    analyze,
    characterization_matrix,
    check_condition,
    complete_returns,
    is_rich,
)
from .words import (
    Alphabet,
    AlphabetError,
    is_palindrome,
    longest_palindromic_prefix,
    longest_palindromic_suffix,
    occurrences,
    reverse,
)

__version__ = "0.1.0"
