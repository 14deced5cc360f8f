"""Minimax words and infimax sequences in the lexicographic order.

Exact-arithmetic tools for the smallest maximal words and sequences with
given letter proportions on ``k`` letters, the continued-fraction map ``K``
that drives them, and the regular/exceptional classification of itineraries.
"""

from .finite import (
    CapExceeded,
    brute_force_minimax,
    khat_step,
    khat_step_inverse,
    min_periodic,
    minimax_tower,
    minimax_word,
)
from .infimax import (
    almost_period_witness,
    check_lower_bound,
    closure_witness,
    infimax_prefix,
)
from .itinerary import Itinerary, ItineraryExhausted, itinerary_compare, parse_itinerary
from .regularity import (
    BoundaryPointError,
    birkhoff_tau,
    check_non_expansion,
    classify,
    cross_ratio_d,
    exceptional_itinerary,
    hilbert_ratio,
    separation_delta,
    vertex_images,
)
from .simplex import (
    DegeneratePoint,
    RationalPoint,
    branch_index,
    itinerary,
    point_from_finite_itinerary,
    reduce_dimension,
    step,
    step_inverse,
    zero_component_profile,
)
from .substitutions import (
    Substitution,
    abelian_matrix,
    apply,
    compose,
    compose_tower,
    lambda_sub,
    tower_matrix,
    tower_prefix,
)
from .words import (
    AlphabetMismatch,
    Word,
    is_maximal_word,
    reverse_alphabet,
    rho,
    run_length_blocks,
    sup_orbit_prefix,
    word_compare,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
