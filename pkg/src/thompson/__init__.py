"""Thompson's groups F < T < V as prefix substitution maps on Cantor space."""

from .addresses import (
    circular_neighbors,
    is_complete_antichain,
    join,
    lex_compare,
    prefix_relation,
    split,
)
from .elements import (
    IDENTITY,
    Element,
    apply_to_address,
    commutator,
    compose,
    conjugate,
    cycle,
    equals,
    identity,
    invert,
    is_small_support,
    make_element,
    reduce,
    support_cones,
    swap,
)
from .structure import (
    ConePermutation,
    CycleDecomposition,
    canonicalize_interleaved_swap,
    common_tree_form,
    cycle_decomposition,
    in_F,
    in_T,
    interleave,
    is_interleaved,
    order_of,
    rotation,
    shape_in_T,
)
from .genmax import (
    Certificate,
    double_coset_invariant,
    express_via_swap_and_T,
    express_via_three_cycle_and_T,
    maximality_certificate,
    swap_decompose,
    verify_certificate,
)
from .notation import parse_element, print_element
from .randgen import random_element

__version__ = "0.1.0"

__all__ = [
    "circular_neighbors",
    "is_complete_antichain",
    "join",
    "lex_compare",
    "prefix_relation",
    "split",
    "IDENTITY",
    "Element",
    "apply_to_address",
    "commutator",
    "compose",
    "conjugate",
    "cycle",
    "equals",
    "identity",
    "invert",
    "is_small_support",
    "make_element",
    "reduce",
    "support_cones",
    "swap",
    "ConePermutation",
    "CycleDecomposition",
    "canonicalize_interleaved_swap",
    "common_tree_form",
    "cycle_decomposition",
    "in_F",
    "in_T",
    "interleave",
    "is_interleaved",
    "order_of",
    "rotation",
    "shape_in_T",
    "Certificate",
    "double_coset_invariant",
    "express_via_swap_and_T",
    "express_via_three_cycle_and_T",
    "maximality_certificate",
    "swap_decompose",
    "verify_certificate",
    "parse_element",
    "print_element",
    "random_element",
]
