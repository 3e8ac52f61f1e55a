"""Reduction sequences, moves and normal forms in free groups.

Words are passed as text: whitespace-separated generator names, with a
trailing apostrophe marking an inverse (``"a a' b"``).
"""

from ._core import (
    CapExceeded,
    Error,
    IncompleteReduction,
    IndexOutOfRange,
    InvalidRedex,
    MoveError,
    NoOverlap,
    NotIndependent,
    ParseError,
    ReductionSequence,
    WordMismatch,
    abelianize,
    apply_chain,
    apply_step,
    check_triviality_witness,
    drop_redex,
    enumerate_sequences,
    eq,
    extend_reduction,
    find_redexes,
    front_reduction,
    inv,
    move_graph,
    mul,
    normal_form,
    overlap_switch,
    parse_word,
    swap,
    to_dot,
    transform_to,
    validate_sequence,
)

__version__ = "0.1.0"
