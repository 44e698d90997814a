"""Exact-integer divisor-class arithmetic on blown-up rational surfaces,
with a bounded adjunction-based classification search for polarized
surfaces of prescribed degree and sectional genus, a decomposition-based
elimination engine, and verification suites for the associated
construction scenarios."""

from .picard import (
    DivisorClass,
    ModelMismatchError,
    SurfaceModel,
    arithmetic_genus,
    canonical,
    degree,
    euler_char,
    hirzebruch_blowup,
    intersect,
    invariants,
    plane_blowup,
    sectional_genus,
    signed_str,
)
from .typelang import (
    Affine,
    ConversionError,
    TypeExpr,
    TypeSyntaxError,
    canonical_key,
    from_divisor,
    parse,
    render,
    to_divisor,
)
from .adjunction import (
    AdjunctionSequence,
    AdjunctionStep,
    LeavesFamilyError,
    adjoin,
    hodge_upper_bound,
    nondegeneracy_lower_bound,
    reverse_adjoin,
    sequence,
)
from .classifier import classify, enumerate_k_sequences
from .eliminator import align, base_change_f0_to_p2, eliminate_row, run_table
from .verifier import verify_construction, verify_lifting_1, verify_lifting_2

__version__ = "0.1.0"

__all__ = [
    "Affine",
    "AdjunctionSequence",
    "AdjunctionStep",
    "ConversionError",
    "DivisorClass",
    "LeavesFamilyError",
    "ModelMismatchError",
    "SurfaceModel",
    "TypeExpr",
    "TypeSyntaxError",
    "adjoin",
    "align",
    "arithmetic_genus",
    "base_change_f0_to_p2",
    "canonical",
    "canonical_key",
    "classify",
    "degree",
    "eliminate_row",
    "enumerate_k_sequences",
    "euler_char",
    "from_divisor",
    "hirzebruch_blowup",
    "hodge_upper_bound",
    "intersect",
    "invariants",
    "nondegeneracy_lower_bound",
    "parse",
    "plane_blowup",
    "render",
    "reverse_adjoin",
    "run_table",
    "sectional_genus",
    "sequence",
    "signed_str",
    "to_divisor",
    "verify_construction",
    "verify_lifting_1",
    "verify_lifting_2",
]
