"""Exact Groebner-basis and straightening-law toolkit for ideals of
entries of a matrix-vector product X*Y.

The layers, bottom up: poly_core (ring contexts, block monomial order,
sparse exact arithmetic), groebner (division, Buchberger, certificates,
initial ideals), matrix_ideal (patterned X and the generators of the
entry ideal), poset (finite partial orders), asl (the variable poset,
standard monomials, straightening, bounded-degree axiom checks), cli.
"""

from .asl import (
    NonStandardExpansionError,
    POSET_NOTE,
    StraighteningRelation,
    build_poset,
    chain_factors,
    count_standard_monomials,
    expected_incomparable_pairs,
    incomparable_pairs,
    is_standard_monomial,
    monomials_of_degree,
    straighten,
    verify_axiom1,
    verify_axiom2,
)
from .groebner import (
    GeneratorSet,
    GroebnerCertificate,
    InitialIdeal,
    NotGroebnerError,
    SPairRecord,
    buchberger,
    divide,
    initial_ideal,
    interreduce,
    is_groebner,
    is_normal_monomial,
    reduce,
    s_polynomial,
)
from .matrix_ideal import (
    MatrixPattern,
    SymbolicMatrix,
    SymbolicVector,
    build_matrices,
    matrix_product_ideal,
    product_generators,
)
from .poly_core import (
    CoefficientField,
    ContextMismatchError,
    FpElement,
    Monomial,
    MonomialOrder,
    Polynomial,
    RingContext,
    Variable,
    ZeroPolynomialError,
    build_order,
    polynomial_from_json,
    variable_from_name,
)
from .poset import Poset

__all__ = [
    "CoefficientField",
    "ContextMismatchError",
    "FpElement",
    "GeneratorSet",
    "GroebnerCertificate",
    "InitialIdeal",
    "MatrixPattern",
    "Monomial",
    "MonomialOrder",
    "NonStandardExpansionError",
    "NotGroebnerError",
    "POSET_NOTE",
    "Polynomial",
    "Poset",
    "RingContext",
    "SPairRecord",
    "StraighteningRelation",
    "SymbolicMatrix",
    "SymbolicVector",
    "Variable",
    "ZeroPolynomialError",
    "buchberger",
    "build_matrices",
    "build_order",
    "build_poset",
    "chain_factors",
    "count_standard_monomials",
    "divide",
    "expected_incomparable_pairs",
    "incomparable_pairs",
    "initial_ideal",
    "interreduce",
    "is_groebner",
    "is_normal_monomial",
    "is_standard_monomial",
    "matrix_product_ideal",
    "monomials_of_degree",
    "polynomial_from_json",
    "product_generators",
    "reduce",
    "s_polynomial",
    "straighten",
    "variable_from_name",
    "verify_axiom1",
    "verify_axiom2",
]
