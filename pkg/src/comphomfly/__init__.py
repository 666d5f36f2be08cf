"""Exact composite HOMFLY-PT polynomials of torus knots, with verification.

The engine expands a torus-knot invariant over composite characters with
symbolic rank, producing exact two-variable Laurent polynomials; the verify
layer checks the engine and a set of transcribed three-variable fixtures
against each other through connection, duality, evaluation, degree, and
exceptional-series identities.
"""

from .partitions import (
    CompositeDiagram,
    NPolynomial,
    Partition,
    RankTooSmallError,
    compose_at_N,
    conjugate,
    join,
    kappa,
    kappa_composite,
)
from .qexact import (
    Bracket,
    BracketProduct,
    InexactDivisionError,
    Laurent,
    ResidualRankError,
    SymExponent,
    SymMonomial,
    exact_divide,
    parse_expr,
    tilde_normalize,
)
from .rosso import (
    InvariantResult,
    TorusKnot,
    braiding_eigenvalue,
    classical_homfly,
    composite_homfly,
    finite_N_oracle,
    quantum_dimension,
)

__version__ = "0.1.0"

__all__ = [
    "Bracket",
    "BracketProduct",
    "CompositeDiagram",
    "InexactDivisionError",
    "InvariantResult",
    "Laurent",
    "NPolynomial",
    "Partition",
    "RankTooSmallError",
    "ResidualRankError",
    "SymExponent",
    "SymMonomial",
    "TorusKnot",
    "braiding_eigenvalue",
    "classical_homfly",
    "compose_at_N",
    "composite_homfly",
    "conjugate",
    "exact_divide",
    "finite_N_oracle",
    "join",
    "kappa",
    "kappa_composite",
    "parse_expr",
    "quantum_dimension",
    "tilde_normalize",
]
