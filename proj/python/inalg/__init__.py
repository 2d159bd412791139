"""Initial ideals and initial algebras with exact rational arithmetic.

Polynomials are passed as strings such as ``"x^2 - 2*x*y + 1/3"`` together
with the list of variable names; orders use the text forms ``lex``,
``deglex``, ``revlex``, ``lex(y,x,z)`` and ``weight(3,2,1; lex)``.
"""

from ._inalg import (
    Error,
    ParseError,
    betti_numbers,
    execute,
    find_weight,
    groebner_basis,
    hilbert_function,
    hilbert_series,
    initial_ideal,
    krull_dimension,
    leading_monomial,
    order_weight,
    run,
    sagbi_complete,
    sagbi_test,
    scenario_names,
    verify,
)

__all__ = [
    "Error",
    "ParseError",
    "betti_numbers",
    "execute",
    "find_weight",
    "groebner_basis",
    "hilbert_function",
    "hilbert_series",
    "initial_ideal",
    "krull_dimension",
    "leading_monomial",
    "order_weight",
    "run",
    "sagbi_complete",
    "sagbi_test",
    "scenario_names",
    "verify",
]
