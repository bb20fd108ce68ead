"""Exact symbolic engine for the q-deformed Poincare algebra.

Expressions use the generators E, F, K, Kinv, a, b, c, d, P0, Pm, Pp, P3,
the derived symbols W, J3, Jp, Jm, and the scalar literals q, qh, s2, lam,
[n]. Juxtaposition (or *) is the noncommutative product.

>>> import qpoincare as qp
>>> qp.normalize("E*F - F*E")
'-lam^-1*Kinv + lam^-1*K'
"""

from ._qpoincare import (
    AlgebraError,
    ExpressionError,
    __version__,
    antipode,
    commutator,
    confluence_fuzz,
    coproduct,
    eval_scalar,
    limit_q1,
    little_algebra,
    normalize,
    pauli_lubanski,
    spin_casimir,
    star,
    suites,
    verify,
)

__all__ = [
    "AlgebraError",
    "ExpressionError",
    "__version__",
    "antipode",
    "commutator",
    "confluence_fuzz",
    "coproduct",
    "eval_scalar",
    "limit_q1",
    "little_algebra",
    "normalize",
    "pauli_lubanski",
    "spin_casimir",
    "star",
    "suites",
    "verify",
]
