"""Exact certificates for the integral presentations of the centre of
quantum sl_n at an odd root of unity.

Modules:

- :mod:`centrecert.polyring`: sparse polynomials over ZZ and GF(p), orders, division
- :mod:`centrecert.invariants`: s_k, Delta_k, M, d, companion matrices, Jacobian minors
- :mod:`centrecert.symfun`: elementary symmetric functions, F_i and f_i
- :mod:`centrecert.presentation`: generator sets, Groebner checks, normal forms
- :mod:`centrecert.verifier`: suite runner, reports, ``show``
"""

from .polyring import (
    GF, ZZ, Monomial, Polynomial, Variable, block_order, degrevlex_u, format_poly,
    leading_term, lex_x, lex_xi, lex_z, parse_poly, u, x, xi, z,
)
from .records import CheckRecord

__version__ = "0.1.0"
