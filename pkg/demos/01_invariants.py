"""The invariants s_k, Delta_k, the matrix M and its determinant d.

Run with ``python3 demos/01_invariants.py``.
"""

from centrecert.invariants import (
    build_M, companion_matrix, compute_d, d_at, det_generic, int_principal_minor,
    integer_det, invariant_s, principal_minor, vector_equation_residual,
)
from centrecert.polyring import format_poly, leading_term, lex_xi, reading_order

n = 3
show = reading_order(n)   # xi_1_1 > xi_1_2 > ... for display

# s_k is the sum of the principal k x k minors; s_1 is the trace, s_n the determinant
for k in range(1, n + 1):
    print(f"s_{k} =", format_poly(invariant_s(n, k), show))
print("Delta_2 =", format_poly(principal_minor(n, 2), show))

# M holds the derivatives of the s_k along the last column; no entry mentions column n
M = build_M(n)
print("M =")
print(M.render(show))

# r = M.c - s is free of the last column too
for k, r in enumerate(vector_equation_residual(n), start=1):
    print(f"r_{k} =", format_poly(r, show))

# d by fraction-free elimination, cross-checked against the permutation expansion
d = compute_d(n)
assert d == compute_d(n, "permutation_sum")
print("d =", format_poly(d, show))

# leading terms under lex with xi_n_n > xi_n_(n-1) > ... > xi_1_1
order = lex_xi(n)
for name, f in (("det", det_generic(n)), ("d", d)):
    m, c = leading_term(f, order)
    print(f"LT({name}) = {c:+d} * {m!r}")

# companion matrices: d(x_a) = 1 whatever a is, and Delta_(n-1)(x_a) = 0
a = (4, -7, 1)            # a_n = (-1)^(n-1) puts x_a in SL_n
A = companion_matrix(a)
print("x_a =", A)
print("det =", integer_det(A), " d =", d_at(A), " Delta_2 =", int_principal_minor(A, 2))

# term counts grow quickly with n
for k in (2, 3, 4):
    print(f"n={k}: d has {len(compute_d(k))} terms")
