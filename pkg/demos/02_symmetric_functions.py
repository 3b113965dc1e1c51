"""Rewriting symmetric polynomials in the elementary ones; F_i and f_i.

Run with ``python3 demos/02_symmetric_functions.py``.
"""

from centrecert.polyring import GF, Polynomial, degrevlex_u, format_poly, map_coefficients, x
from centrecert.symfun import (
    SymFunTask, check_f_properties, compute_F, compute_f, express_in_elementaries,
    power_sum_sigma, substitute_elementaries,
)

X = [Polynomial.var(x(k)) for k in range(1, 4)]

# a power sum, converted by repeatedly peeling off the lex-leading monomial
h = X[0] ** 3 + X[1] ** 3 + X[2] ** 3
H = express_in_elementaries(h, 3)
print("x1^3 + x2^3 + x3^3 =", format_poly(H, degrevlex_u(4)), "(u_k stands for sigma_k)")
assert substitute_elementaries(H, 3) == h

# F_i expresses sigma_i(x_1^l, ..., x_n^l) through sigma_1..sigma_n; f_i sets u_n = 1
n, l = 3, 5
for i in range(1, n):
    task = SymFunTask(n, l, i)
    F = compute_F(task)
    assert substitute_elementaries(F, n) == power_sum_sigma(n, l, i)
    print(f"F_{i} has {len(F)} terms")
    print(f"f_{i} =", format_poly(compute_f(task), degrevlex_u(n)))
    rec = check_f_properties(task)
    print("  ", rec.status, "LT(f) =", rec.witness("LT(f)"))

# when l is a power of p every lower term vanishes mod p
for l, p in ((3, 3), (9, 3), (5, 5)):
    f = compute_f(SymFunTask(2, l, 1))
    print(f"l={l}, p={p}: f_1 mod p =", format_poly(map_coefficients(f, GF(p)), degrevlex_u(2)))

# ... but not otherwise
f = compute_f(SymFunTask(2, 15, 1))
print("l=15, p=3: f_1 mod 3 =", format_poly(map_coefficients(f, GF(3)), degrevlex_u(2)))
