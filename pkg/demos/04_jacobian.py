"""Jacobian certificates at explicit integer matrices.

Entries of each Jacobian are evaluated at the matrix first and only then
is an integer minor taken, so nothing symbolic of size 2n x 2n is formed.

Run with ``python3 demos/04_jacobian.py``.
"""

from centrecert.invariants import (
    jac_i_matrix, jac_ii_alpha, jac_ii_matrix, verify_lemma_jac_i, verify_lemma_jac_ii,
)

for n in (2, 3, 4, 5):
    print("A =", jac_i_matrix(n))
    rec = verify_lemma_jac_i(n)
    print(f"  {rec.check_id}: {rec.status}, minor {rec.witness('minor')}")

for n in (3, 4):
    print("A =", jac_ii_matrix(n))
    print("alpha =", jac_ii_alpha(n))
    rec = verify_lemma_jac_ii(n)
    print(f"  {rec.check_id}: {rec.status}, d(A) = {rec.witness('d(A)')}, minor {rec.witness('minor')}")
    print("  rows Delta.., s.., d at A, restricted to alpha:")
    print("  ", rec.witness("triangular(A)"))
