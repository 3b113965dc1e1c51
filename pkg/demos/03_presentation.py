"""Generator sets, the Groebner criterion, normal forms and restricted bases.

Run with ``python3 demos/03_presentation.py``.
"""

from centrecert.polyring import Polynomial, format_poly, u, z
from centrecert.presentation import (
    PresentationSpec, Variant, buchberger_oracle, build_generators, closure_check,
    coprime_lt_check, is_pure_uz, normal_form, restricted_basis,
)

spec = PresentationSpec(2, 3, Variant.FULL)
gens = build_generators(spec)
print("order:", gens.order.name)
for label, g in zip(gens.labels, gens.generators):
    print(f"  {label:14s} {format_poly(g, gens.order)}")

# pairwise coprime leading monomials with unit coefficients => Groebner basis
print(coprime_lt_check(gens).status, "coprime leading terms")
print(buchberger_oracle(gens).status, "all S-polynomials reduce to 0")

# normal forms
U1, Z1 = Polynomial.var(u(1)), Polynomial.var(z(1))
for f in (U1 ** 3, U1 ** 4, Z1 ** 2, Z1 ** 3 * U1 ** 2):
    print(f"NF({format_poly(f)}) =", format_poly(normal_form(f, gens), gens.order))

# the u-z part of the normal-form basis: u^k z^m with k < l, m < 2
basis = restricted_basis(spec, 4)
print("u-z basis monomials:", [m for m in basis if is_pure_uz(m)])

# with d added, the u-monomials stay closed under multiplication modulo the ideal
for n in (2, 3):
    rec = closure_check(PresentationSpec(n, 3, Variant.QUOTIENT_BY_D))
    print(rec.check_id, rec.status, dict(rec.witnesses)["pairs"], "pairs")

# the larger instance n = 4 (both variants) is also within reach
for variant in Variant:
    rec = coprime_lt_check(build_generators(PresentationSpec(4, 3, variant)))
    print(f"n=4 {variant.value}:", rec.status)
