"""Symmetric functions and the polynomials F_i, f_i.

``F_i`` is the polynomial with ``sigma_i(x_1^l, ..., x_n^l) = F_i(sigma_1, ..., sigma_n)``
and ``f_i = F_i(u_1, ..., u_(n-1), 1)``.  Rewriting a symmetric polynomial
in the elementary ones is done by the classical leading-monomial descent:
peel off ``c * sigma^beta`` where ``x^alpha`` is the lex-leading monomial and
``beta_j = alpha_j - alpha_(j+1)``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .polyring import (
    GF, Monomial, Polynomial, Variable, degrevlex_u, format_poly, leading_term,
    lex_x, map_coefficients, substitute, u, x,
)
from .records import CheckRecord, record


class NotSymmetricError(ValueError):
    pass


class TerminationError(RuntimeError):
    """The descent did not terminate within its proven bound (internal bug)."""


@dataclass(frozen=True)
class SymFunTask:
    n: int
    l: int
    i: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if not isinstance(self.l, int) or self.l <= 1 or self.l % 2 == 0:
            raise ValueError(f"l must be an odd integer > 1, got {self.l}")
        if not 1 <= self.i <= self.n - 1:
            raise ValueError(f"i must lie in 1..{self.n - 1}, got {self.i}")


@lru_cache(maxsize=None)
def elementary_sigma(n: int, i: int) -> Polynomial:
    if not 1 <= i <= n:
        raise ValueError(f"sigma_i needs 1 <= i <= {n}, got {i}")
    from itertools import combinations
    return Polynomial({Monomial((x(k), 1) for k in c): 1
                       for c in combinations(range(1, n + 1), i)})


@lru_cache(maxsize=None)
def _sigma_power(n: int, j: int, e: int) -> Polynomial:
    if e == 0:
        return Polynomial.constant(1)
    if e == 1:
        return elementary_sigma(n, j)
    return _sigma_power(n, j, e - 1) * elementary_sigma(n, j)


def _x_vars(h: Polynomial, n: int) -> None:
    for v in h.variables():
        if v.kind != "x" or v.i > n:
            raise ValueError(f"{v.name} is not one of x_1..x_{n}")


def _swap(h: Polynomial, a: Variable, b: Variable) -> Polynomial:
    out = {}
    for m, c in h:
        out[Monomial((b if v == a else a if v == b else v, e) for v, e in m)] = c
    return Polynomial(out, h.domain)


def is_symmetric(h: Polynomial, n: int) -> bool:
    """Invariance under the adjacent transpositions, which generate S_n."""
    return all(_swap(h, x(k), x(k + 1)) == h for k in range(1, n))


def express_in_elementaries(h: Polynomial, n: int) -> Polynomial:
    """The polynomial H in u_1..u_n with h = H(sigma_1, ..., sigma_n)."""
    _x_vars(h, n)
    if not is_symmetric(h, n):
        raise NotSymmetricError("input is not symmetric in x_1..x_%d" % n)
    order = lex_x(n)
    bound = comb(max(h.total_degree(), 0) + n, n)
    H: dict[Monomial, int] = {}
    rest = h
    steps = 0
    while rest:
        steps += 1
        if steps > bound:
            raise TerminationError(f"descent exceeded {bound} steps")
        m, c = leading_term(rest, order)
        alpha = [m.exponent(x(k)) for k in range(1, n + 1)]
        beta = [alpha[k] - alpha[k + 1] for k in range(n - 1)] + [alpha[n - 1]]
        piece = Polynomial.constant(c, h.domain)
        for j, b in enumerate(beta, start=1):
            if b:
                piece = piece * _sigma_power(n, j, b)
        rest = rest - piece
        um = Monomial((u(j), b) for j, b in enumerate(beta, start=1))
        H[um] = H.get(um, 0) + c
    return Polynomial(H, h.domain)


def substitute_elementaries(H: Polynomial, n: int) -> Polynomial:
    """H(sigma_1, ..., sigma_n) expanded in the x-variables."""
    return substitute(H, {u(j): elementary_sigma(n, j) for j in range(1, n + 1)})


def power_sum_sigma(n: int, l: int, i: int) -> Polynomial:
    """sigma_i(x_1^l, ..., x_n^l)."""
    return substitute(elementary_sigma(n, i), {x(k): Polynomial.var(x(k)) ** l
                                               for k in range(1, n + 1)})


@lru_cache(maxsize=None)
def _compute_F(n: int, l: int, i: int) -> Polynomial:
    return express_in_elementaries(power_sum_sigma(n, l, i), n)


def compute_F(task: SymFunTask) -> Polynomial:
    return _compute_F(task.n, task.l, task.i)


def compute_f(task: SymFunTask) -> Polynomial:
    return substitute(compute_F(task), {u(task.n): 1})


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

ANCHOR_F_PROPS = ("degrevlex u_1 > ... > u_(n-1): LT(f_i) = u_i^l; monomials of f_i - u_i^l "
                  "have degree <= l and exponents < l; n = 2: f_1 has odd degree l")
ANCHOR_SUBST = "sigma_i(x_1^l, ..., x_n^l) = F_i(sigma_1, ..., sigma_n)"
ANCHOR_X_PROPS = ("monomials of sigma_i(x^l) - sigma_i^l involve >= i+1 variables, have "
                  "exponents <= l, and at most i exponents equal to l")
ANCHOR_MODP = "l a power of p => f_i = u_i^l mod p"


def _u_power(i: int, l: int) -> Polynomial:
    return Polynomial.monomial(Monomial(((u(i), l),)))


def check_f_properties(task: SymFunTask) -> CheckRecord:
    t0 = time.perf_counter()
    n, l, i = task.n, task.l, task.i
    order = degrevlex_u(n)
    f = compute_f(task)
    F = compute_F(task)
    target = _u_power(i, l)
    failures = []

    lm, lc = leading_term(f, order)
    if lm != Monomial(((u(i), l),)) or lc != 1:
        failures.append(f"LT(f_{i}) = {lc}*{lm!r}")
    for m, _ in f - target:
        if m.degree > l:
            failures.append(f"{m!r} in f_{i} - u_{i}^{l} has degree > {l}")
        if any(e >= l for _, e in m):
            failures.append(f"{m!r} in f_{i} - u_{i}^{l} has an exponent >= {l}")
    for m, _ in F - target:
        if not any(v.i > i for v, _ in m):
            failures.append(f"{m!r} in F_{i} - u_{i}^{l} has no u_j with j > {i}")
        if m.degree > l or any(e >= l for _, e in m):
            failures.append(f"{m!r} in F_{i} - u_{i}^{l} violates the degree/exponent bound")
    if n == 2:
        deg = f.total_degree()
        if deg != l or deg % 2 == 0:
            failures.append(f"deg f_1 = {deg}")
    return record(f"f_properties[n={n},l={l},i={i}]", ANCHOR_F_PROPS, failures, [
        ("f", format_poly(f, order)),
        ("LT(f)", format_poly(Polynomial({lm: lc}), order)),
    ], time.perf_counter() - t0)


def check_substitution(task: SymFunTask) -> CheckRecord:
    t0 = time.perf_counter()
    n, l, i = task.n, task.l, task.i
    F = compute_F(task)
    ok = substitute_elementaries(F, n) == power_sum_sigma(n, l, i)
    return record(f"substitution[n={n},l={l},i={i}]", ANCHOR_SUBST,
                  [] if ok else ["F_i(sigma) != sigma_i(x^l)"],
                  [("F", format_poly(F, degrevlex_u(n + 1)))], time.perf_counter() - t0)


def check_x_properties(task: SymFunTask) -> CheckRecord:
    t0 = time.perf_counter()
    n, l, i = task.n, task.l, task.i
    diff = power_sum_sigma(n, l, i) - elementary_sigma(n, i) ** l
    failures = []
    for m, _ in diff:
        exps = [e for _, e in m]
        if len(exps) < i + 1:
            failures.append(f"{m!r} has fewer than {i + 1} variables")
        if any(e > l for e in exps):
            failures.append(f"{m!r} has an exponent > {l}")
        if sum(e == l for e in exps) > i:
            failures.append(f"{m!r} has more than {i} exponents equal to {l}")
    return record(f"x_properties[n={n},l={l},i={i}]", ANCHOR_X_PROPS, failures[:10],
                  [("monomials", len(diff))], time.perf_counter() - t0)


def is_power_of(l: int, p: int) -> bool:
    if l < p:
        return False
    while l % p == 0:
        l //= p
    return l == 1


def check_f_mod_p(task: SymFunTask, p: int) -> CheckRecord:
    """Raises ValueError when l is not a power of p."""
    if not is_power_of(task.l, p):
        raise ValueError(f"l={task.l} is not a power of p={p}")
    t0 = time.perf_counter()
    field = GF(p)
    reduced = map_coefficients(compute_f(task), field)
    expected = map_coefficients(_u_power(task.i, task.l), field)
    ok = reduced == expected
    return record(f"f_mod_p[n={task.n},l={task.l},i={task.i},p={p}]", ANCHOR_MODP,
                  [] if ok else ["f_i mod p differs from u_i^l"],
                  [("f mod p", format_poly(reduced, degrevlex_u(task.n)))],
                  time.perf_counter() - t0)
