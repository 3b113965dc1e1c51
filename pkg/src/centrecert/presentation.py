"""Generator sets for the integral presentations and their Groebner checks.

The ring is ZZ[xi_i_j, u_1..u_(n-1), z_1..z_t] with the block order
z > u > xi (lex on z, degrevlex on u, the lex-xi order on xi).  The
generators are::

    det - 1, [d], f_1 - s_1, ..., f_(n-1) - s_(n-1), z_1^2 - Delta_1, ..., z_t^2 - Delta_t

with ``d`` present only in the quotient variant.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .invariants import compute_d, det_generic, invariant_s, principal_minor
from .polyring import (
    BlockProduct, Monomial, Polynomial, block_order, divide_with_remainder,
    format_poly, leading_term, s_polynomial, u, xi, z,
)
from .records import CheckRecord, record
from .symfun import SymFunTask, compute_f


class Variant(str, Enum):
    FULL = "full"
    QUOTIENT_BY_D = "quotient_by_d"


@dataclass(frozen=True)
class PresentationSpec:
    n: int
    l: int
    variant: Variant = Variant.FULL
    t: int | None = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if not isinstance(self.l, int) or self.l <= 1 or self.l % 2 == 0:
            raise ValueError(f"l must be an odd integer > 1, got {self.l}")
        object.__setattr__(self, "variant", Variant(self.variant))
        if self.t is None:
            object.__setattr__(self, "t", self.n - 1)
        if not 0 <= self.t <= self.n - 1:
            raise ValueError(f"t must lie in 0..{self.n - 1}, got {self.t}")

    @property
    def label(self) -> str:
        return f"n={self.n},l={self.l},{self.variant.value},t={self.t}"


@dataclass(frozen=True)
class GeneratorSet:
    generators: tuple[Polynomial, ...]
    labels: tuple[str, ...]
    order: BlockProduct

    def leading_terms(self) -> list[tuple[Monomial, int]]:
        return [leading_term(g, self.order) for g in self.generators]

    def permuted(self, perm) -> "GeneratorSet":
        return GeneratorSet(tuple(self.generators[k] for k in perm),
                            tuple(self.labels[k] for k in perm), self.order)


@lru_cache(maxsize=None)
def build_generators(spec: PresentationSpec) -> GeneratorSet:
    n = spec.n
    gens = [det_generic(n) - 1]
    labels = ["det-1"]
    if spec.variant is Variant.QUOTIENT_BY_D:
        gens.append(compute_d(n))
        labels.append("d")
    for i in range(1, n):
        gens.append(compute_f(SymFunTask(n, spec.l, i)) - invariant_s(n, i))
        labels.append(f"f_{i}-s_{i}")
    for i in range(1, spec.t + 1):
        gens.append(Polynomial.var(z(i)) ** 2 - principal_minor(n, i))
        labels.append(f"z_{i}^2-Delta_{i}")
    return GeneratorSet(tuple(gens), tuple(labels), block_order(n, spec.t))


def expected_leading_monomials(spec: PresentationSpec) -> list[Monomial]:
    n = spec.n
    out = [Monomial((xi(i, i), 1) for i in range(1, n + 1))]
    if spec.variant is Variant.QUOTIENT_BY_D:
        out.append(Monomial((xi(i, i - 1), i - 1) for i in range(2, n + 1)))
    out += [Monomial(((u(i), spec.l),)) for i in range(1, n)]
    out += [Monomial(((z(i), 2),)) for i in range(1, spec.t + 1)]
    return out


ANCHOR_COPRIME = ("leading monomials pairwise coprime with coefficients ±1 "
                  "=> the generators form a Groebner basis over Z")
ANCHOR_BUCHBERGER = "every S-polynomial of the generators reduces to 0"
ANCHOR_CLOSURE = ("normal forms of products of u-monomials with exponents < l are "
                  "again z-free with integer coefficients")


def coprime_lt_check(gens: GeneratorSet, check_id: str = "coprime_lt") -> CheckRecord:
    t0 = time.perf_counter()
    lts = gens.leading_terms()
    failures = []
    for (a, (ma, ca)), (b, (mb, cb)) in itertools.combinations(zip(gens.labels, lts), 2):
        if not ma.coprime(mb):
            shared = sorted(ma.variables() & mb.variables())
            failures.append(f"{a} and {b} share {', '.join(v.name for v in shared)}")
    for label, (_, c) in zip(gens.labels, lts):
        if abs(c) != 1:
            failures.append(f"{label} has leading coefficient {c}")
    witnesses = [(f"LT({lab})", format_poly(Polynomial({m: c}), gens.order))
                 for lab, (m, c) in zip(gens.labels, lts)]
    return record(check_id, ANCHOR_COPRIME, failures, witnesses, time.perf_counter() - t0)


def _reduce_pair(args) -> tuple[int, str]:
    f, g, gens = args
    s = s_polynomial(f, g, gens.order)
    r = divide_with_remainder(s, gens.generators, gens.order).remainder
    return len(s), format_poly(r, gens.order) if r else "0"


def buchberger_oracle(gens: GeneratorSet, check_id: str = "buchberger",
                      workers: int = 1) -> CheckRecord:
    """Reduce every pairwise S-polynomial modulo the generators."""
    t0 = time.perf_counter()
    pairs = list(itertools.combinations(range(len(gens.generators)), 2))
    jobs = [(gens.generators[a], gens.generators[b], gens) for a, b in pairs]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_reduce_pair, jobs))
    else:
        results = [_reduce_pair(j) for j in jobs]
    failures = [f"S({gens.labels[a]}, {gens.labels[b]}) -> {rem}"
                for (a, b), (_, rem) in zip(pairs, results) if rem != "0"]
    return record(check_id, ANCHOR_BUCHBERGER, failures, [
        ("pairs", len(pairs)),
        ("max S-polynomial terms", max((k for k, _ in results), default=0)),
    ], time.perf_counter() - t0)


def normal_form(f: Polynomial, gens: GeneratorSet) -> Polynomial:
    return divide_with_remainder(f, gens.generators, gens.order).remainder


def _ring_variables(spec: PresentationSpec):
    n = spec.n
    return ([xi(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
            + [u(i) for i in range(1, n)] + [z(i) for i in range(1, spec.t + 1)])


def restricted_basis(spec: PresentationSpec, degree_bound: int) -> list[Monomial]:
    """All monomials of degree <= degree_bound divisible by no leading monomial.

    Enumerated by brute force over the whole ring, smallest first.
    """
    if degree_bound < 0:
        raise ValueError("degree_bound must be >= 0")
    gens = build_generators(spec)
    lms = [m for m, _ in gens.leading_terms()]
    variables = _ring_variables(spec)
    out = []
    for deg in range(degree_bound + 1):
        for combo in itertools.combinations_with_replacement(variables, deg):
            m = Monomial((v, 1) for v in combo)
            if not any(lm.divides(m) for lm in lms):
                out.append(m)
    out.sort(key=gens.order.key)
    return out


def is_pure_uz(m: Monomial) -> bool:
    return all(v.kind in ("u", "z") for v, _ in m)


def uz_bound(spec: PresentationSpec) -> int:
    """Degree of the largest restricted u-z monomial."""
    return (spec.l - 1) * (spec.n - 1) + spec.t


def restricted_uz_monomials(spec: PresentationSpec) -> list[Monomial]:
    """u^k z^m with 0 <= k_i < l and 0 <= m_i < 2, listed directly."""
    ranges = [range(spec.l)] * (spec.n - 1) + [range(2)] * spec.t
    vars_ = [u(i) for i in range(1, spec.n)] + [z(i) for i in range(1, spec.t + 1)]
    return [Monomial(zip(vars_, exps)) for exps in itertools.product(*ranges)]


def restricted_u_monomials(spec: PresentationSpec) -> list[Monomial]:
    return [Monomial(zip([u(i) for i in range(1, spec.n)], exps))
            for exps in itertools.product(range(spec.l), repeat=spec.n - 1)]


EXHAUSTIVE_LIMIT = 10 ** 4


def closure_check(spec: PresentationSpec, sample_count: int = 200,
                  seed: int = 0) -> CheckRecord:
    """Exhaustive over all pairs when there are at most 10^4 of them,
    otherwise ``sample_count`` pairs drawn with ``random.Random(seed)``."""
    if spec.variant is not Variant.QUOTIENT_BY_D:
        raise ValueError("closure_check needs the quotient-by-d variant")
    t0 = time.perf_counter()
    gens = build_generators(spec)
    monos = restricted_u_monomials(spec)
    if len(monos) ** 2 <= EXHAUSTIVE_LIMIT:
        pairs = list(itertools.product(monos, repeat=2))
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        pairs = [(rng.choice(monos), rng.choice(monos)) for _ in range(sample_count)]
        mode = f"sampled(seed={seed})"
    failures = []
    max_terms = 0
    seen: dict[Monomial, list[str]] = {}
    for a, b in pairs:
        product = a * b
        if product not in seen:
            nf = normal_form(Polynomial.monomial(product), gens)
            max_terms = max(max_terms, len(nf))
            problems = []
            if any(v.kind == "z" for v in nf.variables()):
                problems.append("has a z-variable in its normal form")
            if not all(isinstance(c, int) for _, c in nf):
                problems.append("has a non-integer coefficient")
            seen[product] = problems
        failures += [f"{a!r} * {b!r} {msg}" for msg in seen[product]]
    top = Monomial(((u(1), spec.l - 1),))
    sample_nf = normal_form(Polynomial.monomial(top * top), gens)
    return record(f"closure[{spec.label}]", ANCHOR_CLOSURE, failures, [
        ("mode", mode),
        ("pairs", len(pairs)),
        ("distinct products", len(seen)),
        ("max normal-form terms", max_terms),
        (f"NF(u_1^{2 * (spec.l - 1)})", format_poly(sample_nf, gens.order)),
    ], time.perf_counter() - t0)
