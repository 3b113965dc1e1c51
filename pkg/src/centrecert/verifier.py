"""Run the certificate suite for given (n, l, p) and serialise the results.

Report grammar (UTF-8, one JSON object per line, keys in the order shown)::

    {"report": "centrecert", "version": 1, "config": {n, l, p, checks, seed}}
    {"check_id", "group", "anchor", "status", "witnesses": {...}, "message"}   # one per check
    {"summary": {"total", "passed", "failed", "status"}}

Records appear in a fixed order independent of scheduling, and timings are
left out, so a given config and seed always produce the same bytes.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import invariants, presentation, symfun
from .polyring import _is_prime, degrevlex_u, format_poly, leading_term, lex_xi, reading_order
from .records import CheckRecord

log = logging.getLogger(__name__)

GROUPS = ("invariants", "leading_terms", "jacobian", "symfun", "groebner", "closure")
NUMERIC_GROUPS = frozenset({"invariants", "leading_terms", "jacobian"})
N_MAX_NUMERIC = 5
N_MAX_SYMBOLIC = 4


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    n: int
    l: int
    p: int | None = None
    checks: tuple[str, ...] = ("all",)
    seed: int = 0
    output_path: str | None = None
    workers: int = 1
    n_max_numeric: int = N_MAX_NUMERIC
    n_max_symbolic: int = N_MAX_SYMBOLIC
    samples: int = 200

    @property
    def groups(self) -> tuple[str, ...]:
        if "all" in self.checks:
            return GROUPS
        return tuple(g for g in GROUPS if g in self.checks)

    def validate(self) -> None:
        """Raise :class:`ConfigError` naming the first violated constraint."""
        if not isinstance(self.n, int) or self.n < 2:
            raise ConfigError(f"n must be an integer >= 2, got {self.n!r}")
        if not isinstance(self.l, int) or self.l <= 1 or self.l % 2 == 0:
            raise ConfigError(f"l must be an odd integer > 1, got {self.l!r}")
        unknown = set(self.checks) - set(GROUPS) - {"all"}
        if unknown or not self.checks:
            raise ConfigError(f"unknown checks {sorted(unknown)}; choose from {', '.join(GROUPS)}, all")
        if self.p is not None:
            if "symfun" in self.groups and not symfun.is_power_of(self.l, self.p):
                raise ConfigError(f"l={self.l} is not a power of p={self.p}")
            if not (isinstance(self.p, int) and self.p > 2 and _is_prime(self.p)):
                raise ConfigError(f"p must be an odd prime, got {self.p!r}")
        if self.seed is None or not isinstance(self.seed, int):
            raise ConfigError("seed must be an integer")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        for g in self.groups:
            limit = self.n_max_numeric if g in NUMERIC_GROUPS else self.n_max_symbolic
            if self.n > limit:
                raise ConfigError(f"n={self.n} exceeds the limit {limit} for '{g}' checks")
        if self.n_max_numeric > N_MAX_NUMERIC or self.n_max_symbolic > N_MAX_SYMBOLIC:
            log.warning("raised n limits: cost grows combinatorially with n")

    def echo(self) -> dict:
        return {"n": self.n, "l": self.l, "p": self.p, "checks": list(self.groups), "seed": self.seed}


@dataclass
class VerificationReport:
    config: SuiteConfig
    records: list[tuple[str, CheckRecord]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for _, r in self.records)

    @property
    def failed(self) -> list[CheckRecord]:
        return [r for _, r in self.records if not r.passed]

    def to_text(self) -> str:
        lines = [_dump({"report": "centrecert", "version": 1, "config": self.config.echo()})]
        for group, r in self.records:
            lines.append(_dump({
                "check_id": r.check_id,
                "group": group,
                "anchor": r.anchor,
                "status": r.status,
                "witnesses": dict(r.witnesses),
                "message": r.message,
            }))
        total = len(self.records)
        failed = len(self.failed)
        lines.append(_dump({"summary": {"total": total, "passed": total - failed,
                                        "failed": failed,
                                        "status": "pass" if not failed else "fail"}}))
        return "\n".join(lines) + "\n"

    def timings(self) -> str:
        return "\n".join(f"{r.elapsed:9.3f}s  {r.check_id}" for _, r in self.records)


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))


# tasks are (group, function name, args); names keep them picklable
_TASKS = {
    "charpoly": invariants.check_charpoly_identity,
    "vector_equation": invariants.check_vector_equation,
    "d_methods": invariants.check_d_methods,
    "companion": invariants.check_companion_certificates,
    "minor_mult": invariants.check_minor_multiplicativity,
    "leading_terms": invariants.check_leading_terms,
    "jac_i": invariants.verify_lemma_jac_i,
    "jac_ii": invariants.verify_lemma_jac_ii,
    "substitution": lambda n, l, i: symfun.check_substitution(symfun.SymFunTask(n, l, i)),
    "f_properties": lambda n, l, i: symfun.check_f_properties(symfun.SymFunTask(n, l, i)),
    "x_properties": lambda n, l, i: symfun.check_x_properties(symfun.SymFunTask(n, l, i)),
    "f_mod_p": lambda n, l, i, p: symfun.check_f_mod_p(symfun.SymFunTask(n, l, i), p),
    "coprime": lambda n, l, v: presentation.coprime_lt_check(
        presentation.build_generators(presentation.PresentationSpec(n, l, v)),
        f"coprime_lt[n={n},l={l},{v}]"),
    "buchberger": lambda n, l, v: presentation.buchberger_oracle(
        presentation.build_generators(presentation.PresentationSpec(n, l, v)),
        f"buchberger[n={n},l={l},{v}]"),
    "closure": lambda n, l, seed: presentation.closure_check(
        presentation.PresentationSpec(n, l, presentation.Variant.QUOTIENT_BY_D), seed=seed),
}


def plan(config: SuiteConfig) -> list[tuple[str, str, tuple]]:
    n, l, seed = config.n, config.l, config.seed
    tasks = []
    for g in config.groups:
        if g == "invariants":
            tasks += [(g, "charpoly", (n,)), (g, "vector_equation", (n,)), (g, "d_methods", (n,)),
                      (g, "companion", (n, config.samples, seed)),
                      (g, "minor_mult", (n, config.samples, seed))]
        elif g == "leading_terms":
            tasks.append((g, "leading_terms", (n,)))
        elif g == "jacobian":
            tasks.append((g, "jac_i", (n,)))
            if n >= 3:
                tasks.append((g, "jac_ii", (n,)))
        elif g == "symfun":
            for i in range(1, n):
                tasks += [(g, "substitution", (n, l, i)), (g, "f_properties", (n, l, i)),
                          (g, "x_properties", (n, l, i))]
                if config.p is not None:
                    tasks.append((g, "f_mod_p", (n, l, i, config.p)))
        elif g == "groebner":
            for name in ("coprime", "buchberger"):
                for v in ("full", "quotient_by_d"):
                    tasks.append((g, name, (n, l, v)))
        elif g == "closure":
            tasks.append((g, "closure", (n, l, seed)))
    return tasks


def _run_task(task) -> CheckRecord:
    _, name, args = task
    return _TASKS[name](*args)


def run_suite(config: SuiteConfig) -> VerificationReport:
    config.validate()
    tasks = plan(config)
    if config.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]
    return VerificationReport(config, [(t[0], r) for t, r in zip(tasks, results)])


# ---------------------------------------------------------------------------
# inspection
# ---------------------------------------------------------------------------

SHOW_EXPRS = ("s", "delta", "d", "f", "F", "M")


def show(expr: str, n: int, l: int | None = None, k: int | None = None) -> str:
    """Render one object; the second line gives its leading term."""
    if expr not in SHOW_EXPRS:
        raise ValueError(f"unknown expression {expr!r}; choose from {', '.join(SHOW_EXPRS)}")
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"n must be >= 2, got {n!r}")
    k = 1 if k is None else k
    if expr == "M":
        M = invariants.build_M(n)
        return "\n".join("[" + ", ".join(format_poly(p, reading_order(n)) for p in row) + "]"
                         for row in M.entries)
    if expr in ("f", "F"):
        if l is None:
            raise ValueError(f"show {expr} needs --l")
        task = symfun.SymFunTask(n, l, k)
        if expr == "f":
            poly, order = symfun.compute_f(task), degrevlex_u(n)
        else:
            poly, order = symfun.compute_F(task), degrevlex_u(n + 1)
        display = order
    else:
        if expr == "s":
            poly = invariants.invariant_s(n, k)
        elif expr == "delta":
            poly = invariants.principal_minor(n, k)
        else:
            poly = invariants.compute_d(n)
        order, display = lex_xi(n), reading_order(n)
    m, c = leading_term(poly, order)
    lt = format_poly(poly.__class__({m: c}), order)
    return f"{format_poly(poly, display)}\nleading term: {lt} [{order.name}]"
