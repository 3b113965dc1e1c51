"""Invariant polynomials on n x n matrices and their evaluation certificates.

Everything here lives in ZZ[xi_i_j]: the coefficients ``s_k`` of the
characteristic polynomial, the leading principal minors ``Delta_k``, the
matrix ``M`` of derivatives of the ``s_k`` along the last column, its
determinant ``d``, companion matrices, and Jacobian minors at explicit
integer matrices.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .polyring import (
    Monomial, Polynomial, Variable, evaluate, exact_quotient, format_poly,
    leading_term, lex_xi, partial_derivative, reading_order, x, xi,
)
from .records import CheckRecord, record

IntMatrix = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------


def permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _entry_size(e) -> int:
    return len(e) if isinstance(e, Polynomial) else abs(e)


def bareiss_det(rows, exact_div: Callable, one=1):
    """Fraction-free Gaussian elimination; works for ints and polynomials.

    ``exact_div(a, b)`` must return ``a / b`` when the division is exact,
    which Bareiss guarantees for every division it performs.  Pivots are
    chosen by complete pivoting on entry size (term count for polynomials).
    """
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return one
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = one
    for k in range(n - 1):
        best = None
        for i in range(k, n):
            for j in range(k, n):
                e = a[i][j]
                if e and (best is None or _entry_size(e) < best[0]):
                    best = (_entry_size(e), i, j)
        if best is None:
            return a[k][k] * 0
        _, pi, pj = best
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
            sign = -sign
        if pj != k:
            for r in a:
                r[k], r[pj] = r[pj], r[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                num = row_i[j] * pivot - aik * row_k[j] if aik else row_i[j] * pivot
                row_i[j] = exact_div(num, prev) if num else num
            row_i[k] = aik * 0
        prev = pivot
    return a[n - 1][n - 1] * sign


def cofactor_det(rows):
    """Laplace expansion along the first row, skipping zero entries."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = None
    for j, entry in enumerate(rows[0]):
        if not entry:
            continue
        sub = [r[:j] + r[j + 1:] for r in (list(r) for r in rows[1:])]
        term = entry * cofactor_det(sub)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return rows[0][0] * 0 if total is None else total


def integer_det(rows) -> int:
    return bareiss_det(rows, lambda a, b: a // b)


# ---------------------------------------------------------------------------
# polynomial matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolyMatrix:
    """Rectangular matrix of polynomials over one coefficient domain."""

    entries: tuple[tuple[Polynomial, ...], ...]

    def __post_init__(self):
        widths = {len(r) for r in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        domains = {p.domain for r in self.entries for p in r}
        if len(domains) > 1:
            raise ValueError("entries over different coefficient domains")

    @classmethod
    def from_rows(cls, rows) -> "PolyMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> tuple[int, int]:
        rows = len(self.entries)
        return rows, (len(self.entries[0]) if rows else 0)

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Polynomial, ...]:
        return self.entries[i]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def evaluate(self, point) -> IntMatrix:
        return tuple(tuple(evaluate(p, point) for p in r) for r in self.entries)

    def det(self, method: str = "bareiss") -> Polynomial:
        if method == "bareiss":
            one = Polynomial.constant(1, self.entries[0][0].domain) if self.entries else 1
            return bareiss_det(self.entries, exact_quotient, one)
        if method == "cofactor":
            return cofactor_det([list(r) for r in self.entries])
        raise ValueError(f"unknown determinant method {method!r}")

    def render(self, order=None) -> str:
        return "[" + "; ".join("[" + ", ".join(format_poly(p, order) for p in r) + "]"
                               for r in self.entries) + "]"


def _var(v: Variable) -> Polynomial:
    return Polynomial.var(v)


def generic_matrix(n: int) -> PolyMatrix:
    """The matrix whose (i, j) entry is the variable xi_i_j."""
    return PolyMatrix(tuple(tuple(_var(xi(i, j)) for j in range(1, n + 1))
                            for i in range(1, n + 1)))


def minor_polynomial(rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
    """det of the generic submatrix on 1-based ``rows`` x ``cols`` (Leibniz)."""
    if len(rows) != len(cols):
        raise ValueError("minor needs as many rows as columns")
    terms: dict[Monomial, int] = {}
    for perm in itertools.permutations(range(len(cols))):
        m = Monomial((xi(r, cols[p]), 1) for r, p in zip(rows, perm))
        terms[m] = terms.get(m, 0) + permutation_sign(perm)
    return Polynomial(terms)


def _check_dim(n: int, lo: int = 1) -> None:
    if not isinstance(n, int) or n < lo:
        raise ValueError(f"dimension must be an integer >= {lo}, got {n!r}")


@lru_cache(maxsize=None)
def invariant_s(n: int, k: int) -> Polynomial:
    """Trace of the k-th exterior power: the sum of all principal k x k minors."""
    _check_dim(n)
    if not 1 <= k <= n:
        raise ValueError(f"s_k needs 1 <= k <= {n}, got {k}")
    total = Polynomial()
    for lam in itertools.combinations(range(1, n + 1), k):
        total = total + minor_polynomial(lam, lam)
    return total


@lru_cache(maxsize=None)
def principal_minor(n: int, k: int) -> Polynomial:
    """Delta_k: determinant of the top-left k x k block."""
    _check_dim(n, 2)
    if not 1 <= k <= n - 1:
        raise ValueError(f"Delta_k needs 1 <= k <= {n - 1}, got {k}")
    idx = tuple(range(1, k + 1))
    return minor_polynomial(idx, idx)


def det_generic(n: int) -> Polynomial:
    return invariant_s(n, n)


@lru_cache(maxsize=None)
def build_M(n: int) -> PolyMatrix:
    """Row k, column i holds the derivative of s_k along xi_i_n."""
    _check_dim(n, 2)
    return PolyMatrix(tuple(
        tuple(partial_derivative(invariant_s(n, k), xi(i, n)) for i in range(1, n + 1))
        for k in range(1, n + 1)))


@lru_cache(maxsize=None)
def compute_d(n: int, method: str = "determinant") -> Polynomial:
    """det(M), by elimination or by the permutation expansion.

    ``method="cofactor"`` is a third route via Laplace expansion.
    """
    _check_dim(n, 2)
    M = build_M(n)
    if method == "determinant":
        return M.det("bareiss")
    if method == "cofactor":
        return M.det("cofactor")
    if method == "permutation_sum":
        total = Polynomial()
        for perm in itertools.permutations(range(n)):
            term = Polynomial.constant(permutation_sign(perm))
            for k in range(n):
                entry = M[k, perm[k]]
                if not entry:
                    term = None
                    break
                term = term * entry
            if term is not None:
                total = total + term
        return total
    raise ValueError(f"unknown method {method!r}")


def companion_matrix(a: Sequence[int]) -> IntMatrix:
    """Ones on the subdiagonal, last column (a_n, ..., a_1) read top to bottom."""
    n = len(a)
    _check_dim(n)
    rows = []
    for r in range(n):
        row = [0] * n
        if r > 0:
            row[r - 1] = 1
        row[n - 1] += a[n - 1 - r]
        rows.append(tuple(row))
    return tuple(rows)


def point_of(A: Sequence[Sequence[int]]) -> dict[Variable, int]:
    """Assignment xi_i_j -> A[i-1][j-1]."""
    return {xi(i + 1, j + 1): v for i, r in enumerate(A) for j, v in enumerate(r)}


def d_at(A: Sequence[Sequence[int]]) -> int:
    """d(A) computed as det(M(A)), entries of M evaluated first."""
    return integer_det(build_M(len(A)).evaluate(point_of(A)))


def int_principal_minor(A, k: int) -> int:
    return integer_det([list(r[:k]) for r in A[:k]])


def int_s(A, k: int) -> int:
    n = len(A)
    return sum(integer_det([[A[i][j] for j in lam] for i in lam])
               for lam in itertools.combinations(range(n), k))


def vector_equation_residual(n: int) -> tuple[Polynomial, ...]:
    """r = M.c - s, with c the last column of the generic matrix."""
    M = build_M(n)
    c = [_var(xi(i, n)) for i in range(1, n + 1)]
    out = []
    for k in range(n):
        lhs = Polynomial()
        for i in range(n):
            lhs = lhs + M[k, i] * c[i]
        out.append(lhs - invariant_s(n, k + 1))
    return tuple(out)


def last_column_free(f: Polynomial, n: int) -> bool:
    return all(v.kind != "xi" or v.j != n for v in f.variables())


def jacobian(functions: Sequence[Polynomial], variables: Sequence[Variable]) -> PolyMatrix:
    return PolyMatrix(tuple(tuple(partial_derivative(f, v) for v in variables) for f in functions))


def minor_at(matrix: PolyMatrix, rows: Sequence[int], cols: Sequence[int], point) -> int:
    """Integer minor on 0-based ``rows`` x ``cols``, evaluating entries first."""
    if len(rows) != len(cols):
        raise ValueError("minor needs as many rows as columns")
    values = [[evaluate(matrix[i, j], point) for j in cols] for i in rows]
    return integer_det(values)


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

ANCHOR_JAC_I = ("exists A in SL_n(Z): Delta_(n-1)(A) = 0 and a 2x2 minor of "
                "Jac(det, Delta_(n-1)) is ±1 at A")
ANCHOR_JAC_II = ("n >= 3: exists A in SL_n(Z): d(A) = 0 and a 2n x 2n minor of "
                 "Jac(s_1..s_n, d, Delta_1..Delta_(n-1)) is ±1 at A")
ANCHOR_LT = ("lex xi_n_n > ... > xi_1_1: LT(det) = ±xi_n_n*...*xi_1_1, "
             "LT(d) = ±xi_n_(n-1)^(n-1)*...*xi_3_2^2*xi_2_1")
ANCHOR_CHARPOLY = "det(x*id - A) = x^n + sum_i (-1)^i s_i(A) x^(n-i)"
ANCHOR_VECTOR_EQ = "M.c = s + r with M and r free of xi_i_n"
ANCHOR_D_PERM = "d = sum_pi sgn(pi) d_(pi(1),n)(s_1) ... d_(pi(n),n)(s_n)"
ANCHOR_COMPANION = ("x_a has char. poly x^n - sum a_i x^(n-i); with a_n = (-1)^(n-1): "
                    "det(x_a) = 1, d(x_a) = 1, Delta_(n-1)(x_a) = 0")
ANCHOR_MINOR_MULT = "A lower triangular or B upper triangular => Delta_k(AB) = Delta_k(A) Delta_k(B)"


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rec = fn(*args, **kwargs)
        return CheckRecord(rec.check_id, rec.anchor, rec.passed, rec.witnesses,
                           rec.message, time.perf_counter() - t0)
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    wrapper.__wrapped__ = fn
    return wrapper


def jac_i_matrix(n: int) -> IntMatrix:
    """-1 at (1, n), 1 at (n, 1), identity on the middle block."""
    rows = [[0] * n for _ in range(n)]
    rows[0][n - 1] = -1
    rows[n - 1][0] = 1
    for i in range(1, n - 1):
        rows[i][i] = 1
    return tuple(tuple(r) for r in rows)


@_timed
def verify_lemma_jac_i(n: int) -> CheckRecord:
    _check_dim(n, 2)
    A = jac_i_matrix(n)
    pt = point_of(A)
    det = det_generic(n)
    delta = principal_minor(n, n - 1)
    J = jacobian([det, delta], [xi(1, n), xi(1, 1)])
    JA = J.evaluate(pt)
    minor = integer_det(JA)
    det_a = evaluate(det, pt)
    delta_a = evaluate(delta, pt)
    failures = []
    if det_a != 1:
        failures.append(f"det(A) = {det_a}")
    if delta_a != 0:
        failures.append(f"Delta_{n - 1}(A) = {delta_a}")
    if abs(minor) != 1:
        failures.append(f"minor = {minor}")
    if JA[0][1] != 0 or JA[1][0] != 0:
        failures.append(f"Jacobian block at A is not diagonal: {JA}")
    return record(f"jac_i[n={n}]", ANCHOR_JAC_I, failures, [
        ("A", _fmt_int_matrix(A)),
        ("det(A)", det_a),
        (f"Delta_{n - 1}(A)", delta_a),
        ("jacobian[(det, Delta), (xi_1_n, xi_1_1)](A)", _fmt_int_matrix(JA)),
        ("minor", minor),
    ])


def jac_ii_matrix(n: int) -> IntMatrix:
    if n < 3:
        raise ValueError("needs n >= 3")
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = 1
    rows[0][n - 1] = (-1) ** n
    rows[1][1] = 1
    rows[2][0] = rows[2][1] = 1
    for r in range(3, n):
        rows[r][r - 1] = 1
    return tuple(tuple(r) for r in rows)


def jac_ii_alpha(n: int) -> tuple[tuple[int, int], ...]:
    """(1,1), (2,2), ..., (2,n-1), (n,n), (n-1,n), ..., (2,n), (2,1), (1,2)."""
    return (((1, 1),) + tuple((2, i) for i in range(2, n))
            + tuple((i, n) for i in range(n, 1, -1)) + ((2, 1), (1, 2)))


@_timed
def verify_lemma_jac_ii(n: int) -> CheckRecord:
    _check_dim(n, 3)
    A = jac_ii_matrix(n)
    pt = point_of(A)
    alpha = jac_ii_alpha(n)
    d = compute_d(n)
    s = [invariant_s(n, k) for k in range(1, n + 1)]
    deltas = [principal_minor(n, k) for k in range(1, n)]
    cols = [xi(i, j) for i, j in alpha]

    J = jacobian(s + [d] + deltas, cols)
    minor = minor_at(J, range(2 * n), range(2 * n), pt)
    det_a = evaluate(det_generic(n), pt)
    d_a = evaluate(d, pt)
    d12 = evaluate(partial_derivative(d, xi(1, 2)), pt)

    # rows reordered as Delta_1..Delta_(n-1), s_1..s_n, d
    tri = jacobian(deltas + s + [d], cols).evaluate(pt)
    failures = []
    if det_a != 1:
        failures.append(f"det(A) = {det_a}")
    if d_a != 0:
        failures.append(f"d(A) = {d_a}")
    if abs(minor) != 1:
        failures.append(f"minor = {minor}")
    if abs(d12) != 1:
        failures.append(f"(d_12 d)(A) = {d12}")
    for i, row in enumerate(tri):
        if any(row[j] for j in range(i + 1, 2 * n)):
            failures.append(f"row {i} has entries above the diagonal")
        if abs(row[i]) != 1:
            failures.append(f"diagonal entry {i} is {row[i]}")
    return record(f"jac_ii[n={n}]", ANCHOR_JAC_II, failures, [
        ("A", _fmt_int_matrix(A)),
        ("alpha", " ".join(f"({i},{j})" for i, j in alpha)),
        ("det(A)", det_a),
        ("d(A)", d_a),
        ("(d_12 d)(A)", d12),
        ("minor", minor),
        ("triangular(A)", _fmt_int_matrix(tri)),
    ])


def expected_lt_det(n: int) -> Monomial:
    return Monomial((xi(i, i), 1) for i in range(1, n + 1))


def expected_lt_d(n: int) -> Monomial:
    return Monomial((xi(i, i - 1), i - 1) for i in range(2, n + 1))


@_timed
def check_leading_terms(n: int) -> CheckRecord:
    order = lex_xi(n)
    m_det, c_det = leading_term(det_generic(n), order)
    m_d, c_d = leading_term(compute_d(n), order)
    failures = []
    if m_det != expected_lt_det(n) or abs(c_det) != 1:
        failures.append(f"LT(det) = {c_det}*{m_det!r}")
    if m_d != expected_lt_d(n) or abs(c_d) != 1:
        failures.append(f"LT(d) = {c_d}*{m_d!r}")
    return record(f"leading_terms[n={n}]", ANCHOR_LT, failures, [
        ("LT(det)", format_poly(Polynomial({m_det: c_det}), order)),
        ("LT(d)", format_poly(Polynomial({m_d: c_d}), order)),
    ])


@_timed
def check_charpoly_identity(n: int) -> CheckRecord:
    t = Polynomial.var(x(1))
    X = generic_matrix(n)
    shifted = PolyMatrix(tuple(
        tuple((t if i == j else Polynomial()) - X[i, j] for j in range(n)) for i in range(n)))
    lhs = shifted.det("bareiss")
    rhs = t ** n
    for i in range(1, n + 1):
        rhs = rhs + (-1) ** i * invariant_s(n, i) * t ** (n - i)
    failures = [] if lhs == rhs else ["char. poly mismatch"]
    return record(f"charpoly[n={n}]", ANCHOR_CHARPOLY, failures, [
        ("terms", len(lhs)),
    ])


@_timed
def check_vector_equation(n: int) -> CheckRecord:
    r = vector_equation_residual(n)
    M = build_M(n)
    failures = [f"r_{k + 1} involves column {n}" for k, rk in enumerate(r) if not last_column_free(rk, n)]
    failures += [f"M[{k + 1},{i + 1}] involves column {n}" for k in range(n) for i in range(n)
                 if not last_column_free(M[k, i], n)]
    order = reading_order(n)
    return record(f"vector_equation[n={n}]", ANCHOR_VECTOR_EQ, failures, [
        ("M", M.render(order)),
        ("r_1", format_poly(r[0], order)),
    ])


@_timed
def check_d_methods(n: int) -> CheckRecord:
    by_det = compute_d(n, "determinant")
    by_perm = compute_d(n, "permutation_sum")
    failures = [] if by_det == by_perm else ["determinant and permutation expansion differ"]
    return record(f"d_permutation_sum[n={n}]", ANCHOR_D_PERM, failures, [
        ("terms", len(by_det)),
        ("d" if n <= 3 else "LT(d)",
         format_poly(by_det, lex_xi(n)) if n <= 3
         else format_poly(Polynomial(dict([leading_term(by_det, lex_xi(n))])), lex_xi(n))),
    ])


def random_sl_vector(n: int, rng: random.Random, bound: int = 9) -> tuple[int, ...]:
    a = [rng.randint(-bound, bound) for _ in range(n - 1)]
    return tuple(a + [(-1) ** (n - 1)])


@_timed
def check_companion_certificates(n: int, count: int = 200, seed: int = 0) -> CheckRecord:
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        a = random_sl_vector(n, rng)
        A = companion_matrix(a)
        if d_at(A) != 1:
            failures.append(f"d(x_a) != 1 for a={a}")
        if n >= 2 and int_principal_minor(A, n - 1) != 0:
            failures.append(f"Delta_(n-1)(x_a) != 0 for a={a}")
        if integer_det(A) != 1:
            failures.append(f"det(x_a) != 1 for a={a}")
        for i in range(1, n + 1):
            if int_s(A, i) != (-1) ** (i + 1) * a[i - 1]:
                failures.append(f"s_{i}(x_a) wrong for a={a}")
        if len(failures) > 10:
            break
    return record(f"companion[n={n}]", ANCHOR_COMPANION, failures, [
        ("samples", count), ("seed", seed),
    ])


def random_int_matrix(n: int, rng: random.Random, shape: str = "full", bound: int = 5) -> IntMatrix:
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            zero = (shape == "lower" and j > i) or (shape == "upper" and j < i)
            row.append(0 if zero else rng.randint(-bound, bound))
        rows.append(tuple(row))
    return tuple(rows)


def matmul(A, B) -> IntMatrix:
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in zip(*B)) for row in A)


@_timed
def check_minor_multiplicativity(n: int, count: int = 200, seed: int = 0) -> CheckRecord:
    rng = random.Random(seed)
    failures = []
    for trial in range(count):
        if trial % 2:
            A, B = random_int_matrix(n, rng, "lower"), random_int_matrix(n, rng)
        else:
            A, B = random_int_matrix(n, rng), random_int_matrix(n, rng, "upper")
        AB = matmul(A, B)
        for k in range(1, n + 1):
            if int_principal_minor(AB, k) != int_principal_minor(A, k) * int_principal_minor(B, k):
                failures.append(f"trial {trial}, k={k}")
    return record(f"minor_multiplicativity[n={n}]", ANCHOR_MINOR_MULT, failures, [
        ("samples", count), ("seed", seed),
    ])


def _fmt_int_matrix(A) -> str:
    return "[" + "; ".join(" ".join(str(v) for v in r) for r in A) + "]"
