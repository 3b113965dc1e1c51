import itertools

import pytest
import sympy
from sympy.polys.polyfuncs import symmetrize

from centrecert.polyring import Monomial, Polynomial, degrevlex_u, format_poly, u, x
from centrecert.symfun import (
    NotSymmetricError, SymFunTask, _compute_F, check_f_mod_p, check_f_properties,
    check_substitution, check_x_properties, compute_F, compute_f, elementary_sigma,
    express_in_elementaries, is_power_of, is_symmetric, power_sum_sigma,
    substitute_elementaries,
)

from oracles import from_sympy, random_poly, sym


def X(k):
    return Polynomial.var(x(k))


def U(k):
    return Polynomial.var(u(k))


def sympy_F(n, l, i):
    """F_i via sympy's own symmetric reduction, renamed into u_1..u_n."""
    xs = [sym(x(k)) for k in range(1, n + 1)]
    h = sum(sympy.Mul(*[xs[k] ** l for k in c])
            for c in itertools.combinations(range(n), i))
    expr, rem, defs = symmetrize(sympy.expand(h), *xs, formal=True)
    assert rem == 0
    rename = {s: sym(u(k + 1)) for k, (s, _) in enumerate(defs)}
    return from_sympy(expr.subs(rename), [u(k) for k in range(1, n + 1)])


def test_elementary_sigma_examples():
    assert elementary_sigma(2, 1) == X(1) + X(2)
    assert elementary_sigma(3, 3) == X(1) * X(2) * X(3)
    assert elementary_sigma(3, 2) == X(1) * X(2) + X(1) * X(3) + X(2) * X(3)
    with pytest.raises(ValueError):
        elementary_sigma(3, 4)


def test_express_examples():
    assert express_in_elementaries(elementary_sigma(3, 2), 3) == U(2)
    assert express_in_elementaries(X(1) ** 2 + X(2) ** 2, 2) == U(1) ** 2 - 2 * U(2)
    h = X(1) ** 3 + X(2) ** 3 + X(3) ** 3
    assert express_in_elementaries(h, 3) == U(1) ** 3 - 3 * U(1) * U(2) + 3 * U(3)
    assert express_in_elementaries(Polynomial.constant(7), 2) == Polynomial.constant(7)


def test_express_rejects_non_symmetric():
    with pytest.raises(NotSymmetricError):
        express_in_elementaries(X(1) ** 2 + X(2), 2)
    with pytest.raises(ValueError):
        express_in_elementaries(X(4), 3)


def test_is_symmetric():
    assert is_symmetric(elementary_sigma(4, 2), 4)
    assert not is_symmetric(X(1) * X(2), 3)


def test_compute_F_examples():
    assert compute_F(SymFunTask(2, 3, 1)) == U(1) ** 3 - 3 * U(1) * U(2)
    assert compute_F(SymFunTask(3, 3, 1)) == U(1) ** 3 - 3 * U(1) * U(2) + 3 * U(3)
    # i = n: sigma_n(x^l) = sigma_n^l
    assert _compute_F(3, 5, 3) == U(3) ** 5


def test_compute_f_examples():
    assert compute_f(SymFunTask(2, 3, 1)) == U(1) ** 3 - 3 * U(1)
    assert compute_f(SymFunTask(3, 3, 1)) == U(1) ** 3 - 3 * U(1) * U(2) + 3
    # l = 1 is outside the task domain; the underlying conversion gives u_1
    assert _compute_F(2, 1, 1) == U(1)


def test_show_format_of_f():
    assert format_poly(compute_f(SymFunTask(2, 3, 1)), degrevlex_u(2)) == "u_1^3 − 3*u_1"


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("l", [3, 5])
def test_F_against_sympy_symmetrize(n, l):
    for i in range(1, n):
        assert compute_F(SymFunTask(n, l, i)) == sympy_F(n, l, i)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("l", [3, 5])
def test_substitution_oracle(n, l):
    for i in range(1, n):
        task = SymFunTask(n, l, i)
        assert substitute_elementaries(compute_F(task), n) == power_sum_sigma(n, l, i)
        assert check_substitution(task).passed


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("l", [3, 5])
def test_f_properties(n, l):
    for i in range(1, n):
        rec = check_f_properties(SymFunTask(n, l, i))
        assert rec.passed, rec.message


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("l", [3, 5])
def test_x_properties(n, l):
    for i in range(1, n):
        assert check_x_properties(SymFunTask(n, l, i)).passed


def test_n2_f_has_odd_degree_l():
    for l in (3, 5, 7, 9):
        f = compute_f(SymFunTask(2, l, 1))
        assert f.total_degree() == l


def test_coefficients_are_integers():
    for i in (1, 2, 3):
        assert all(isinstance(c, int) for _, c in compute_F(SymFunTask(4, 5, i)))


def test_express_is_left_inverse_of_substitution(rng):
    vs = [u(1), u(2), u(3)]
    for _ in range(200):
        H = random_poly(rng, vs, max_terms=4, max_deg=3)
        assert express_in_elementaries(substitute_elementaries(H, 3), 3) == H


def test_f_mod_p_examples():
    rec = check_f_mod_p(SymFunTask(2, 3, 1), 3)
    assert rec.passed and rec.witness("f mod p") == "u_1^3"
    assert check_f_mod_p(SymFunTask(3, 3, 1), 3).passed
    assert check_f_mod_p(SymFunTask(2, 9, 1), 3).passed
    assert check_f_mod_p(SymFunTask(3, 5, 2), 5).passed


def test_f_mod_p_fails_when_l_is_not_a_p_power():
    with pytest.raises(ValueError):
        check_f_mod_p(SymFunTask(2, 9, 1), 5)
    # the congruence itself genuinely needs l = p^k: 15 is 3 * 5
    f = compute_f(SymFunTask(2, 15, 1))
    assert any(c % 3 for m, c in f if m != Monomial.of((u(1), 15)))


def test_is_power_of():
    assert is_power_of(9, 3) and is_power_of(3, 3) and is_power_of(125, 5)
    assert not is_power_of(1, 3) and not is_power_of(15, 3) and not is_power_of(9, 2)


def test_task_validation():
    for bad in ((1, 3, 1), (3, 4, 1), (3, 1, 1), (3, 3, 3), (3, 3, 0)):
        with pytest.raises(ValueError):
            SymFunTask(*bad)
