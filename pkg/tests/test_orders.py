"""Order axioms, checked exhaustively on all monomials of degree <= 4 in 4 variables."""

import itertools

import pytest

from centrecert.polyring import (
    BlockProduct, DegLex, DegRevLex, Lex, Monomial, OrderUniverseError, u, xi, z,
)

VARS = [z(1), u(1), u(2), xi(1, 1)]


def _monomials(max_deg=4):
    out = []
    for exps in itertools.product(range(max_deg + 1), repeat=len(VARS)):
        if sum(exps) <= max_deg:
            out.append(Monomial(zip(VARS, exps)))
    return out


MONOS = _monomials()
ORDERS = {
    "lex": Lex(VARS),
    "deglex": DegLex(VARS),
    "degrevlex": DegRevLex(VARS),
    "block": BlockProduct([Lex(VARS[:1]), DegRevLex(VARS[1:3]), Lex(VARS[3:])]),
}


@pytest.mark.parametrize("name", ORDERS)
def test_total_and_antisymmetric(name):
    order = ORDERS[name]
    keys = [order.key(m) for m in MONOS]
    # distinct monomials get distinct keys, so any two are comparable
    assert len(set(keys)) == len(MONOS)
    for a, b in itertools.combinations(MONOS[:60], 2):
        assert order.compare(a, b) == -order.compare(b, a) != 0


@pytest.mark.parametrize("name", ORDERS)
def test_one_is_minimal(name):
    order = ORDERS[name]
    one = Monomial()
    assert all(order.greater(m, one) for m in MONOS if m)


@pytest.mark.parametrize("name", ORDERS)
def test_multiplicative(name):
    order = ORDERS[name]
    small = [m for m in MONOS if m.degree <= 2]
    for a, b in itertools.combinations(small, 2):
        for c in small:
            assert order.compare(a * c, b * c) == order.compare(a, b)


@pytest.mark.parametrize("name", ORDERS)
def test_transitive_on_sorted_chain(name):
    order = ORDERS[name]
    chain = sorted(MONOS, key=order.key)
    for a, b in zip(chain, chain[1:]):
        assert order.greater(b, a)


def test_block_product_eliminates_outer_block():
    order = ORDERS["block"]
    for m in MONOS:
        if m.exponent(z(1)) == 0:
            assert order.greater(Monomial.of(z(1)), m)


def test_universe_is_enforced():
    with pytest.raises(OrderUniverseError):
        ORDERS["lex"].key(Monomial.of(u(5)))
