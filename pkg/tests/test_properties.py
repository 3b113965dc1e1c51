"""Randomized property suites (fixed seed, 200 cases each) plus a few
hypothesis-driven checks on the text format and orders."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from centrecert.polyring import (
    Monomial, Polynomial, degrevlex_u, format_poly, leading_term, parse_poly, u, xi,
)

from properties import CASES, SEED, SUITES


@pytest.mark.parametrize("name", list(SUITES))
def test_property_suite(name):
    failures = SUITES[name](SEED, CASES)
    assert failures == [], f"{name} (seed {SEED}): {failures[:5]}"


VARS = [u(1), u(2), u(3), xi(1, 1), xi(2, 1)]

monomials = st.lists(st.tuples(st.sampled_from(VARS), st.integers(0, 4)), max_size=4).map(Monomial)
polys = st.dictionaries(monomials, st.integers(-10 ** 30, 10 ** 30), max_size=6).map(Polynomial)


@settings(max_examples=200, derandomize=True)
@given(polys)
def test_text_round_trip(f):
    assert parse_poly(format_poly(f)) == f


@settings(max_examples=200, derandomize=True)
@given(polys, polys)
def test_degrevlex_lt_of_product(f, g):
    order = degrevlex_u(4)
    f = Polynomial({m: c for m, c in f if all(v.kind == "u" for v, _ in m)})
    g = Polynomial({m: c for m, c in g if all(v.kind == "u" for v, _ in m)})
    if f and g:
        (mf, cf), (mg, cg) = leading_term(f, order), leading_term(g, order)
        assert leading_term(f * g, order) == (mf * mg, cf * cg)


@settings(max_examples=200, derandomize=True)
@given(polys)
def test_negation_and_zero(f):
    assert not f + (-f)
    assert -(-f) == f
    assert (f == Polynomial()) == (not f)
