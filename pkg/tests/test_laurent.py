"""Unit and property tests for the exact Laurent polynomial kernel."""

import pytest
from hypothesis import given, settings, strategies as st

from pretzelhomfly.errors import DivisionByZero, NotDivisible
from pretzelhomfly.laurent import LaurentPoly, Monomial

A = LaurentPoly.var_A()
q = LaurentPoly.var_q()
one = LaurentPoly.one()


def poly_strategy(max_terms=6, max_exp=4, max_coeff=30):
    term = st.tuples(st.integers(-max_exp, max_exp),
                     st.integers(-max_exp, max_exp),
                     st.integers(-max_coeff, max_coeff).filter(bool))
    return st.lists(term, max_size=max_terms).map(
        lambda ts: LaurentPoly({(a, b): c for a, b, c in ts}))


def nonzero_poly():
    return poly_strategy().filter(lambda p: not p.is_zero)


monomials = st.builds(Monomial, st.sampled_from((1, -1)),
                      st.integers(-3, 3), st.integers(-3, 3))


class TestBasics:
    def test_zero_one(self):
        assert LaurentPoly.zero().is_zero
        assert one.is_one
        assert (one - one).is_zero

    def test_text_round_trip(self):
        p = LaurentPoly({(0, 2): 7, (0, 0): -13, (0, -2): 7})
        assert p.to_text() == "7*q^2 - 13 + 7*q^-2"
        assert LaurentPoly.from_text(p.to_text()) == p

    def test_json_round_trip(self):
        p = A * A - q + LaurentPoly.const(3)
        assert LaurentPoly.from_json(p.to_json()) == p

    def test_substitute_A(self):
        p = A * q - one
        assert p.substitute("A", Monomial(1, 0, 1)) == q * q - one

    def test_strip_monomial(self):
        p = (A - q).shift(Monomial(-1, 2, -3))
        unit, stripped = p.strip_monomial()
        assert stripped == A - q or stripped == q - A
        assert stripped.shift(unit) == p


class TestRingAxioms:
    @given(poly_strategy(), poly_strategy(), poly_strategy())
    @settings(max_examples=60, deadline=None)
    def test_associativity_distributivity(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(poly_strategy(), poly_strategy())
    @settings(max_examples=60, deadline=None)
    def test_commutativity(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @given(poly_strategy())
    @settings(max_examples=60, deadline=None)
    def test_identities(self, a):
        assert a + LaurentPoly.zero() == a
        assert a * one == a
        assert a - a == LaurentPoly.zero()


class TestExactDivision:
    @given(nonzero_poly(), nonzero_poly())
    @settings(max_examples=60, deadline=None)
    def test_product_division_round_trip(self, a, b):
        assert (a * b).exact_div(b) == a

    @given(nonzero_poly())
    @settings(max_examples=40, deadline=None)
    def test_indivisible_raises(self, a):
        p = a * (A - q) + one  # remainder 1 cannot vanish
        with pytest.raises(NotDivisible):
            p.exact_div(A - q)

    def test_divide_by_zero(self):
        with pytest.raises(DivisionByZero):
            one.exact_div(LaurentPoly.zero())

    def test_known_quotient(self):
        p = A * A - q * q
        assert p.exact_div(A - q) == A + q


class TestSubstitutionHomomorphism:
    @given(poly_strategy(), poly_strategy(), monomials)
    @settings(max_examples=60, deadline=None)
    def test_respects_ring_ops(self, a, b, m):
        for var in ("A", "q"):
            assert ((a + b).substitute(var, m)
                    == a.substitute(var, m) + b.substitute(var, m))
            assert ((a * b).substitute(var, m)
                    == a.substitute(var, m) * b.substitute(var, m))


class TestSerialization:
    @given(poly_strategy())
    @settings(max_examples=60, deadline=None)
    def test_json_round_trip(self, p):
        assert LaurentPoly.from_json(p.to_json()) == p

    @given(poly_strategy())
    @settings(max_examples=60, deadline=None)
    def test_text_round_trip(self, p):
        assert LaurentPoly.from_text(p.to_text()) == p

    @given(poly_strategy())
    @settings(max_examples=60, deadline=None)
    def test_json_deterministic(self, p):
        import json
        assert json.dumps(p.to_json()) == json.dumps(
            LaurentPoly(dict(reversed(list(p.terms.items())))).to_json())
