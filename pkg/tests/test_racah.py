"""Racah matrices: printed r=1 entries, unitarity, radical shapes and the
behaviour of the first rows at the four special substitutions."""

import pytest

from pretzelhomfly.errors import IndexOutOfRange, RadicalResidue
from pretzelhomfly.laurent import LaurentPoly, Monomial
from pretzelhomfly.qcore import RationalFn
from pretzelhomfly.racah import (RadicalContext, RadicalValue, build_S,
                                 build_Sbar, build_Tbar, first_row_squares_at,
                                 sigma, twist_row)

A = LaurentPoly.var_A()
q = LaurentPoly.var_q()
one = LaurentPoly.one()

SPECIAL = [("A=q", Monomial(1, 0, 1)), ("A=-q", Monomial(-1, 0, 1)),
           ("A=1/q", Monomial(1, 0, -1)), ("A=-1/q", Monomial(-1, 0, -1))]


@pytest.fixture(scope="module")
def matrices():
    out = {}
    for r in (1, 2, 3):
        ctx = RadicalContext(r)
        out[r] = (ctx, build_S(r, ctx), build_Sbar(r, ctx))
    return out


class TestPrintedR1Entries:
    def test_S_squares(self, matrices):
        _, S, _ = matrices[1]
        den = (A * A - one) * (q * q + one)
        assert S[0][0].squared() == RationalFn.from_ratio((A - q) * (A + q), den)
        assert S[0][1].squared() == RationalFn.from_ratio(
            (A * q - one) * (A * q + one), den)

    def test_S_symmetry(self, matrices):
        _, S, _ = matrices[1]
        assert S[0][0].squared() == S[1][1].squared()
        assert S[0][1].squared() == S[1][0].squared()

    def test_Sbar_diagonal_rational(self, matrices):
        _, _, Sbar = matrices[1]
        expect = RationalFn.from_ratio(
            A * (q * q - one), (A * A - one) * q)
        assert Sbar[0][0].to_rational() == expect
        # the (1,1) entry agrees up to sign; signs are recorded, not assumed
        assert Sbar[1][1].to_rational() == -expect
        assert Sbar[1][1].squared() == Sbar[0][0].squared()

    def test_Sbar_off_diagonal_square(self, matrices):
        _, _, Sbar = matrices[1]
        diag_sq = Sbar[0][0].squared()
        radical = RationalFn.from_ratio(
            (A - q) * (A + q) * (A * q - one) * (A * q + one),
            A * A * (q * q - one) * (q * q - one))
        assert Sbar[0][1].squared() == diag_sq * radical


class TestTbar:
    def test_r1(self):
        assert build_Tbar(1, 1) == [Monomial(1, 0, 0), Monomial(-1, 1, 0)]
        assert build_Tbar(1, 3) == [Monomial(1, 0, 0), Monomial(-1, 3, 0)]

    def test_identity_at_n0(self):
        for r in (1, 2, 3):
            assert build_Tbar(r, 0) == [Monomial(1, 0, 0)] * (r + 1)

    def test_general_entry(self):
        # entry m of Tbar^n is (-q^(m-1) A)^(mn)
        tb = build_Tbar(2, 3)
        assert tb[1] == Monomial(-1, 3, 0)
        assert tb[2] == Monomial(1, 6, 6)


class TestUnitarity:
    @pytest.mark.parametrize("r", (1, 2, 3))
    def test_first_row_S(self, matrices, r):
        _, S, _ = matrices[r]
        total = RationalFn.zero()
        for x in range(r + 1):
            total = total + S[0][x].squared()
        assert total == RationalFn.one()

    @pytest.mark.parametrize("r", (1, 2, 3))
    def test_first_row_Sbar(self, matrices, r):
        _, _, Sbar = matrices[r]
        total = RationalFn.zero()
        for x in range(r + 1):
            total = total + Sbar[0][x].squared()
        assert total == RationalFn.one()


class TestRadicalShapes:
    @pytest.mark.parametrize("r", (1, 2, 3, 4, 5))
    def test_build_asserts_rad_shape(self, r):
        # build_S / build_Sbar / twist_row raise RadicalResidue on any
        # entry whose radical falls outside the declared basis
        ctx = RadicalContext(r)
        S = build_S(r, ctx)
        Sbar = build_Sbar(r, ctx)
        row = twist_row(r, 1, S, Sbar, ctx)
        for x, entry in enumerate(row):
            assert entry.rad <= {("chi", x)}

    def test_radical_addition_mismatch(self):
        ctx = RadicalContext(2)
        a = RadicalValue(ctx, RationalFn.one(), frozenset({("chi", 1)}))
        b = RadicalValue(ctx, RationalFn.one(), frozenset({("chi", 2)}))
        with pytest.raises(RadicalResidue):
            a + b

    def test_sigma_index_errors(self):
        with pytest.raises(IndexOutOfRange):
            sigma(0, 3, 4, 2)
        with pytest.raises(IndexOutOfRange):
            sigma(0, 0, 0, 1)


class TestSpecializations:
    """At A = +-q the first rows collapse to indicator vectors. At
    A = +-1/q the collapse claimed alongside it does not happen: at r = 1
    the indicator flips to m = 0, and for r >= 2 the entries have genuine
    poles.  The tests pin the observed behaviour; signs are recorded from
    observation, not assumed."""

    @pytest.mark.parametrize("r", (1, 2, 3))
    @pytest.mark.parametrize("label,mono", SPECIAL[:2])
    def test_indicators_at_A_eq_pm_q(self, matrices, r, label, mono):
        _, S, Sbar = matrices[r]
        s_sq = first_row_squares_at(S, mono)
        sb_sq = first_row_squares_at(Sbar, mono)
        for m in range(r + 1):
            assert s_sq[m] == (RationalFn.one() if m == r else RationalFn.zero())
            assert sb_sq[m] == (RationalFn.one() if m == 0 else RationalFn.zero())

    @pytest.mark.parametrize("label,mono", SPECIAL[2:])
    def test_r1_flipped_indicator_at_A_eq_pm_inv_q(self, matrices, label, mono):
        _, S, Sbar = matrices[1]
        s_sq = first_row_squares_at(S, mono)
        assert s_sq == [RationalFn.one(), RationalFn.zero()]
        sb_sq = first_row_squares_at(Sbar, mono)
        assert sb_sq == [RationalFn.one(), RationalFn.zero()]

    def test_Sbar00_observed_signs(self, matrices):
        _, _, Sbar = matrices[1]
        entry = Sbar[0][0].to_rational()
        observed = [entry.substitute("A", mono).to_poly()
                    for _, mono in SPECIAL]
        assert observed == [one, -one, -one, one]

    @pytest.mark.parametrize("r", (2, 3))
    @pytest.mark.parametrize("label,mono", SPECIAL[2:])
    def test_poles_at_A_eq_pm_inv_q(self, matrices, r, label, mono):
        _, S, Sbar = matrices[r]
        s_sq = first_row_squares_at(S, mono)
        sb_sq = first_row_squares_at(Sbar, mono)
        if r == 2:
            assert all(v is None for v in s_sq)
            assert all(v is None for v in sb_sq)
        else:
            # only S_00 and Sbar_0r stay finite at r = 3
            assert s_sq[0] is not None
            assert all(v is None for v in s_sq[1:])
            assert sb_sq[r] is not None
            assert all(v is None for v in sb_sq[:r])


class TestTwistRow:
    def test_r1_entry_rad_shape(self, matrices):
        ctx, S, Sbar = matrices[1]
        row = twist_row(1, 1, S, Sbar, ctx)
        # entry x carries exactly sqrt(chi_x); chi_0 = chi_{[1,1]} here
        assert row[0].rad <= {("chi", 0)}
        assert row[1].rad <= {("chi", 1)}

    def test_n_zero_is_Sbar_S_row(self, matrices):
        ctx, S, Sbar = matrices[2]
        row = twist_row(2, 0, S, Sbar, ctx)
        # Sbar . S is an involution-like product; its row 0 squared sums to 1
        total = RationalFn.zero()
        for entry in row:
            total = total + entry.squared()
        assert total == RationalFn.one()
