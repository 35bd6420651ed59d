from fractions import Fraction

import pytest

from qexpmap.algebra_u import u_presentation, ugen
from qexpmap.expmap import (comodule_identities, delta_l_identities, l_matrix,
                            pi_t_vs_r_identities, qexp,
                            quasitriangular_identities, r_matrix_rep,
                            rll_identities, t_counit_identities,
                            t_matrix_closed, t_matrix_factorized,
                            tprime_r_identities)
from qexpmap.matrices import Matrix
from qexpmap.rewrite import NCPoly
from qexpmap.suites import printed_r_half

import oracles

HALF = Fraction(1, 2)


def assert_all(identities):
    failing = [i.label for i in identities if not i.holds_exactly()]
    assert not failing, f"failing identities: {failing}"


def jz_grid(max_j):
    out, j = [], HALF
    while j <= max_j:
        for dz in (Fraction(0), HALF, Fraction(1)):
            out.append((j, j - dz))
        j += HALF
    return out


class TestTMatrices:
    def test_fundamental_is_defining(self):
        t = t_matrix_closed(HALF, HALF, "symmetric")
        assert (t - oracles.t_defining()).is_zero()

    def test_spin_one_charge_half(self):
        # entrywise closed form with radical coefficients
        t = t_matrix_closed(1, HALF, "symmetric")
        assert (t - oracles.t_spin1_charge_half()).is_zero()

    @pytest.mark.parametrize("norm", ["rational", "symmetric"])
    def test_closed_equals_factorized(self, norm):
        for j, z in jz_grid(Fraction(3, 2)):
            lhs = t_matrix_closed(j, z, norm)
            rhs = t_matrix_factorized(j, z, norm)
            assert (lhs - rhs).is_zero(), f"(j={j}, z={z}, {norm})"

    def test_comodule_and_counit(self):
        for j, z in jz_grid(Fraction(3, 2)):
            assert_all(comodule_identities(j, z))
            assert_all(t_counit_identities(j, z))


class TestQExp:
    def test_nilpotent_series_terminates(self):
        rep_dim = 3
        pres = u_presentation()
        one = NCPoly.one(pres)
        zero = NCPoly.zero(pres)
        n = Matrix.build(rep_dim, rep_dim,
                         lambda r, c: one if c == r + 1 else zero)
        result = qexp(1, n, one)
        assert result[0, 1] == one  # [1]! = 1 prefactor

    def test_non_nilpotent_rejected(self):
        pres = u_presentation()
        m = Matrix([[ugen("k")]])
        with pytest.raises(ArithmeticError):
            qexp(1, m, NCPoly.one(pres))


class TestRMatrices:
    def test_fundamental_closed_form(self):
        got = r_matrix_rep(HALF, HALF, HALF, HALF)
        assert (got - printed_r_half()).is_zero()

    def test_quasitriangular(self):
        assert_all(quasitriangular_identities(HALF, HALF, HALF, HALF))
        assert_all(quasitriangular_identities(HALF, HALF, 1, 1))


class TestLMatrices:
    def test_fundamental_pair(self):
        for sign in ("+", "-"):
            got = l_matrix(sign, HALF, "symmetric")
            assert (got - oracles.l_fundamental(sign)).is_zero()

    def test_spin_one_pair(self):
        for sign in ("+", "-"):
            got = l_matrix(sign, 1, "symmetric")
            assert (got - oracles.l_spin1(sign)).is_zero()

    def test_rll(self):
        for j in (HALF, Fraction(1)):
            assert_all(rll_identities(j))

    def test_comodule(self):
        for sign in ("+", "-"):
            for j in (HALF, Fraction(1)):
                assert_all(delta_l_identities(sign, j))


class TestIntertwiners:
    def test_pi_t_vs_r(self):
        for j in (HALF, Fraction(1)):
            assert_all(pi_t_vs_r_identities(j))

    def test_tprime_vs_r(self):
        for j1, j2 in ((HALF, HALF), (HALF, Fraction(1)), (Fraction(1), HALF)):
            assert_all(tprime_r_identities(j1, j2))
