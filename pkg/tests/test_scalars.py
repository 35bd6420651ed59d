import math
import random
from fractions import Fraction

import pytest

from qexpmap.scalars import (FracScalar, HalfLaurent, NumericParams,
                             Q_pow, RadScalar, ScalarError, eval_numeric,
                             lam_pow, p_pow, q_pow, qfact, qint,
                             rad_normalize, scalar_from_json,
                             scalar_lambda_one, scalar_to_json)


def rand_halflaurent(rng, nterms=4):
    terms = {}
    for _ in range(nterms):
        key = (rng.randint(-4, 4), rng.randint(-4, 4))
        terms[key] = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
    return HalfLaurent(terms)


class TestHalfLaurent:
    def test_pq_monomials(self):
        assert p_pow(1) == Q_pow(2) * lam_pow(2)
        assert q_pow(1) == Q_pow(2) * lam_pow(-2)
        assert p_pow(1) * q_pow(1) == Q_pow(4)
        assert p_pow(1) * q_pow(-1) == lam_pow(4)

    def test_ring_axioms_random(self):
        rng = random.Random(7)
        for _ in range(40):
            x, y, z = (rand_halflaurent(rng) for _ in range(3))
            assert x + y == y + x
            assert (x + y) + z == x + (y + z)
            assert x * (y + z) == x * y + x * z
            assert (x * y) * z == x * (y * z)

    def test_divexact_roundtrip(self):
        rng = random.Random(11)
        for _ in range(30):
            x, y = rand_halflaurent(rng), rand_halflaurent(rng)
            if y.is_zero():
                continue
            assert (x * y).divexact(y) == x

    def test_qint_values(self):
        assert qint(1) == HalfLaurent.one()
        assert qint(2) == Q_pow(2) + Q_pow(-2)
        assert qint(3) == Q_pow(4) + HalfLaurent.one() + Q_pow(-4)
        assert qfact(3) == qint(1) * qint(2) * qint(3)

    def test_lambda_one_substitution(self):
        x = p_pow(1) - q_pow(1)
        assert scalar_lambda_one(x).is_zero()
        assert scalar_lambda_one(p_pow(2)) == Q_pow(4)

    def test_json_roundtrip(self):
        rng = random.Random(3)
        for _ in range(10):
            x = rand_halflaurent(rng)
            assert HalfLaurent.from_json(x.to_json()) == x


class TestFracScalar:
    def test_cross_multiplied_equality(self):
        # same value, different representatives
        x = FracScalar(qint(2) * qint(3), qint(3))
        y = FracScalar(qint(2), HalfLaurent.one())
        assert x == y
        assert (x - y).is_zero()

    def test_field_ops(self):
        x = FracScalar(qint(2), qint(3))
        assert (x * x ** -1).is_one()
        assert (x / x).is_one()
        assert (x + (-x)).is_zero()

    def test_numeric_matches_exact(self):
        params = NumericParams(1.3, 0.7)
        x = FracScalar(qint(4), qint(2))
        # [4]/[2] = Q^2 + Q^-2
        expect = params.Q ** 2 + params.Q ** -2
        assert math.isclose(x.eval_numeric(params), expect, rel_tol=1e-12)

    def test_json_roundtrip(self):
        x = FracScalar(qint(5), qfact(3))
        assert FracScalar.from_json(x.to_json()) == x


class TestRadScalar:
    def test_square_pairs_extracted(self):
        x = RadScalar.sqrt_qints([2, 2])
        assert x == RadScalar([(FracScalar(qint(2)), ())])

    def test_sqrt_product(self):
        x = RadScalar.sqrt_qints([2])
        assert (x * x) == RadScalar([(FracScalar(qint(2)), ())])

    def test_like_terms_collect(self):
        x = RadScalar.sqrt_qints([3]) + RadScalar.sqrt_qints([3])
        assert x == RadScalar.sqrt_qints([3], 2)
        assert (x - x).is_zero()

    def test_rad_normalize_idempotent(self):
        x = RadScalar.sqrt_qints([2, 3, 3], Fraction(5, 3))
        assert rad_normalize(x) == x
        assert rad_normalize(rad_normalize(x)) == rad_normalize(x)

    def test_rad_normalize_value_preserving(self):
        rng = random.Random(5)
        for _ in range(10):
            params = NumericParams(rng.uniform(0.5, 2), rng.uniform(0.5, 2))
            x = RadScalar.sqrt_qints([2, 2, 3], Fraction(7, 2))
            a = x.eval_numeric(params)
            b = rad_normalize(x).eval_numeric(params)
            assert math.isclose(a, b, rel_tol=1e-12)

    def test_index_one_dropped(self):
        assert RadScalar.sqrt_qints([1, 2]) == RadScalar.sqrt_qints([2])

    def test_negative_radicand_rejected(self):
        with pytest.raises(ScalarError):
            RadScalar.sqrt_qints([-2])

    def test_json_roundtrip(self):
        x = RadScalar.sqrt_qints([2, 3]) + RadScalar.sqrt_qints([5], 2)
        assert RadScalar.from_json(x.to_json()) == x


class TestNumericParams:
    def test_rejects_degenerate(self):
        with pytest.raises(ScalarError):
            NumericParams(1.0, 1.0)  # Q = 1 makes every [n] vanish
        with pytest.raises(ScalarError):
            NumericParams(-1.0, 2.0)

    def test_derived_quantities(self):
        params = NumericParams(2.0, 0.8)
        assert math.isclose(params.p, 2.0)
        assert math.isclose(params.q, 0.8)
        assert math.isclose(params.Q ** 2, params.p * params.q, rel_tol=1e-12)
        assert math.isclose(params.lam ** 2, params.p / params.q,
                            rel_tol=1e-12)


def test_scalar_json_dispatch():
    for x in (qint(3), FracScalar(qint(2), qint(3)),
              RadScalar.sqrt_qints([2])):
        y = scalar_from_json(scalar_to_json(x))
        assert (x - y).is_zero()


def test_eval_numeric_plain_numbers():
    params = NumericParams(1.5, 0.8)
    assert eval_numeric(Fraction(3, 4), params) == 0.75
    assert eval_numeric(2, params) == 2.0
