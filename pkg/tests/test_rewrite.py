import random
from fractions import Fraction

import pytest

from qexpmap.algebra_a import a_parse, apq_presentation
from qexpmap.algebra_u import u_presentation
from qexpmap.confluence import confluence_check
from qexpmap.reporting import Identity
from qexpmap.rewrite import (GuardExceeded, NCPoly, ParseError, normal_order,
                             tensor_square)
from qexpmap.scalars import NumericParams


def rand_word(rng, pres, max_len):
    gens = [g for g, kind in pres.generators]
    atoms = []
    for _ in range(rng.randint(0, max_len)):
        g = rng.choice(gens)
        kind = dict(pres.generators)[g]
        if kind == "scaling":
            e = Fraction(rng.choice([-2, -1, 1, 2]), 2)
        elif kind == "invertible":
            e = rng.choice([-2, -1, 1, 2])
        else:
            e = rng.randint(1, 2)
        atoms.append((g, e))
    return NCPoly(pres, [(1, tuple(atoms))])


class TestParser:
    def test_basic(self):
        x = a_parse("a*b - q*b*a")
        assert x.is_zero()

    def test_fractional_scaling_power(self):
        x = a_parse("D^1/2*D^1/2")
        assert x == a_parse("D")

    def test_parse_error(self):
        with pytest.raises(ParseError):
            a_parse("a*)b")
        with pytest.raises(ParseError):
            a_parse("a**b")


class TestNormalOrder:
    def test_defining_example(self):
        x = a_parse("d*a")
        assert x == a_parse("a*d - (q - p^-1)*b*c")

    def test_idempotent_random(self):
        rng = random.Random(17)
        pres = apq_presentation()
        for _ in range(500):
            x = rand_word(rng, pres, 6)
            assert normal_order(x) == x

    def test_rule_residuals_vanish(self):
        # every rewrite rule, read as lhs - rhs, normalizes to zero
        for lhs, rhs in [("b*a", "q^-1*a*b"), ("c*a", "p^-1*a*c"),
                         ("c*b", "q*p^-1*b*c"), ("d*b", "p^-1*b*d"),
                         ("d*c", "q^-1*c*d"),
                         ("d*a", "a*d - (q - p^-1)*b*c")]:
            assert (a_parse(lhs) - a_parse(rhs)).is_zero()

    def test_associativity_random(self):
        rng = random.Random(23)
        pres = apq_presentation()
        for _ in range(200):
            x, y, z = (rand_word(rng, pres, 3) for _ in range(3))
            assert (x * y) * z == x * (y * z)

    def test_normal_form_sorted(self):
        pres = apq_presentation()
        order = {g: i for i, (g, _) in enumerate(pres.generators)}
        x = a_parse("d*c*b*a*D^1/2")
        for word in x.terms:
            names = [g for g, _ in word]
            assert names == sorted(names, key=order.__getitem__)
            assert len(names) == len(set(names))

    def test_eval_coeffs(self):
        params = NumericParams(1.4, 0.6)
        x = a_parse("q*a*b")
        ((word, value),) = x.eval_coeffs(params).items()
        assert [g for g, _ in word] == ["a", "b"]
        assert abs(value - params.q) < 1e-12

    def test_guard_env(self, monkeypatch):
        monkeypatch.setenv("QEXPMAP_GUARD", "2")
        with pytest.raises(GuardExceeded):
            a_parse("d^3*a^3")


class TestTensor:
    def test_legs_commute(self):
        pres = apq_presentation()
        t2 = tensor_square(pres)
        x = NCPoly.gen(t2, "d@2", 1) * NCPoly.gen(t2, "a@1", 1)
        assert x == NCPoly.gen(t2, "a@1", 1) * NCPoly.gen(t2, "d@2", 1)

    def test_per_leg_rules(self):
        pres = apq_presentation()
        t2 = tensor_square(pres)
        x = NCPoly.gen(t2, "b@1", 1) * NCPoly.gen(t2, "a@1", 1)
        y = NCPoly.gen(t2, "a@1", 1) * NCPoly.gen(t2, "b@1", 1)
        assert not (x - y).is_zero()  # q-commute, not commute


class TestConfluence:
    def test_apq_length_three(self):
        report = confluence_check(apq_presentation(), max_len=3)
        assert report.confluent
        assert report.counterexamples == []
        assert report.words_checked > 0

    def test_dual_length_three(self):
        report = confluence_check(u_presentation(), max_len=3)
        assert report.confluent

    def test_report_json(self):
        report = confluence_check(u_presentation(), max_len=2)
        data = report.to_json()
        assert data["confluent"] is True


class TestSerialization:
    def test_poly_json_roundtrip(self):
        pres = apq_presentation()
        x = a_parse("D^-1/2*a^2 + (q - p^-1)*b*c - 3*d")
        assert NCPoly.from_json(pres, x.to_json()) == x

    def test_identity_residual(self):
        good = Identity("x", a_parse("a*b"), a_parse("q*b*a"))
        assert good.holds_exactly()
        bad = Identity("y", a_parse("a*b"), a_parse("b*a"))
        assert not bad.holds_exactly()
