import random

import pytest

from padicflow.errors import NonUnitInverse, PrecisionExhausted, ZeroArgument
from padicflow.padic_core import (
    PadicBall,
    PadicNumber,
    arith,
    same_side_of_zero,
    vp_fraction,
)


def num(n, p, prec=24):
    return PadicNumber.from_int(n, p, prec)


def random_nonzero(rng, p, prec=16, vmax=6):
    v = rng.randint(-vmax, vmax)
    unit = rng.randrange(1, p ** prec)
    while unit % p == 0:
        unit = rng.randrange(1, p ** prec)
    return PadicNumber(p, prec, v, unit)


class TestConstruction:
    def test_valuation_of_50_base_5(self):
        x = arith(arith(num(5, 5), num(5, 5), "mul"), num(2, 5), "mul")
        assert x.valuation == 2
        assert x.abs_log() == pytest.approx(1 / 25)

    def test_zero_flag(self):
        z = PadicNumber.zero(3)
        assert z.is_zero()
        assert z.to_dict()["digits"] == []

    def test_from_fraction(self):
        x = PadicNumber.from_fraction("9/2", 3, 8)
        assert x.valuation == 2
        # unit is 1/2 = (3^8 + 1)/2 mod 3^8
        assert (2 * x.unit) % 3 ** 8 == 1

    def test_digits_roundtrip(self):
        x = num(41, 3, 4)
        assert x.unit_digits == (2, 1, 1, 1)
        assert PadicNumber.from_dict(x.to_dict()) == x


class TestArith:
    def test_add_ultrametric_gain(self):
        # 5 + 20 = 25 in Q_5: strict gain of valuation
        s = arith(num(5, 5), num(20, 5), "add")
        assert s.valuation == 2

    def test_invert_2_mod_81(self):
        inv = arith(num(2, 3, 4), None, "invert-if-unit")
        assert inv.unit == 41
        assert inv.unit_digits == (2, 1, 1, 1)

    def test_invert_requires_unit(self):
        with pytest.raises(NonUnitInverse):
            num(3, 3).invert()
        with pytest.raises(NonUnitInverse):
            PadicNumber.zero(3).invert()

    def test_full_cancellation_raises(self):
        x = num(7, 3)
        with pytest.raises(PrecisionExhausted):
            _ = x - x

    def test_sub_matches_integers(self):
        a, b = 91, 37
        d = num(a, 3) - num(b, 3)
        assert d == num(a - b, 3)

    def test_mul_valuations_add(self):
        rng = random.Random(7)
        for _ in range(200):
            x = random_nonzero(rng, 3)
            y = random_nonzero(rng, 3)
            assert (x * y).valuation == x.valuation + y.valuation

    def test_pow(self):
        x = num(6, 3)
        assert x ** 3 == num(216, 3)


class TestSides:
    def test_examples_p3(self):
        assert same_side_of_zero(num(1, 3), num(4, 3)) is True
        assert same_side_of_zero(num(1, 3), num(3, 3)) is False
        assert same_side_of_zero(num(1, 3), num(2, 3)) is False

    def test_zero_argument(self):
        with pytest.raises(ZeroArgument):
            same_side_of_zero(num(1, 3), PadicNumber.zero(3))

    def test_equivalence_relation(self):
        rng = random.Random(11)
        pts = [random_nonzero(rng, 5, vmax=3) for _ in range(40)]
        for x in pts:
            assert same_side_of_zero(x, x)
        for _ in range(300):
            x, y, z = rng.choice(pts), rng.choice(pts), rng.choice(pts)
            assert same_side_of_zero(x, y) == same_side_of_zero(y, x)
            if same_side_of_zero(x, y) and same_side_of_zero(y, z):
                assert same_side_of_zero(x, z)

    def test_same_side_implies_equal_valuation(self):
        rng = random.Random(13)
        for _ in range(200):
            x = random_nonzero(rng, 3)
            y = random_nonzero(rng, 3)
            if same_side_of_zero(x, y):
                assert x.valuation == y.valuation


class TestBall:
    def test_membership_closed_vs_open(self):
        center = num(1, 3)
        x = num(10, 3)  # v(x - 1) = 2
        assert PadicBall(center, 2, closed=True).contains(x)
        assert PadicBall(center, 2, closed=False).contains(x) is False
        assert PadicBall(center, 1, closed=False).contains(x)

    def test_center_in_every_ball(self):
        center = num(7, 5)
        assert PadicBall(center, 10).contains(center)


class TestUltrametricLaws:
    def test_random_triples(self):
        rng = random.Random(1234)
        for p in (2, 3, 5):
            for _ in range(500):
                x = random_nonzero(rng, p)
                y = random_nonzero(rng, p)
                try:
                    s = x + y
                except PrecisionExhausted:
                    assert x.valuation == y.valuation
                    continue
                if not s.is_zero():
                    assert s.valuation >= min(x.valuation, y.valuation)
                    if x.valuation != y.valuation:
                        assert s.valuation == min(x.valuation, y.valuation)


def test_vp_fraction():
    from fractions import Fraction
    assert vp_fraction(Fraction(9, 2), 3) == 2
    assert vp_fraction(Fraction(1, 27), 3) == -3


def test_str_form():
    assert str(num(41, 3, 4)) == "3^0 * (2 + 1*3 + 1*3^2 + 1*3^3)"
    assert str(PadicNumber.zero(7)) == "0"
