from fractions import Fraction

import pytest

from delpezzo.cyclotomic import (
    ConductorCapExceeded,
    CyclotomicNumber,
    RootOfUnity,
    cyclotomic_polynomial,
    euler_phi,
)


def test_euler_phi():
    assert [euler_phi(m) for m in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_cyclotomic_polynomial_values():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


class TestRootOfUnity:
    def test_parse_and_order(self):
        r = RootOfUnity.parse("2/3")
        assert r.order == 3
        assert RootOfUnity.parse("0").is_one()
        assert RootOfUnity.parse("1/2").order == 2

    def test_group_law(self):
        a = RootOfUnity.of(1, 4)
        b = RootOfUnity.of(1, 6)
        assert (a * b).order == 12
        assert (a / a).is_one()
        assert (a ** 4).is_one()
        assert a * a.inverse() == RootOfUnity.one()

    def test_to_cyclotomic_round_trip(self):
        r = RootOfUnity.of(5, 12)
        assert r.to_cyclotomic().as_root_of_unity() == r


class TestCyclotomicNumber:
    def test_rational_embedding(self):
        x = CyclotomicNumber.from_rational(Fraction(3, 7))
        assert x.is_rational()
        assert x.as_rational() == Fraction(3, 7)

    def test_zeta_minimal_polynomial(self):
        z = CyclotomicNumber.zeta(3)
        assert (z * z + z + 1).is_zero()
        z4 = CyclotomicNumber.zeta(4)
        assert (z4 * z4 + 1).is_zero()

    def test_cross_conductor_arithmetic(self):
        # zeta_6 = 1 + zeta_3 (primitive 6th vs 3rd roots)
        z6 = CyclotomicNumber.zeta(6)
        z3 = CyclotomicNumber.zeta(3)
        assert z6 == 1 + z3
        assert z6 * z6 * z6 == -1

    def test_inverse(self):
        z = CyclotomicNumber.zeta(5) + 2
        assert (z * z.inverse()).is_one()
        with pytest.raises(ZeroDivisionError):
            CyclotomicNumber.zero().inverse()

    def test_sqrt2_in_q_zeta8(self):
        z8 = CyclotomicNumber.zeta(8)
        sqrt2 = z8 + z8 ** 7
        assert (sqrt2 * sqrt2).as_rational() == 2
        assert not sqrt2.is_rational()

    def test_reduce_conductor(self):
        z12 = CyclotomicNumber.zeta(12)
        i = (z12 ** 3).reduce_conductor()
        assert i.conductor == 4
        assert i == CyclotomicNumber.zeta(4)
        one = (CyclotomicNumber.zeta(6) ** 6).reduce_conductor()
        assert one.conductor == 1 and one.is_one()
        # a primitive 12th root cannot drop
        assert z12.reduce_conductor().conductor == 12

    def test_as_root_of_unity(self):
        z = CyclotomicNumber.zeta(7) ** 3
        assert z.as_root_of_unity() == RootOfUnity.of(3, 7)
        minus_one = CyclotomicNumber.from_rational(-1)
        assert minus_one.as_root_of_unity() == RootOfUnity.of(1, 2)
        assert (CyclotomicNumber.zeta(5) + 1).as_root_of_unity() is None

    def test_conductor_cap(self):
        with pytest.raises(ConductorCapExceeded):
            CyclotomicNumber.zeta(7) * CyclotomicNumber.zeta(121)

    def test_str(self):
        assert str(CyclotomicNumber.zeta(3)) == "zeta(1/3)"
        assert str(CyclotomicNumber.from_rational(Fraction(1, 2))) == "1/2"
