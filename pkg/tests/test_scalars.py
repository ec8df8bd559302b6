from fractions import Fraction

import pytest

from optsl2.errors import DomainError
from optsl2.scalars import (Fp, FpDomain, QQ, format_rational, is_prime,
                            parse_rational)


def test_prime_validation():
    for p in (2, 3, 5, 7, 11, 251):
        assert FpDomain(p).p == p
    for bad in (0, 1, 4, 9, 15, 253, 257, -3):
        with pytest.raises(DomainError):
            FpDomain(bad)


def test_fp_field_axioms_exhaustive():
    # small enough to check every pair
    for p in (2, 3, 5):
        d = Fp(p)
        for a in range(p):
            for b in range(p):
                assert d.add(a, b) == (a + b) % p
                assert d.mul(a, b) == (a * b) % p
                assert d.sub(a, b) == (a - b) % p
            assert d.add(a, d.neg(a)) == 0
            if a:
                assert d.mul(a, d.inv(a)) == 1
        with pytest.raises(DomainError):
            d.inv(0)


def test_fp_of_normalizes():
    d = Fp(7)
    assert d.of(9) == 2
    assert d.of(-1) == 6
    assert d.of(0) == 0


def test_fp_cache_and_equality():
    assert Fp(5) is Fp(5)
    assert Fp(5) == FpDomain(5)
    assert Fp(5) != Fp(7)
    assert Fp(5) != QQ


def test_rational_domain():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert QQ.inv(Fraction(-2, 3)) == Fraction(-3, 2)
    assert QQ.of(4) == Fraction(4)
    assert QQ.of("2/3") == Fraction(2, 3)
    with pytest.raises(DomainError):
        QQ.inv(Fraction(0))


def test_fp_coerces_rationals_with_invertible_denominator():
    d = Fp(5)
    assert d.of(Fraction(1, 2)) == 3  # 2 * 3 = 6 = 1 mod 5
    assert d.of("3/4") == 2
    with pytest.raises(DomainError):
        d.of(Fraction(1, 5))


def test_rational_literals_round_trip():
    for f in (Fraction(0), Fraction(5), Fraction(-7, 3), Fraction(22, 7)):
        assert parse_rational(str(format_rational(f))) == f
    assert format_rational(Fraction(4, 2)) == 2  # integers stay plain
    assert parse_rational("-3/6") == Fraction(-1, 2)
    with pytest.raises(DomainError):
        parse_rational("1/0")
    with pytest.raises(DomainError):
        parse_rational("x")


def test_is_prime_agrees_with_sieve():
    sieve = [True] * 260
    sieve[0] = sieve[1] = False
    for i in range(2, 260):
        if sieve[i]:
            for j in range(2 * i, 260, i):
                sieve[j] = False
    for n in range(260):
        assert is_prime(n) == sieve[n]
