from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parabolic.errors import InvalidArgumentError
from parabolic.exact_arith import (
    divisors,
    euler_phi,
    factorize,
    gcd_list,
    is_prime,
    rational_str,
    v_p,
)


def test_v_p_examples():
    assert v_p(12, 2) == 2
    assert v_p(12, 5) == 0
    assert v_p(1, 7) == 0


def test_v_p_rejects_bad_inputs():
    with pytest.raises(InvalidArgumentError):
        v_p(12, 4)
    with pytest.raises(InvalidArgumentError):
        v_p(0, 3)


def test_gcd_list_examples():
    assert gcd_list([6, 4, 2]) == 2
    assert gcd_list([2, 0, 1]) == 1
    assert gcd_list([]) == 0
    assert gcd_list([0, 0]) == 0
    assert gcd_list([7]) == 7


def test_factorize_examples():
    assert factorize(12) == [(2, 2), (3, 1)]
    assert factorize(1) == []
    assert factorize(97) == [(97, 1)]
    with pytest.raises(InvalidArgumentError):
        factorize(0)


def test_factorize_roundtrip_exhaustive_small():
    for n in range(1, 20001):
        prod = 1
        for p, a in factorize(n):
            prod *= p**a
        assert prod == n


@given(st.integers(min_value=1, max_value=10**6))
def test_factorize_roundtrip_and_structure(n):
    facts = factorize(n)
    prod = 1
    for p, a in facts:
        assert is_prime(p)
        assert a >= 1
        prod *= p**a
    assert prod == n
    assert [p for p, _ in facts] == sorted({p for p, _ in facts})


@given(st.integers(min_value=1, max_value=10**5))
def test_v_p_matches_factorization(n):
    for p, a in factorize(n):
        assert v_p(n, p) == a


@st.composite
def fractions(draw):
    num = draw(st.integers(min_value=-10**12, max_value=10**12))
    den = draw(st.integers(min_value=1, max_value=10**12))
    return Fraction(num, den)


@given(fractions(), fractions())
@settings(max_examples=200)
def test_rational_arithmetic_is_exact(a, b):
    s = (a + b) - b
    assert s.numerator == a.numerator and s.denominator == a.denominator
    if b != 0:
        q = (a * b) / b
        assert q.numerator == a.numerator and q.denominator == a.denominator


@given(fractions())
def test_rationals_stored_reduced(a):
    from math import gcd

    assert a.denominator > 0
    assert gcd(abs(a.numerator), a.denominator) == 1


def test_rational_str():
    assert rational_str(Fraction(-2, 3)) == "-2/3"
    assert rational_str(Fraction(5, 1)) == "5"
    assert rational_str(7) == "7"
    assert rational_str(Fraction(0)) == "0"


def test_euler_phi_matches_counting():
    from math import gcd

    for n in range(1, 200):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert divisors(97) == [1, 97]
