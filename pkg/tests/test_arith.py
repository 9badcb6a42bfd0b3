from math import gcd

import pytest
from hypothesis import assume, given, settings, strategies as st

from icgenergy.arith import (
    divisors, factorize, is_prime, mobius, next_prime, ramanujan_sum,
    ramanujan_sum_prime_power, sieve_primes, totient,
)

from oracles import is_prime_naive, mobius_naive, ramanujan_cos_table, ramanujan_exp_sum, totient_count


def test_sieve_small():
    assert sieve_primes(10) == [2, 3, 5, 7]
    assert sieve_primes(2) == [2]
    assert sieve_primes(1) == []
    assert sieve_primes(0) == []


def test_sieve_467_matches_trial_division():
    primes = sieve_primes(467)
    assert primes[-1] == 467
    assert primes == [k for k in range(2, 468) if is_prime_naive(k)]


@pytest.mark.parametrize("n, expected", [
    (1125, [(3, 2), (5, 3)]),
    (8575, [(5, 2), (7, 3)]),
    (1, []),
    (2, [(2, 1)]),
    (2**31 - 1, [(2**31 - 1, 1)]),
])
def test_factorize(n, expected):
    assert factorize(n) == expected


@given(st.integers(1, 10**9))
def test_factorize_invariants(n):
    fac = factorize(n)
    prod = 1
    for p, k in fac:
        assert k >= 1 and is_prime(p)
        prod *= p**k
    assert prod == n
    assert [p for p, _ in fac] == sorted({p for p, _ in fac})


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_is_prime_and_next_prime():
    assert [k for k in range(200) if is_prime(k)] == [k for k in range(200) if is_prime_naive(k)]
    assert next_prime(464) == 467
    assert next_prime(467) == 467
    assert next_prime(0) == 2


@pytest.mark.parametrize("n, expected", [(1, 1), (9, 6), (1125, 600)])
def test_totient(n, expected):
    assert totient(n) == expected == totient_count(n)


def test_totient_matches_count():
    assert all(totient(n) == totient_count(n) for n in range(1, 400))


def test_mobius():
    assert (mobius(1), mobius(6), mobius(12)) == (1, 1, 0)
    assert all(mobius(n) == mobius_naive(n) for n in range(1, 2000))


def test_ramanujan_examples():
    assert ramanujan_sum(0, 12) == 4
    assert ramanujan_sum(2, 4) == round(ramanujan_exp_sum(2, 4).real) == -2
    assert ramanujan_sum(1, 9) == round(ramanujan_exp_sum(1, 9).real) == 0
    assert ramanujan_sum(5, 1) == 1


def test_ramanujan_rejects_bad_args():
    with pytest.raises(ValueError):
        ramanujan_sum(1, 0)
    with pytest.raises(ValueError):
        ramanujan_sum(-1, 5)


def test_ramanujan_matches_exponential_sum_grid():
    for m in range(1, 201):
        brute = ramanujan_cos_table(m, 200)
        for j, value in enumerate(brute):
            exact = ramanujan_sum(j, m)
            assert abs(value - round(value)) < 1e-6
            assert exact == round(value), (j, m)


def test_prime_power_examples():
    assert ramanujan_sum_prime_power(3, 0, 2) == 0
    assert ramanujan_sum_prime_power(3, 1, 2) == -3
    assert ramanujan_sum_prime_power(5, 3, 3) == 100 == ramanujan_sum(125, 125)


def test_prime_power_matches_general():
    for p in (3, 5, 7, 11, 13):
        for i in range(7):
            for k in range(7):
                assert ramanujan_sum_prime_power(p, i, k) == ramanujan_sum(p**i, p**k)


@settings(max_examples=300)
@given(st.integers(0, 10**6), st.integers(1, 100), st.integers(1, 100))
def test_ramanujan_multiplicative(j, m1, m2):
    assume(gcd(m1, m2) == 1)
    assert ramanujan_sum(j, m1 * m2) == ramanujan_sum(j, m1) * ramanujan_sum(j, m2)


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert len(divisors(1125)) == 12
    assert divisors(360) == [d for d in range(1, 361) if 360 % d == 0]


def test_totient_divisor_sum():
    assert all(sum(totient(d) for d in divisors(n)) == n for n in range(1, 10**4 + 1))


def test_unitary_cayley_trace_zero():
    for m in range(2, 1001):
        assert sum(totient(m // e) * ramanujan_sum(e, m) for e in divisors(m)) == 0
