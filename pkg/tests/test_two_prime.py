import random

import pytest
from hypothesis import given, strategies as st

from icgenergy import icg
from icgenergy.arith import ramanujan_sum, sieve_primes
from icgenergy.two_prime import (
    CLASS_PAIRS, DSTAR_MASK, EXPONENT_PAIRS, DivisorSet, PrimePair,
    a_table, alternating_sum, b_table, bit_index, closed_form_energy,
    derivation_check, dstar, eigenvalue_two_prime, kronecker_eigenvalues, kronecker_holds,
)

ODD_PRIMES_100 = [p for p in sieve_primes(100) if p > 2]
ODD_PRIMES_467 = [p for p in sieve_primes(467) if p > 2]
pairs_100 = st.tuples(st.sampled_from(ODD_PRIMES_100), st.sampled_from(ODD_PRIMES_100)).filter(
    lambda t: t[0] != t[1]).map(lambda t: PrimePair(*t))


@pytest.mark.parametrize("p, q, msg", [
    (4, 5, "4 is not an odd prime"),
    (2, 5, "2 is not an odd prime"),
    (3, 9, "9 is not an odd prime"),
    (7, 7, "distinct"),
])
def test_prime_pair_validation(p, q, msg):
    with pytest.raises(ValueError, match=msg):
        PrimePair(p, q)


def test_pair_is_ordered():
    assert PrimePair(3, 5).n == 1125
    assert PrimePair(5, 3).n == 675


def test_mask_order():
    assert [bit_index(a, b) for a, b in EXPONENT_PAIRS] == list(range(11))
    with pytest.raises(ValueError):
        bit_index(2, 3)
    with pytest.raises(ValueError):
        DivisorSet(PrimePair(3, 5), 0)
    with pytest.raises(ValueError):
        DivisorSet(PrimePair(3, 5), 2048)


def test_dstar():
    assert dstar(PrimePair(3, 5)).divisors == [1, 9, 15, 25, 225, 375]
    assert dstar(PrimePair(5, 3)).divisors == sorted([1, 25, 15, 9, 225, 135])
    assert len(dstar(PrimePair(11, 13))) == 6
    assert DSTAR_MASK == 1445


def test_divisor_set_roundtrip():
    pair = PrimePair(3, 7)
    for mask in range(1, 2048, 37):
        ds = DivisorSet(pair, mask)
        assert DivisorSet.from_divisors(pair, ds.divisors) == ds
        assert DivisorSet.from_pairs(pair, ds.exponent_pairs) == ds
        assert ds.to_general().members == tuple(ds.divisors)
    with pytest.raises(ValueError):
        DivisorSet.from_divisors(pair, [2])


def test_a_table_printed_values():
    p = 3
    assert a_table(p) == [[0, -1, 1], [-p, p - 1, 1], [p * (p - 1), p - 1, 1]]
    assert a_table(3)[1][0] == -3 and a_table(3)[2][0] == 6


def test_b_table_printed_values():
    q = 5
    assert b_table(q) == [
        [0, 0, -1, 1],
        [0, -q, q - 1, 1],
        [-q * q, q * (q - 1), q - 1, 1],
        [q * q * (q - 1), q * (q - 1), q - 1, 1],
    ]
    assert b_table(5)[2][0] == -25 and b_table(5)[3][0] == 100


@pytest.mark.parametrize("p", ODD_PRIMES_467)
def test_tables_match_general_formula(p):
    A, B = a_table(p), b_table(p)
    assert all(A[a][c] == ramanujan_sum(p**a, p ** (2 - c)) for a in range(3) for c in range(3))
    assert all(B[b][f] == ramanujan_sum(p**b, p ** (3 - f)) for b in range(4) for f in range(4))


def test_eigenvalue_two_prime_examples():
    pair = PrimePair(3, 5)
    D = dstar(pair)
    assert eigenvalue_two_prime(pair, D, (1, 1)) == -16
    assert eigenvalue_two_prime(pair, D, (0, 0)) == -2
    assert eigenvalue_two_prime(pair, D, (2, 3)) == 770


def test_kronecker_components_3_5():
    comps = kronecker_eigenvalues(PrimePair(3, 5))
    assert comps.alpha == (-2, 4, -5)
    assert comps.S == (1, -4, 21)
    assert comps.b3_values[0] == 125 - 50 + 10 - 2 == 83


def test_alternating_sum():
    assert [alternating_sum(7, b) for b in range(3)] == [1, -6, 43]


@given(pairs_100)
def test_kronecker_matches_tables_and_direct_sum(pair):
    comps = kronecker_eigenvalues(pair)
    D = dstar(pair)
    G = D.to_general()
    for (a, b), value in comps.eigenvalues().items():
        if b <= 2:
            assert value == comps.alpha[a] * alternating_sum(pair.q, b)
        assert value == eigenvalue_two_prime(pair, D, (a, b))
        assert value == icg.eigenvalue_at_class(pair.n, G, pair.divisor(a, b))
    assert kronecker_holds(pair)


def test_cross_module_random_triples():
    rng = random.Random(2024)
    for _ in range(200):
        p, q = rng.sample(ODD_PRIMES_100[:12], 2)
        pair = PrimePair(p, q)
        D = DivisorSet(pair, rng.randint(1, 2047))
        a, b = rng.choice(CLASS_PAIRS)
        assert eigenvalue_two_prime(pair, D, (a, b)) == icg.eigenvalue_at_class(
            pair.n, D.to_general(), pair.divisor(a, b))


@pytest.mark.parametrize("p, q, expected", [
    (3, 5, 8200), (13, 17, 11983136), (5, 11, 370368),
])
def test_closed_form_energy(p, q, expected):
    assert closed_form_energy(PrimePair(p, q)) == expected


@given(pairs_100)
def test_closed_form_matches_divisor_class_energy(pair):
    assert closed_form_energy(pair) == icg.energy(pair.n, dstar(pair).to_general()).energy


def test_derivation_check_3_5():
    chk = derivation_check(PrimePair(3, 5))
    assert chk.q_sum == 4 * 66 == 264
    assert chk.p_sum == 25
    assert chk.p_sum * chk.q_sum == 6600
    assert chk.b3_contribution == 830 + 770 == 1600
    assert chk.total == 8200 == chk.closed_form
    assert chk


@given(pairs_100)
def test_sign_pattern_and_derivation(pair):
    comps = kronecker_eigenvalues(pair)
    assert comps.S[0] > 0 > comps.S[1] and comps.S[2] > 0
    assert comps.b3_values[0] > 0
    assert derivation_check(pair).ok
