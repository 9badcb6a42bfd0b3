"""Orders n = p**2 * q**3: exponent-pair lattice, factor tables, the
factorised eigenvalues of D* and the closed-form energy polynomial.

Divisors are addressed by exponent pairs (a, b) meaning p**a * q**b.  Subsets
of the eleven proper divisors are 11-bit masks over ``EXPONENT_PAIRS``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .arith import is_prime, ramanujan_sum_prime_power, totient
from .icg import GeneralDivisorSet

P_EXP, Q_EXP = 2, 3

# bit index = 4a + b for a <= 1, 8 + b for a = 2
EXPONENT_PAIRS: tuple[tuple[int, int], ...] = (
    (0, 0), (0, 1), (0, 2), (0, 3),
    (1, 0), (1, 1), (1, 2), (1, 3),
    (2, 0), (2, 1), (2, 2),
)
# eigenvalue classes: the proper divisors followed by n itself
CLASS_PAIRS: tuple[tuple[int, int], ...] = EXPONENT_PAIRS + ((P_EXP, Q_EXP),)
FULL_MASK = (1 << len(EXPONENT_PAIRS)) - 1

DSTAR_PAIRS = frozenset({(0, 0), (2, 0), (1, 1), (0, 2), (2, 2), (1, 3)})
DSTAR_MASK = sum(1 << i for i, ab in enumerate(EXPONENT_PAIRS) if ab in DSTAR_PAIRS)


def bit_index(a: int, b: int) -> int:
    if not (0 <= a <= P_EXP and 0 <= b <= Q_EXP) or (a, b) == (P_EXP, Q_EXP):
        raise ValueError(f"({a}, {b}) is not the exponent pair of a proper divisor")
    return 4 * a + b


def _odd_prime(x: int) -> None:
    if x < 3 or not is_prime(x):
        raise ValueError(f"{x} is not an odd prime")


@dataclass(frozen=True)
class PrimePair:
    """Ordered pair of distinct odd primes; (3, 5) and (5, 3) are different orders."""

    p: int
    q: int

    def __post_init__(self):
        _odd_prime(self.p)
        _odd_prime(self.q)
        if self.p == self.q:
            raise ValueError(f"primes must be distinct, got p = q = {self.p}")

    @property
    def n(self) -> int:
        return self.p**P_EXP * self.q**Q_EXP

    def divisor(self, a: int, b: int) -> int:
        return self.p**a * self.q**b

    def __str__(self):
        return f"{self.p},{self.q}"


@dataclass(frozen=True)
class DivisorSet:
    pair: PrimePair
    mask: int

    def __post_init__(self):
        if not 1 <= self.mask <= FULL_MASK:
            raise ValueError(f"mask must lie in [1, {FULL_MASK}], got {self.mask}")

    @classmethod
    def from_pairs(cls, pair: PrimePair, pairs) -> DivisorSet:
        return cls(pair, sum(1 << bit_index(a, b) for a, b in set(pairs)))

    @classmethod
    def from_divisors(cls, pair: PrimePair, divs) -> DivisorSet:
        lookup = {pair.divisor(*ab): ab for ab in EXPONENT_PAIRS}
        try:
            return cls.from_pairs(pair, [lookup[d] for d in divs])
        except KeyError as exc:
            raise ValueError(f"{exc.args[0]} is not a proper divisor of {pair.n}") from None

    @property
    def exponent_pairs(self) -> list[tuple[int, int]]:
        return [ab for i, ab in enumerate(EXPONENT_PAIRS) if self.mask >> i & 1]

    @property
    def divisors(self) -> list[int]:
        return sorted(self.pair.divisor(a, b) for a, b in self.exponent_pairs)

    def to_general(self) -> GeneralDivisorSet:
        return GeneralDivisorSet(self.pair.n, tuple(self.divisors))

    def __len__(self):
        return self.mask.bit_count()


def dstar(pair: PrimePair) -> DivisorSet:
    """D* = {1, p^2, pq, q^2, p^2 q^2, p q^3}."""
    return DivisorSet(pair, DSTAR_MASK)


def a_table(p: int) -> list[list[int]]:
    """``A[a][c] = c(p**a, p**(2-c))``."""
    return [[ramanujan_sum_prime_power(p, a, P_EXP - c) for c in range(P_EXP + 1)]
            for a in range(P_EXP + 1)]


def b_table(q: int) -> list[list[int]]:
    """``B[b][f] = c(q**b, q**(3-f))``."""
    return [[ramanujan_sum_prime_power(q, b, Q_EXP - f) for f in range(Q_EXP + 1)]
            for b in range(Q_EXP + 1)]


def class_products(pair: PrimePair) -> list[list[int]]:
    """``T[k][i] = A[a][c] * B[b][f]`` for class ``CLASS_PAIRS[k] = (a, b)``
    and divisor ``EXPONENT_PAIRS[i] = (c, f)``: the contribution of one
    divisor to one class eigenvalue."""
    A, B = a_table(pair.p), b_table(pair.q)
    return [[A[a][c] * B[b][f] for c, f in EXPONENT_PAIRS] for a, b in CLASS_PAIRS]


def eigenvalue_two_prime(pair: PrimePair, D: DivisorSet, e: tuple[int, int]) -> int:
    """Eigenvalue of ICG(p^2 q^3, D) on the class of d_{a,b}; (2, 3) is the degree."""
    a, b = e
    if not (0 <= a <= P_EXP and 0 <= b <= Q_EXP):
        raise ValueError(f"class exponent pair {e} out of range")
    A, B = a_table(pair.p), b_table(pair.q)
    return sum(A[a][c] * B[b][f] for c, f in D.exponent_pairs)


def alternating_sum(q: int, b: int) -> int:
    """S_b(q) = sum_{k=0}^{b} (-q)**k."""
    return sum((-q) ** k for k in range(b + 1))


@dataclass(frozen=True)
class KroneckerComponents:
    """Closed forms for the twelve class eigenvalues of D*.

    For b <= 2 the eigenvalue at d_{a,b} is ``alpha[a] * S[b]``; the b = 3
    row has its own three polynomials in ``b3_values``.
    """

    pair: PrimePair

    @cached_property
    def alpha(self) -> tuple[int, int, int]:
        p = self.pair.p
        return (-2, 2 * (p - 1), -(p * p - 2 * p + 2))

    @cached_property
    def S(self) -> tuple[int, int, int]:
        q = self.pair.q
        return (1, 1 - q, 1 - q + q * q)

    @cached_property
    def b3_values(self) -> tuple[int, int, int]:
        p, q = self.pair.p, self.pair.q
        return (
            q**3 - 2 * q**2 + 2 * q - 2,
            (p - 1) * (2 - 2 * q + 2 * q**2 - q**3),
            (p * p - 2 * p + 2) * (q - 1) * (q * q + 1) + (p - 1) * q**3,
        )

    def eigenvalue(self, a: int, b: int) -> int:
        if b <= 2:
            return self.alpha[a] * self.S[b]
        return self.b3_values[a]

    def eigenvalues(self) -> dict[tuple[int, int], int]:
        return {(a, b): self.eigenvalue(a, b) for a, b in CLASS_PAIRS}


def kronecker_eigenvalues(pair: PrimePair) -> KroneckerComponents:
    return KroneckerComponents(pair)


def kronecker_holds(pair: PrimePair) -> bool:
    """Do all twelve closed-form eigenvalues match the factor-table sums at D*?"""
    comps = kronecker_eigenvalues(pair)
    D = dstar(pair)
    return all(eigenvalue_two_prime(pair, D, ab) == v for ab, v in comps.eigenvalues().items())


def closed_form_energy(pair: PrimePair) -> int:
    """E(p^2 q^3, D*) as a polynomial in p and q."""
    p, q = pair.p, pair.q
    return (
        (5 * p * p - 8 * p + 4) * (q - 1) * (3 * q * q - 2 * q + 1)
        + (p - 1) * (2 * p - 1) * (q**3 - 2 * q**2 + 2 * q - 2)
        + (p * p - 2 * p + 2) * (q - 1) * (q * q + 1)
        + (p - 1) * q**3
    )


@dataclass(frozen=True)
class DerivationCheck:
    q_sum: int
    q_sum_expected: int
    p_sum: int
    p_sum_expected: int
    b3_contribution: int
    total: int
    closed_form: int

    @property
    def ok(self) -> bool:
        return (
            self.q_sum == self.q_sum_expected
            and self.p_sum == self.p_sum_expected
            and self.total == self.closed_form
        )

    def __bool__(self):
        return self.ok


def derivation_check(pair: PrimePair) -> DerivationCheck:
    """Re-run the energy derivation for D* step by step.

    Absolute values follow the sign pattern S_0 > 0, S_1 < 0, S_2 > 0 and
    lambda_{0,3} > 0 (valid for q >= 3), which is checked first.  alpha is
    negative, positive, negative for a = 0, 1, 2.
    """
    p, q = pair.p, pair.q
    comps = kronecker_eigenvalues(pair)
    S, alpha = comps.S, comps.alpha
    if not (S[0] > 0 and S[1] < 0 and S[2] > 0 and comps.b3_values[0] > 0):
        raise ArithmeticError(f"sign pattern of S_b fails for q = {q}")
    if not (alpha[0] < 0 < alpha[1] and alpha[2] < 0):
        raise ArithmeticError(f"sign pattern of alpha fails for p = {p}")
    abs_S = (S[0], -S[1], S[2])
    abs_alpha = (-alpha[0], alpha[1], -alpha[2])

    q_sum = sum(totient(q ** (3 - b)) * abs_S[b] for b in range(3))
    p_sum = sum(totient(p ** (2 - a)) * abs_alpha[a] for a in range(3))
    # b = 3 row: lambda_{1,3} < 0, the other two are positive
    l03, l13, l23 = comps.b3_values
    if not (l13 < 0 < l23):
        raise ArithmeticError(f"sign pattern of the b = 3 row fails for {pair}")
    b3 = totient(p * p) * l03 + totient(p) * -l13 + l23
    return DerivationCheck(
        q_sum=q_sum,
        q_sum_expected=(q - 1) * (3 * q * q - 2 * q + 1),
        p_sum=p_sum,
        p_sum_expected=5 * p * p - 8 * p + 4,
        b3_contribution=b3,
        total=p_sum * q_sum + b3,
        closed_form=closed_form_energy(pair),
    )
