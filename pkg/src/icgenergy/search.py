"""Exhaustive maximiser search over the 2047 nonempty divisor sets of
p^2 q^3, and the survey over every order up to a bound."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterator

from . import icg
from .arith import is_prime, next_prime, sieve_primes, totient
from .two_prime import (
    CLASS_PAIRS,
    DSTAR_MASK,
    FULL_MASK,
    DivisorSet,
    PrimePair,
    class_products,
    closed_form_energy,
    dstar,
    kronecker_holds,
)

SMALLEST_ORDER = 5**2 * 3**3
MASKS_PER_ORDER = FULL_MASK


def enumerate_divisor_sets() -> range:
    """Every nonempty mask, ascending."""
    return range(1, FULL_MASK + 1)


def weighted_class_table(pair: PrimePair) -> list[list[int]]:
    """Class products scaled by the class multiplicity phi(n/e).

    phi > 0, so phi * |x| = |phi * x| and a mask's energy is the sum over
    rows of |row . mask|.
    """
    p, q = pair.p, pair.q
    table = class_products(pair)
    return [
        [totient(p ** (2 - a) * q ** (3 - b)) * v for v in row]
        for (a, b), row in zip(CLASS_PAIRS, table)
    ]


def all_energies(pair: PrimePair) -> list[int]:
    """``out[mask]`` is E(n, D_mask) for every mask; ``out[0]`` is 0.

    Class-value vectors are built incrementally: clearing the lowest set bit
    of a mask gives a smaller mask that has already been computed.
    """
    columns = list(zip(*weighted_class_table(pair)))
    vectors: list[tuple[int, ...]] = [(0,) * len(CLASS_PAIRS)] * (FULL_MASK + 1)
    energies = [0] * (FULL_MASK + 1)
    for mask in enumerate_divisor_sets():
        low = mask & -mask
        vec = tuple(map(int.__add__, vectors[mask ^ low], columns[low.bit_length() - 1]))
        vectors[mask] = vec
        energies[mask] = sum(map(abs, vec))
    return energies


@dataclass(frozen=True)
class MaximiserResult:
    pair: PrimePair
    max_energy: int
    maximisers: tuple[int, ...]
    is_unique: bool
    matches_dstar: bool
    kronecker_ok: bool
    formula_ok: bool
    evaluated: int = MASKS_PER_ORDER

    @property
    def n(self) -> int:
        return self.pair.n

    def maximiser_sets(self) -> list[DivisorSet]:
        return [DivisorSet(self.pair, m) for m in self.maximisers]


def find_maximiser(pair: PrimePair) -> MaximiserResult:
    """Evaluate all 2047 masks (no early exit) and record every argmax.

    A tie at the top is reported with ``is_unique=False``, never resolved.
    """
    energies = all_energies(pair)
    best = max(energies)
    winners = tuple(m for m in enumerate_divisor_sets() if energies[m] == best)
    unique = len(winners) == 1
    closed = closed_form_energy(pair)
    dstar_energy = icg.energy(pair.n, dstar(pair).to_general()).energy
    return MaximiserResult(
        pair=pair,
        max_energy=best,
        maximisers=winners,
        is_unique=unique,
        matches_dstar=unique and winners[0] == DSTAR_MASK,
        kronecker_ok=kronecker_holds(pair),
        formula_ok=closed == dstar_energy == energies[DSTAR_MASK],
        evaluated=len(energies) - 1,
    )


def default_prime_cap(bound: int) -> int:
    """First prime at or above the integer cube root of ``bound``."""
    r = round(bound ** (1 / 3))
    while r**3 > bound:
        r -= 1
    while (r + 1) ** 3 <= bound:
        r += 1
    return next_prime(r)


def survey_pairs(bound: int, max_prime: int | None = None) -> list[PrimePair]:
    """Ordered pairs with p^2 q^3 <= bound, ascending n.

    Both primes are limited to ``max_prime`` when given; ``None`` admits every
    pair (p then ranges up to sqrt(bound / 27)).
    """
    if bound < SMALLEST_ORDER:
        raise ValueError(f"bound below smallest order {SMALLEST_ORDER}")
    p_limit = 1
    while (p_limit + 1) ** 2 * 27 <= bound:
        p_limit += 1
    if max_prime is not None:
        p_limit = min(p_limit, max_prime)
    odd = [x for x in sieve_primes(p_limit) if x > 2]
    pairs = [
        PrimePair(p, q)
        for p in odd
        for q in odd
        if p != q and p * p * q**3 <= bound
    ]
    pairs.sort(key=lambda pq: (pq.n, pq.p))
    return pairs


@dataclass
class SurveyReport:
    bound: int
    max_prime: int | None
    orders_tested: int = 0
    distinct_unordered_pairs: int = 0
    largest_prime: int = 0
    comparisons_per_order: int = MASKS_PER_ORDER
    comparisons_total: int = 0
    dstar_mismatches: int = 0
    formula_failures: int = 0
    kronecker_failures: int = 0
    elapsed_seconds: float = 0.0

    @property
    def failures(self) -> int:
        return self.dstar_mismatches + self.formula_failures + self.kronecker_failures

    def add(self, res: MaximiserResult) -> None:
        self.orders_tested += 1
        self.largest_prime = max(self.largest_prime, res.pair.p, res.pair.q)
        self.comparisons_total += res.evaluated
        self.dstar_mismatches += not res.matches_dstar
        self.formula_failures += not res.formula_ok
        self.kronecker_failures += not res.kronecker_ok

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> SurveyReport:
        return cls(**d)


@dataclass
class Survey:
    report: SurveyReport
    results: list[MaximiserResult] = field(default_factory=list)


def _chunks(n_items: int, workers: int) -> int:
    return max(1, n_items // (workers * 8))


def iter_results(pairs: list[PrimePair], workers: int = 1) -> Iterator[MaximiserResult]:
    """Results in the order of ``pairs`` regardless of ``workers``."""
    if workers <= 1:
        yield from map(find_maximiser, pairs)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(find_maximiser, pairs, chunksize=_chunks(len(pairs), workers))


def survey(bound: int, max_prime: int | None | str = "auto", workers: int = 1) -> Survey:
    """Run ``find_maximiser`` on every order up to ``bound``.

    ``max_prime="auto"`` caps both primes at ``default_prime_cap(bound)``;
    ``None`` lifts the cap.
    """
    cap = default_prime_cap(bound) if max_prime == "auto" else max_prime
    if cap is not None and not is_prime(cap):
        cap = next_prime(cap)
    start = time.perf_counter()
    pairs = survey_pairs(bound, cap)
    report = SurveyReport(bound=bound, max_prime=cap)
    results = list(iter_results(pairs, workers))
    for res in results:
        report.add(res)
    report.distinct_unordered_pairs = len({frozenset((r.pair.p, r.pair.q)) for r in results})
    report.elapsed_seconds = round(time.perf_counter() - start, 3)
    return Survey(report, results)
