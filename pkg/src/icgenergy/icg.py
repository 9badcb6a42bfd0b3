"""Spectra and energies of integral circulant graphs ICG(n, D).

Eigenvalues are indexed by divisor class e = gcd(j, n): every j in a class
shares the value sum_{d in D} c(e, n/d), with multiplicity phi(n/e).  The
main path is integer-only; floating point lives in the dense oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .arith import divisors, ramanujan_sum, totient

INT64_MAX = 2**63 - 1
ORACLE_MAX_N = 3000
ORACLE_TOL = 1e-4


@dataclass(frozen=True)
class GeneralDivisorSet:
    """A nonempty set of proper divisors of ``n``, kept sorted."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"order must be positive, got {self.n}")
        if not self.members:
            raise ValueError("divisor set must be nonempty")
        for d in self.members:
            if d < 1 or self.n % d:
                raise ValueError(f"{d} does not divide {self.n}")
            if d == self.n:
                raise ValueError(f"{d} is not a proper divisor of {self.n}")
        if list(self.members) != sorted(set(self.members)):
            raise ValueError("members must be strictly increasing")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> GeneralDivisorSet:
        """Build from any iterable; duplicates are an error, order is not."""
        members = list(members)
        if len(set(members)) != len(members):
            raise ValueError(f"duplicate divisors in {members}")
        return cls(n, tuple(sorted(members)))

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class SpectrumEntry:
    divisor: int
    eigenvalue: int
    multiplicity: int


@dataclass(frozen=True)
class DivisorClassSpectrum:
    n: int
    entries: tuple[SpectrumEntry, ...]

    @property
    def degree(self) -> int:
        return self.entries[-1].eigenvalue

    def trace(self) -> int:
        return sum(t.multiplicity * t.eigenvalue for t in self.entries)

    def energy(self) -> int:
        return sum(t.multiplicity * abs(t.eigenvalue) for t in self.entries)

    def check(self) -> None:
        """Raise ``AssertionError`` if a structural invariant is broken."""
        assert sum(t.multiplicity for t in self.entries) == self.n, "multiplicities"
        assert self.trace() == 0, "nonzero trace"
        assert self.entries[-1].divisor == self.n
        assert all(self.degree >= abs(t.eigenvalue) for t in self.entries), "degree dominance"


@dataclass(frozen=True)
class EnergyRecord:
    n: int
    divisor_set: GeneralDivisorSet
    energy: int

    def __post_init__(self):
        if self.energy < 0 or self.energy % 2:
            raise ArithmeticError(f"energy {self.energy} is not a nonnegative even integer")
        if self.energy > INT64_MAX:
            raise OverflowError(f"energy {self.energy} exceeds the 64-bit output range")


def _check(n: int, D: GeneralDivisorSet) -> None:
    if D.n != n:
        raise ValueError(f"divisor set belongs to order {D.n}, not {n}")


def eigenvalue_at_class(n: int, D: GeneralDivisorSet, e: int) -> int:
    """Eigenvalue shared by every j with gcd(j, n) = e."""
    _check(n, D)
    if e < 1 or n % e:
        raise ValueError(f"class {e} does not divide {n}")
    return sum(ramanujan_sum(e, n // d) for d in D)


def spectrum(n: int, D: GeneralDivisorSet) -> DivisorClassSpectrum:
    _check(n, D)
    entries = tuple(
        SpectrumEntry(e, eigenvalue_at_class(n, D, e), totient(n // e)) for e in divisors(n)
    )
    spec = DivisorClassSpectrum(n, entries)
    spec.check()
    return spec


def energy(n: int, D: GeneralDivisorSet) -> EnergyRecord:
    return EnergyRecord(n, D, spectrum(n, D).energy())


def adjacency_matrix(n: int, D: GeneralDivisorSet) -> np.ndarray:
    diff = np.subtract.outer(np.arange(n), np.arange(n)) % n
    return np.isin(np.gcd(diff, n), np.asarray(D.members)).astype(np.float64)


def brute_force_energy_oracle(n: int, D: GeneralDivisorSet) -> int:
    """Energy from a dense symmetric eigensolve of the adjacency matrix.

    Independent of the Ramanujan-sum path.  Raises ``ArithmeticError`` when
    the floating sum is not within ``ORACLE_TOL`` of an integer.
    """
    _check(n, D)
    if n > ORACLE_MAX_N:
        raise ValueError(f"dense oracle limited to n <= {ORACLE_MAX_N}, got {n}")
    total = float(np.abs(np.linalg.eigvalsh(adjacency_matrix(n, D))).sum())
    rounded = round(total)
    if abs(total - rounded) >= ORACLE_TOL:
        raise ArithmeticError(f"oracle energy {total!r} is not within {ORACLE_TOL} of an integer")
    return rounded
