"""Exact spectra and energies of integral circulant graphs, with the
closed-form maximal energy for orders p^2 q^3."""

from .arith import divisors, factorize, mobius, ramanujan_sum, sieve_primes, totient
from .icg import GeneralDivisorSet, brute_force_energy_oracle, eigenvalue_at_class, energy, spectrum
from .search import find_maximiser, survey
from .two_prime import (
    DivisorSet,
    PrimePair,
    closed_form_energy,
    derivation_check,
    dstar,
    eigenvalue_two_prime,
    kronecker_eigenvalues,
)

__version__ = "0.1.0"
