"""
Fixed-point calculus of permutation powers

Masses are point counts: masses[i] = i * (number of i-cycles). The identities
here are linear in masses, so cycle counts are only a derived view.
"""

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from group_models.errors import MissingDivisor, RangeError


@dataclass(frozen=True)
class CycleType:
    degree: int
    masses: dict = field(default_factory=dict)

    def __post_init__(self):
        masses = {}
        for length, mass in sorted(self.masses.items()):
            length, mass = int(length), int(mass)
            if length < 1 or mass < 0:
                raise RangeError(f'invalid mass {mass} at length {length}')
            if mass % length:
                raise RangeError(f'mass {mass} at length {length} is not a multiple of the length')
            if mass:
                masses[length] = mass
        if sum(masses.values()) != self.degree:
            raise RangeError(f'masses sum to {sum(masses.values())}, expected degree {self.degree}')
        object.__setattr__(self, 'masses', masses)

    def mass(self, length):
        return self.masses.get(length, 0)

    def cycle_counts(self):
        return {length: mass // length for length, mass in self.masses.items()}

    def to_dict(self):
        return {'degree': self.degree, 'masses': {str(i): mass for i, mass in self.masses.items()}}


def prime_factorization(i):
    """[(prime, exponent), ...] by trial division"""
    if i < 1:
        raise RangeError(f'cannot factor {i}')
    factors = []
    d = 2
    while d * d <= i:
        if i % d == 0:
            exponent = 0
            while i % d == 0:
                i //= d
                exponent += 1
            factors.append((d, exponent))
        d += 1
    if i > 1:
        factors.append((i, 1))
    return factors


def divisors(i):
    small = [d for d in range(1, math.isqrt(i) + 1) if i % d == 0]
    return sorted(set(small + [i // d for d in small]))


def mobius(i):
    factors = prime_factorization(i)
    if any(exponent > 1 for _, exponent in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def fixed_points_of_power(t, i):
    """cyc_1(p^i) = sum of masses at the divisors of i"""
    if i < 1:
        raise RangeError(f'power must be positive, got {i}')
    return sum(mass for length, mass in t.masses.items() if i % length == 0)


def fixed_point_counts(p, up_to):
    """|Fix(p^i)| for i = 1..up_to, counted on the iterated images of p"""
    if up_to < 1:
        raise RangeError(f'need at least one power, got {up_to}')
    points = np.arange(p.degree, dtype=np.int64)
    images = points
    counts = {}
    for i in range(1, up_to + 1):
        images = p.images[images]
        counts[i] = int(np.count_nonzero(images == points))
    return counts


def cyc_by_inclusion_exclusion(fix, i):
    """
    Recover cyc_i from fixed-point counts of powers

    With i = a_1^r_1 ... a_t^r_t, sums (-1)^|eps| fix[a_1^(r_1-eps_1) ... a_t^(r_t-eps_t)]
    over eps in {0,1}^t. `fix` maps d to cyc_1(p^d).
    """
    if i < 1:
        raise RangeError(f'length must be positive, got {i}')
    factors = prime_factorization(i)
    total = 0
    for eps in itertools.product((0, 1), repeat=len(factors)):
        d = math.prod(a ** (r - e) for (a, r), e in zip(factors, eps))
        if d not in fix:
            raise MissingDivisor(d)
        total += (-1) ** sum(eps) * fix[d]
    return total


def masses_by_mobius(fix, up_to):
    """All masses 1..up_to by Möbius inversion over the divisor lattice"""
    masses = {}
    for i in range(1, up_to + 1):
        total = 0
        for d in divisors(i):
            if d not in fix:
                raise MissingDivisor(d)
            total += mobius(i // d) * fix[d]
        masses[i] = total
    return masses


def power_type(t, m):
    """Cycle type of p^m: an L-cycle splits into gcd(L, m) cycles of length L/gcd(L, m)"""
    if m < 1:
        raise RangeError(f'power must be positive, got {m}')
    masses = {}
    for length, mass in t.masses.items():
        target = length // math.gcd(length, m)
        masses[target] = masses.get(target, 0) + mass
    return CycleType(t.degree, masses)
