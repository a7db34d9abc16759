"""
Brute-force ground truth on small symmetric groups

Nothing here is clever: the oracle enumerates and evaluates.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from functools import cache

import pandas as pd

from group_models.errors import BudgetExceeded, LengthOutOfRange, RangeError
from group_models.factorization import FactorizationCertificate
from group_models.perm_core import Cycle, Permutation

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 1_000_000
MAX_TRANSVERSAL_DEGREE = 12


def cycle_count(n, length):
    """Number of length-cycles in S_n: C(n, l)·(l-1)!"""
    return math.comb(n, length) * math.factorial(length - 1)


def _cycle_tuples(n, length):
    for support in itertools.combinations(range(1, n + 1), length):
        head, rest = support[0], support[1:]
        for arrangement in itertools.permutations(rest):
            yield (head,) + arrangement


def enumerate_cycles(n, length):
    """Every length-cycle of S_n exactly once"""
    if not 2 <= length <= n:
        raise RangeError(f'need 2 ≤ l ≤ n, got l={length}, n={n}')
    for points in _cycle_tuples(n, length):
        yield Permutation.from_cycles([points], n)


def all_permutations(n):
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation.from_one_line(images)


def _single_cycle_of_length(images, length):
    """The 1-based points of the only nontrivial orbit if it has `length` points, else None"""
    moved = [a for a in range(len(images)) if images[a] != a]
    if len(moved) != length:
        return None
    orbit = [moved[0]]
    a = images[moved[0]]
    while a != moved[0]:
        orbit.append(a)
        a = images[a]
    if len(orbit) != length:
        return None
    return tuple(a + 1 for a in orbit)


def brute_force_two_cycle(sigma, l1, l2, budget=DEFAULT_BUDGET):
    """
    Scan every l1-cycle C1 and test whether C1⁻¹∘sigma is an l2-cycle

    Returns the first certificate found, or None.
    """
    n = sigma.degree
    if not 2 <= l2 <= l1 <= n:
        raise LengthOutOfRange(f'need 2 ≤ l2 ≤ l1 ≤ {n}, got l1={l1}, l2={l2}')
    candidates = cycle_count(n, l1)
    if candidates > budget:
        raise BudgetExceeded(f'{candidates} candidate {l1}-cycles in S_{n} exceed the budget of {budget}')

    sigma_images = sigma.images.tolist()
    for points in _cycle_tuples(n, l1):
        inverse = list(range(n))
        for k, a in enumerate(points):
            inverse[points[(k + 1) % l1] - 1] = a - 1
        c2_images = [inverse[sigma_images[a]] for a in range(n)]
        c2_points = _single_cycle_of_length(c2_images, l2)
        if c2_points is not None:
            return FactorizationCertificate(sigma, Cycle(points), Cycle(c2_points))
    return None


@cache
def partitions(n, largest=None):
    """Integer partitions of n as nonincreasing tuples, largest parts first"""
    largest = n if largest is None else largest
    if n == 0:
        return ((),)
    result = []
    for part in range(min(n, largest), 0, -1):
        for tail in partitions(n - part, part):
            result.append((part,) + tail)
    return tuple(result)


def partition_representative(partition):
    """Cycles on consecutive intervals, in the order of the parts"""
    cycles = []
    start = 1
    for part in partition:
        cycles.append(range(start, start + part))
        start += part
    return Permutation.from_cycles([c for c in cycles if len(c) > 1], start - 1)


@dataclass(frozen=True)
class ClassTransversal:
    degree: int
    partitions: tuple
    representatives: tuple

    def __iter__(self):
        return iter(zip(self.partitions, self.representatives))

    def __len__(self):
        return len(self.representatives)


def class_transversal(n):
    """One representative per conjugacy class of S_n"""
    if not 1 <= n <= MAX_TRANSVERSAL_DEGREE:
        raise RangeError(f'class transversal supports 1 ≤ n ≤ {MAX_TRANSVERSAL_DEGREE}, got {n}')
    parts = partitions(n)
    return ClassTransversal(n, parts, tuple(partition_representative(p) for p in parts))


def format_partition(partition):
    return '+'.join(str(part) for part in partition)


def feasibility_table(max_n, budget=DEFAULT_BUDGET, min_n=2):
    """Oracle verdict for every class of S_n, min_n ≤ n ≤ max_n, and every 2 ≤ l2 ≤ l1 ≤ n"""
    rows = []
    for n in range(min_n, max_n + 1):
        for partition, sigma in class_transversal(n):
            for l1 in range(2, n + 1):
                for l2 in range(2, l1 + 1):
                    found = brute_force_two_cycle(sigma, l1, l2, budget) is not None
                    rows.append({'n': n, 'type': format_partition(partition), 'l1': l1, 'l2': l2,
                                 'feasible': found})
        logger.info('Oracle table: finished S_%d', n)
    return pd.DataFrame(rows, columns=['n', 'type', 'l1', 'l2', 'feasible'])
