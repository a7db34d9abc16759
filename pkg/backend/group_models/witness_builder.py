"""
Finite-level witness constructions

Interval cycles, cycle gluing, approximate conjugators, products of m
class members with a prescribed long-cycle mass, and two-cycle
factorizations with prescribed normalized lengths.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from group_models import perm_core
from group_models.errors import BadIndex, DomainError, InfeasibleTarget, RangeError, SlackTooSmall
from group_models.factorization import factorize, feasible
from group_models.perm_core import Permutation
from group_models.sofic_profile import (
    one_infinity_profile, profile_of, rational_str, two_class_inequalities,
)

logger = logging.getLogger(__name__)


def interval_cycle(s, t, n):
    """c_{s,t} = (s, s+1, ..., t) in S_n"""
    if not 1 <= s <= t <= n:
        raise RangeError(f'interval cycle needs 1 ≤ s ≤ t ≤ n, got s={s}, t={t}, n={n}')
    images = np.arange(n, dtype=np.int64)
    images[s - 1:t - 1] = np.arange(s, t)
    images[t - 1] = s - 1
    return Permutation(images)


def _glued_images(images, orbits):
    """Point the last point of each orbit at the first point of the next one"""
    images = images.copy()
    if len(orbits) < 2:
        return images
    for k, orbit in enumerate(orbits):
        images[orbit[-1]] = orbits[(k + 1) % len(orbits)][0]
    return images


def glue_cycles(p, selected):
    """Replace the selected cycles of decompose(p) (0-based indices) by one cycle on their union"""
    cycles = perm_core.decompose(p).cycles
    indices = sorted(set(selected))
    for index in indices:
        if not 0 <= index < len(cycles):
            raise BadIndex(f'cycle index {index} out of range 0..{len(cycles) - 1}')
    orbits = [[a - 1 for a in cycles[index].points] for index in indices]
    return Permutation(_glued_images(p.images, orbits))


@dataclass(frozen=True)
class ApproximateConjugator:
    """
    r with r∘p∘r⁻¹ close to q

    Unpacks as (conjugator, defect).
    """

    conjugator: Permutation
    defect: Fraction
    unmatched_points: int
    glued_cycles: tuple

    @property
    def bound(self):
        return Fraction(sum(count for count in self.glued_cycles if count >= 2), self.conjugator.degree)

    def __iter__(self):
        return iter((self.conjugator, self.defect))

    def to_dict(self):
        return {
            'conjugator': perm_core.format_permutation(self.conjugator),
            'defect': rational_str(self.defect),
            'bound': rational_str(self.bound),
            'unmatched_points': self.unmatched_points,
            'glued_cycles': list(self.glued_cycles),
        }


def _orbits_by_length(p):
    grouped = {}
    for orbit in perm_core.orbits(p):
        grouped.setdefault(len(orbit), []).append(orbit)
    return grouped


def approximate_conjugator(p, q):
    """
    Match equal-length orbits of p and q, glue the rest of each side into one cycle

    Fixed points count as orbits of length 1. Both leftovers hold the same
    number of points, so the glued cycles have equal length and align
    point by point; the defect is at most the number of glued orbits over n.
    """
    perm_core.require_same_degree(p, q)
    p_orbits, q_orbits = _orbits_by_length(p), _orbits_by_length(q)

    pairs = []
    p_rest, q_rest = [], []
    for length in sorted(set(p_orbits) | set(q_orbits)):
        ps, qs = p_orbits.get(length, []), q_orbits.get(length, [])
        matched = min(len(ps), len(qs))
        pairs.extend(zip(ps[:matched], qs[:matched]))
        p_rest.extend(ps[matched:])
        q_rest.extend(qs[matched:])

    glued_p = [a for orbit in p_rest for a in orbit]
    glued_q = [a for orbit in q_rest for a in orbit]
    if len(glued_p) != len(glued_q):
        raise RangeError('unmatched parts differ in size')
    if glued_p:
        pairs.append((glued_p, glued_q))

    images = np.empty(p.degree, dtype=np.int64)
    for source, target in pairs:
        images[source] = target
    r = Permutation(images)

    defect = perm_core.hamming(perm_core.conjugate(p, r), q)
    logger.debug('Approximate conjugator: %d unmatched points, glued %d/%d orbits, defect %s',
                 len(glued_p), len(p_rest), len(q_rest), defect)
    return ApproximateConjugator(r, defect, 2 * len(glued_p), (len(p_rest), len(q_rest)))


@dataclass(frozen=True)
class WitnessReport:
    """A constructed product and its statistics, measured from the parts"""

    target: object
    achieved: object
    defect: Fraction
    parts: tuple
    product: Permutation
    parameters: dict = field(default_factory=dict)

    @property
    def part_supports(self):
        return [perm_core.support_stats(part)[0] for part in self.parts]


def _profile_defect(target, achieved):
    lengths = set(target.masses) | set(achieved.masses)
    gaps = [abs(target.mass(i) - achieved.mass(i)) for i in lengths]
    gaps.append(abs(target.inf_mass - achieved.inf_mass))
    return max(gaps)


def _product(parts):
    """parts[-1]∘...∘parts[0]: the first part acts first"""
    images = np.arange(parts[0].degree, dtype=np.int64)
    for part in parts:
        images = part.images[images]
    return Permutation(images)


def _round_half_up(value):
    return math.floor(value + Fraction(1, 2))


def _power_class_parts_growing(n, c_p, c_q, m):
    """m shifted interval cycles of length ceil(c_p n) whose product spans [1, r]"""
    j = math.ceil(c_p * n) - 1
    r = max(min(math.floor(c_q * n), m * j + 1), j + 1)
    offsets = [1 + _round_half_up(Fraction((t - 1) * (r - j - 1), m - 1)) for t in range(1, m + 1)]
    parts = tuple(interval_cycle(a, a + j, n) for a in offsets)
    return parts, {'case': 'growing', 'j': j, 'r': r, 'offsets': offsets}


def _largest_coprime_below(limit, m):
    r = limit
    while r > 1 and math.gcd(r, m) != 1:
        r -= 1
    return r


def _power_class_parts_shrinking(n, c_p, c_q, m):
    """
    m-1 copies of c_{1,r}c_{r+1,j}, closed by c_{1,r}(c_{r+1,j})^-(m-1); product c_{1,r}^m

    r is coprime to m so the product is one r-cycle; j - r is coprime to m-1
    so the closing part has the same cycle type as the others.
    """
    r = _largest_coprime_below(math.floor(c_q * n), m)
    j = math.ceil(c_p * n)
    if j > r:
        j = r + _largest_coprime_below(j - r, m - 1)
    head = interval_cycle(1, r, n)
    tail = interval_cycle(r + 1, j, n) if r < j else perm_core.identity(n)
    repeated = perm_core.compose(head, tail)
    closing = perm_core.compose(head, perm_core.power(tail, -(m - 1)))
    parts = tuple([repeated] * (m - 1) + [closing])
    return parts, {'case': 'shrinking', 'j': j, 'r': r}


def build_power_class_witness(n, c_p, c_q, m, inf_threshold=None):
    """
    m parts, each with support about c_p n, whose product has long-cycle mass about c_q

    Requires c_q ≤ m c_p. The achieved profile is measured from the product
    with `inf_threshold` (default ceil(sqrt(n))).
    """
    c_p, c_q = Fraction(c_p), Fraction(c_q)
    if not (0 < c_p <= 1 and 0 < c_q <= 1):
        raise RangeError(f'need 0 < c_p, c_q ≤ 1, got {rational_str(c_p)}, {rational_str(c_q)}')
    if int(m) != m or m < 2:
        raise DomainError(f'number of factors must be an integer greater than 1, got {m}')
    if c_q > m * c_p:
        raise InfeasibleTarget(f'{rational_str(c_q)} > {m}·{rational_str(c_p)}: not reachable with {m} factors')

    if c_q > c_p:
        parts, parameters = _power_class_parts_growing(n, c_p, c_q, m)
    else:
        parts, parameters = _power_class_parts_shrinking(n, c_p, c_q, m)
    logger.info('Power-class witness n=%d m=%d: %s', n, m, parameters)

    product = _product(parts)
    target = one_infinity_profile(c_q)
    achieved = profile_of(product, inf_threshold)
    return WitnessReport(target, achieved, _profile_defect(target, achieved), parts, product, parameters)


def two_class_slack(support, cycles, n, c1, c2):
    """The smaller margin of the two class-product inequalities, in normalized units"""
    m, k = Fraction(support, n), Fraction(cycles, n)
    return min(c1 + c2 - (m + k), (m - k) - (c1 - c2))


def build_two_class_witness(p, c1, c2):
    """
    Factor p as an l1-cycle times an l2-cycle with l1/n ≈ c1 and l2/n ≈ c2

    Needs the class-product inequalities to hold with margin at least 3/n.
    """
    c1, c2 = Fraction(c1), Fraction(c2)
    n = p.degree
    support, cycles = perm_core.support_stats(p)
    sum_condition, difference_condition = two_class_inequalities(
        Fraction(support, n), Fraction(cycles, n), c1, c2)
    if not (sum_condition.holds and difference_condition.holds):
        failed = sum_condition if not sum_condition.holds else difference_condition
        raise DomainError(f'outside Cl(q1)Cl(q2): {failed} is false')

    slack = two_class_slack(support, cycles, n, c1, c2)
    if slack < Fraction(3, n):
        raise SlackTooSmall(f'margin {rational_str(slack)} is below 3/{n}; add fixed points or glue cycles first')

    l2 = math.floor(n * c2) + 2
    l1 = math.floor(n * c1)
    l1 += (l1 + l2 - support - cycles) % 2
    if l1 > n:
        l1 -= 2
    if l2 > n:
        l2 -= 2
    if l2 > l1:
        l1, l2 = l2, l1
    logger.info('Two-class witness n=%d: lengths (%d, %d) for targets (%s, %s)',
                n, l1, l2, rational_str(c1), rational_str(c2))

    witness = feasible(p, l1, l2)
    if not witness.feasible:
        raise SlackTooSmall(f'rounded lengths ({l1}, {l2}) are infeasible: {witness.reason}')
    return factorize(p, l1, l2)
