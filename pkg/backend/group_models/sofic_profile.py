"""
Asymptotic cycle statistics and class-membership predicates on profiles

Every quantity is an exact Fraction; the predicates compare rationals
directly, including at the half-open bracket boundaries.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import pandas as pd

from group_models import perm_core
from group_models.errors import DomainError, RangeError

logger = logging.getLogger(__name__)

LESS_EQUAL = '≤'
GREATER_EQUAL = '≥'
EQUAL = '='


def rational_str(value):
    """Exact "p/q" text; the denominator is always written"""
    value = Fraction(value)
    return f'{value.numerator}/{value.denominator}'


@dataclass(frozen=True)
class SoficProfile:
    """
    Finite-support map i -> cyc_i plus the residual cyc_inf

    Zero masses are dropped so that equal profiles compare equal.
    """

    masses: dict = field(default_factory=dict)
    inf_mass: Fraction = Fraction(0)

    def __post_init__(self):
        masses = {}
        for length, mass in sorted(self.masses.items()):
            length, mass = int(length), Fraction(mass)
            if length < 1:
                raise RangeError(f'cycle length must be positive, got {length}')
            if not 0 <= mass <= 1:
                raise RangeError(f'mass at length {length} must lie in [0, 1], got {rational_str(mass)}')
            if mass:
                masses[length] = mass
        inf_mass = Fraction(self.inf_mass)
        if not 0 <= inf_mass <= 1:
            raise RangeError(f'infinite mass must lie in [0, 1], got {rational_str(inf_mass)}')
        total = sum(masses.values(), Fraction(0)) + inf_mass
        if total != 1:
            raise RangeError(f'masses and infinite mass sum to {rational_str(total)}, expected 1')
        object.__setattr__(self, 'masses', masses)
        object.__setattr__(self, 'inf_mass', inf_mass)

    def mass(self, length):
        return self.masses.get(length, Fraction(0))

    @property
    def support(self):
        """m(P) = 1 - cyc_1"""
        return 1 - self.mass(1)

    @property
    def cycle_density(self):
        """n(P) = sum over i >= 2 of cyc_i / i"""
        return sum((mass / length for length, mass in self.masses.items() if length >= 2), Fraction(0))

    def to_dict(self):
        return {
            'masses': {str(length): rational_str(mass) for length, mass in self.masses.items()},
            'inf': rational_str(self.inf_mass),
        }


def identity_profile():
    return SoficProfile({1: Fraction(1)})


def one_infinity_profile(inf_mass):
    """The member of cyc({1, inf}) with the given infinite mass"""
    inf_mass = Fraction(inf_mass)
    return SoficProfile({1: 1 - inf_mass}, inf_mass)


@dataclass(frozen=True)
class Inequality:
    """An instantiated comparison such as 1/2 ≤ 3/5"""

    lhs: Fraction
    relation: str
    rhs: Fraction

    @property
    def holds(self):
        if self.relation == LESS_EQUAL:
            return self.lhs <= self.rhs
        if self.relation == GREATER_EQUAL:
            return self.lhs >= self.rhs
        return self.lhs == self.rhs

    def __str__(self):
        return f'{rational_str(self.lhs)} {self.relation} {rational_str(self.rhs)}'

    def to_dict(self):
        return {'inequality': str(self), 'holds': self.holds}


def default_threshold(degree):
    """ceil(sqrt(n))"""
    return math.isqrt(degree - 1) + 1 if degree > 1 else 1


def profile_of(p, inf_threshold=None):
    """
    Finite-scale approximant of a permutation's profile

    Lengths below `inf_threshold` keep their normalized mass; longer cycles
    are counted as infinite. Fixed points stay finite at every threshold; a
    threshold above the degree keeps every length.
    """
    threshold = default_threshold(p.degree) if inf_threshold is None else int(inf_threshold)
    if threshold < 1:
        raise RangeError(f'infinity threshold must be at least 1, got {threshold}')
    n = p.degree
    masses = {}
    inf_mass = Fraction(0)
    for length, mass in perm_core.cycle_type(p).masses.items():
        if length < threshold or length == 1:
            masses[length] = Fraction(mass, n)
        else:
            inf_mass += Fraction(mass, n)
    return SoficProfile(masses, inf_mass)


@dataclass(frozen=True)
class PermSequence:
    """Levels (n_k, p_k) approximating one element of the ultraproduct"""

    levels: tuple

    def __post_init__(self):
        levels = tuple((int(degree), p) for degree, p in self.levels)
        previous = 0
        for degree, p in levels:
            if p.degree != degree:
                raise RangeError(f'level declares degree {degree} but holds a permutation of degree {p.degree}')
            if degree < previous:
                raise RangeError(f'degrees must be nondecreasing, {degree} follows {previous}')
            previous = degree
        object.__setattr__(self, 'levels', levels)

    @classmethod
    def of(cls, permutations):
        return cls(tuple((p.degree, p) for p in permutations))


@dataclass(frozen=True)
class SequenceStats:
    degrees: tuple
    thresholds: tuple
    profiles: tuple

    def __len__(self):
        return len(self.profiles)

    def __iter__(self):
        return iter(self.profiles)

    def __getitem__(self, k):
        return self.profiles[k]

    def trajectories(self):
        """One row per level: n_k, threshold, cyc_i for every length seen, inf"""
        lengths = sorted({length for profile in self.profiles for length in profile.masses})
        rows = []
        for degree, threshold, profile in zip(self.degrees, self.thresholds, self.profiles):
            row = {'n_k': degree, 'threshold': threshold}
            for length in lengths:
                row[f'cyc_{length}'] = profile.mass(length)
            row['inf'] = profile.inf_mass
            rows.append(row)
        return pd.DataFrame(rows, columns=['n_k', 'threshold'] + [f'cyc_{i}' for i in lengths] + ['inf'])


def sequence_stats(s, inf_threshold_rule=None):
    rule = inf_threshold_rule or default_threshold
    thresholds = tuple(int(rule(degree)) for degree, _ in s.levels)
    profiles = tuple(profile_of(p, threshold) for (_, p), threshold in zip(s.levels, thresholds))
    logger.debug('Computed %d level profiles', len(profiles))
    return SequenceStats(tuple(degree for degree, _ in s.levels), thresholds, profiles)


def conjugate_equiv(P, Q):
    return P.masses == Q.masses


def in_cyc_1_inf(P):
    return all(length == 1 for length in P.masses)


def power_profile(P, m):
    if m < 1:
        raise RangeError(f'power must be positive, got {m}')
    masses = {}
    for length, mass in P.masses.items():
        target = length // math.gcd(length, m)
        masses[target] = masses.get(target, Fraction(0)) + mass
    return SoficProfile(masses, P.inf_mass)


def powers_stay_in_class(P):
    """
    Whether every power of P is conjugate to P

    The power by the lcm of the finite lengths collapses all finite mass onto
    fixed points, so it is the only power that needs checking.
    """
    exponent = math.lcm(*P.masses) if P.masses else 1
    return conjugate_equiv(power_profile(P, exponent), P)


def _require_cyc_1_inf(P, name):
    if not in_cyc_1_inf(P):
        raise DomainError(f'{name} is outside cyc({{1,inf}}): it has finite cycles of length >= 2')


def _require_exponent(m):
    if int(m) != m or m < 2:
        raise DomainError(f'exponent must be an integer greater than 1, got {m}')


def _require_unit_mass(value, name):
    value = Fraction(value)
    if not 0 <= value <= 1:
        raise DomainError(f'{name} must lie in [0, 1], got {rational_str(value)}')
    return value


def class_power_inequality(q_inf, p_inf, m):
    """cyc_inf(q) ≤ m * cyc_inf(p)"""
    _require_exponent(m)
    q_inf = _require_unit_mass(q_inf, 'cyc_inf(q)')
    p_inf = _require_unit_mass(p_inf, 'cyc_inf(p)')
    return Inequality(q_inf, LESS_EQUAL, m * p_inf)


def in_class_power(Q, P, m):
    """Whether Q lies in Cl(P)^m; both profiles must be in cyc({1, inf})"""
    _require_cyc_1_inf(P, 'P')
    _require_cyc_1_inf(Q, 'Q')
    return class_power_inequality(Q.inf_mass, P.inf_mass, m).holds


def covers_inequality(p_inf, m):
    _require_exponent(m)
    p_inf = _require_unit_mass(p_inf, 'cyc_inf(p)')
    return Inequality(p_inf, GREATER_EQUAL, Fraction(1, m))


def covers_from(P, m):
    """Whether cyc({inf}) ⊂ Cl(P)^m, i.e. cyc_inf(P) ≥ 1/m"""
    _require_cyc_1_inf(P, 'P')
    return covers_inequality(P.inf_mass, m).holds


def bracket_index(c):
    """The m with 1/m ≤ c < 1/(m-1); 1 only for c == 1"""
    c = Fraction(c)
    if c <= 0 or c > 1:
        raise DomainError(f'bracket needs 0 < c ≤ 1, got {rational_str(c)}')
    return math.ceil(1 / c)


def density_bounds(c, m):
    """The j with j/m ≤ c < (j+1)/m"""
    c = Fraction(c)
    if not 0 <= c <= 1:
        raise DomainError(f'density must lie in [0, 1], got {rational_str(c)}')
    if m < 1:
        raise DomainError(f'denominator must be positive, got {m}')
    return math.floor(c * m)


def two_class_inequalities(p_support, p_cycles, c1, c2):
    """
    The two conditions for a profile to lie in Cl(q1)Cl(q2)

    Returns (m + n ≤ c1 + c2, m - n ≥ c1 - c2) as Inequality records.
    """
    c1 = _require_unit_mass(c1, 'cyc_inf(q1)')
    c2 = _require_unit_mass(c2, 'cyc_inf(q2)')
    p_support = _require_unit_mass(p_support, 'm(p)')
    p_cycles = Fraction(p_cycles)
    if p_cycles < 0 or 2 * p_cycles > p_support:
        raise DomainError(f'n(p) must lie in [0, m(p)/2], got {rational_str(p_cycles)}')
    if c2 <= 0:
        raise DomainError('cyc_inf(q2) must be positive')
    if c1 < c2:
        raise DomainError(f'need cyc_inf(q1) ≥ cyc_inf(q2), got {rational_str(c1)} < {rational_str(c2)}')
    return (
        Inequality(p_support + p_cycles, LESS_EQUAL, c1 + c2),
        Inequality(p_support - p_cycles, GREATER_EQUAL, c1 - c2),
    )


def in_two_class_product(P, Q1, Q2):
    _require_cyc_1_inf(Q1, 'Q1')
    _require_cyc_1_inf(Q2, 'Q2')
    first, second = two_class_inequalities(P.support, P.cycle_density, Q1.inf_mass, Q2.inf_mass)
    return first.holds and second.holds


@dataclass(frozen=True)
class TraceReport:
    """Constraints a class-preserving automorphism imposes on p -> image"""

    sum_constraint: Inequality
    difference_constraint: Inequality
    bracket_constraint: Inequality = None
    brackets: tuple = None

    @property
    def implied_cycle_bound(self):
        """n(image) ≤ n(p), which follows once both linear constraints hold"""
        _, n = _unmix(self.sum_constraint.rhs, self.difference_constraint.rhs)
        _, n_img = _unmix(self.sum_constraint.lhs, self.difference_constraint.lhs)
        return Inequality(n_img, LESS_EQUAL, n)

    @property
    def conclusion_applies(self):
        return self.sum_constraint.holds and self.difference_constraint.holds

    @property
    def holds(self):
        checks = [self.sum_constraint.holds, self.difference_constraint.holds]
        if self.bracket_constraint is not None:
            checks.append(self.bracket_constraint.holds)
        return all(checks)

    def to_dict(self):
        return {
            'holds': self.holds,
            'sum_constraint': self.sum_constraint.to_dict(),
            'difference_constraint': self.difference_constraint.to_dict(),
            'bracket_constraint': None if self.bracket_constraint is None else {
                'brackets': list(self.brackets),
                'holds': self.bracket_constraint.holds,
            },
            'implied_cycle_bound': {
                'inequality': str(self.implied_cycle_bound),
                'established': self.conclusion_applies,
            },
        }


def _unmix(total, difference):
    return (total + difference) / 2, (total - difference) / 2


def _bracket_or_zero(inf_mass):
    return 0 if inf_mass == 0 else bracket_index(inf_mass)


def trace_constraints_from_stats(m, n, m_img, n_img, inf=None, inf_img=None):
    """Scalar form; the bracket check applies only when both infinite masses are given"""
    sum_constraint = Inequality(Fraction(m_img) + Fraction(n_img), LESS_EQUAL, Fraction(m) + Fraction(n))
    difference_constraint = Inequality(Fraction(m_img) - Fraction(n_img), GREATER_EQUAL, Fraction(m) - Fraction(n))
    if inf is None or inf_img is None:
        return TraceReport(sum_constraint, difference_constraint)
    brackets = (_bracket_or_zero(Fraction(inf)), _bracket_or_zero(Fraction(inf_img)))
    bracket_constraint = Inequality(Fraction(brackets[1]), EQUAL, Fraction(brackets[0]))
    return TraceReport(sum_constraint, difference_constraint, bracket_constraint, brackets)


def trace_constraints(P, P_img):
    both_in_class = in_cyc_1_inf(P) and in_cyc_1_inf(P_img)
    return trace_constraints_from_stats(
        P.support, P.cycle_density, P_img.support, P_img.cycle_density,
        inf=P.inf_mass if both_in_class else None,
        inf_img=P_img.inf_mass if both_in_class else None,
    )
