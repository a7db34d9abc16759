"""
Acceptance suites behind `verify`

Every suite is deterministic for a fixed seed and reports the number of
checks it ran and the first failures it met.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from group_models import cycle_stats, factorization, oracle, perm_core, sofic_profile, witness_builder
from group_models.errors import CycleTypeMismatch, MalformedInput, SoficToolkitError
from group_models.perm_core import Permutation

logger = logging.getLogger(__name__)

MAX_REPORTED_FAILURES = 10
IDENTITY_POWERS = 30
POWER_TYPE_EXPONENTS = 20

POWER_WITNESS_GRID = (
    # c_q > c_p: shifted interval cycles
    (Fraction(3, 10), Fraction(1, 2), 2),
    (Fraction(1, 5), Fraction(2, 5), 2),
    (Fraction(1, 10), Fraction(1, 5), 2),
    (Fraction(2, 5), Fraction(3, 4), 2),
    (Fraction(1, 2), Fraction(1), 2),
    (Fraction(1, 10), Fraction(3, 10), 3),
    (Fraction(1, 5), Fraction(1, 2), 3),
    (Fraction(3, 10), Fraction(9, 10), 3),
    (Fraction(1, 10), Fraction(2, 5), 4),
    (Fraction(1, 5), Fraction(3, 4), 4),
    (Fraction(1, 4), Fraction(1), 4),
    # c_q ≤ c_p: canceling tails
    (Fraction(1, 2), Fraction(1, 2), 2),
    (Fraction(1, 2), Fraction(1, 4), 2),
    (Fraction(3, 5), Fraction(1, 3), 2),
    (Fraction(1, 3), Fraction(1, 3), 3),
    (Fraction(2, 5), Fraction(1, 10), 3),
    (Fraction(7, 10), Fraction(1, 2), 3),
    (Fraction(1, 2), Fraction(1, 2), 4),
    (Fraction(9, 10), Fraction(3, 10), 4),
    (Fraction(1, 4), Fraction(1, 5), 4),
)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)
    failure_count: int = 0
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.failure_count == 0

    def check(self, condition, message):
        self.checks += 1
        if not condition:
            self.failure_count += 1
            if len(self.failures) < MAX_REPORTED_FAILURES:
                self.failures.append(message() if callable(message) else message)
        return condition

    def to_dict(self):
        return {
            'suite': self.name,
            'passed': self.passed,
            'checks': self.checks,
            'failure_count': self.failure_count,
            'failures': self.failures,
            'details': self.details,
        }


def random_permutation(rng, n):
    return Permutation(rng.permutation(n))


class SuiteRunner:
    """Runs the named suites with sizes taken from a Config class"""

    def __init__(self, cfg, seed=None, max_n=None, budget=None):
        self.cfg = cfg
        self.seed = cfg.VERIFY_SEED if seed is None else seed
        self.max_n = cfg.VERIFY_MAX_N if max_n is None else max_n
        self.budget = cfg.ORACLE_BUDGET if budget is None else budget
        self.suites = {
            'hkl': self.run_hkl,
            'identities': self.run_identities,
            'metric': self.run_metric,
            'conjugacy': self.run_conjugacy,
            'power-witness': self.run_power_witness,
            'two-class-witness': self.run_two_class_witness,
            'profiles': self.run_profiles,
            'approx-conjugator': self.run_approx_conjugator,
        }

    def run(self, names=None):
        names = list(self.suites) if not names or names == ['all'] else names
        unknown = [name for name in names if name not in self.suites]
        if unknown:
            raise MalformedInput(f"unknown suite {unknown[0]!r}; choose from {', '.join(self.suites)}")
        results = []
        for name in names:
            logger.info('Running suite %s', name)
            result = SuiteResult(name)
            self.suites[name](result, np.random.default_rng(self.seed))
            logger.info('Suite %s: %d checks, %d failures', name, result.checks, result.failure_count)
            results.append(result)
        return results

    def run_hkl(self, result, rng):
        """Decision procedure vs exhaustive search on every class of S_2..S_max_n"""
        instances = 0
        for n in range(2, self.max_n + 1):
            for partition, sigma in oracle.class_transversal(n):
                label = f'S_{n} type {oracle.format_partition(partition)}'
                for l1 in range(2, n + 1):
                    for l2 in range(2, l1 + 1):
                        instances += 1
                        decided = factorization.feasible(sigma, l1, l2).feasible
                        found = oracle.brute_force_two_cycle(sigma, l1, l2, self.budget) is not None
                        result.check(decided == found,
                                     lambda: f'{label} ({l1},{l2}): decided {decided}, oracle {found}')
                        if not decided:
                            continue
                        result.check(factorization.sign_consistent(sigma, l1, l2),
                                     lambda: f'{label} ({l1},{l2}): sign mismatch')
                        try:
                            certificate = factorization.factorize(sigma, l1, l2)
                            result.check((certificate.l1, certificate.l2) == (l1, l2),
                                         lambda: f'{label} ({l1},{l2}): wrong lengths')
                        except SoficToolkitError as e:
                            result.check(False, f'{label} ({l1},{l2}): factorize failed: {e}')
        result.details['instances'] = instances

    def run_identities(self, result, rng):
        """Fixed points of powers against the divisor sum, inclusion-exclusion and Möbius"""
        for _ in range(self.cfg.VERIFY_SAMPLES):
            n = int(rng.integers(1, self.cfg.VERIFY_MAX_DEGREE + 1))
            p = random_permutation(rng, n)
            t = perm_core.cycle_type(p)
            fix = cycle_stats.fixed_point_counts(p, IDENTITY_POWERS)
            for i in range(1, IDENTITY_POWERS + 1):
                result.check(cycle_stats.fixed_points_of_power(t, i) == fix[i],
                             lambda: f'n={n} i={i}: divisor sum differs from |Fix(p^i)|')
                result.check(cycle_stats.cyc_by_inclusion_exclusion(fix, i) == t.mass(i),
                             lambda: f'n={n} i={i}: inclusion-exclusion differs from cyc_i')
            mobius = cycle_stats.masses_by_mobius(fix, IDENTITY_POWERS)
            result.check(all(mobius[i] == t.mass(i) for i in mobius), f'n={n}: Möbius inversion disagrees')
            m = int(rng.integers(1, POWER_TYPE_EXPONENTS + 1))
            result.check(cycle_stats.power_type(t, m) == perm_core.cycle_type(perm_core.power(p, m)),
                         lambda: f'n={n} m={m}: power_type differs from the type of p^m')

    def run_metric(self, result, rng):
        """Group axioms, metric axioms, bi-invariance and the support triangle inequality"""
        n = self.cfg.VERIFY_MAX_DEGREE
        identity = perm_core.identity(n)
        hamming, compose = perm_core.hamming, perm_core.compose
        for _ in range(self.cfg.VERIFY_SAMPLES):
            p, q, r = (random_permutation(rng, n) for _ in range(3))
            result.check(compose(compose(p, q), r) == compose(p, compose(q, r)), 'associativity')
            result.check(compose(p, perm_core.inverse(p)) == identity, 'inverse law')
            result.check(compose(identity, p) == p == compose(p, identity), 'identity law')
            result.check(hamming(p, q) == hamming(q, p), 'symmetry')
            result.check(hamming(p, r) <= hamming(p, q) + hamming(q, r), 'triangle inequality')
            result.check(hamming(p, p) == 0 and (hamming(p, q) == 0) == (p == q), 'zero iff equal')
            result.check(hamming(compose(r, p), compose(r, q)) == hamming(p, q)
                         == hamming(compose(p, r), compose(q, r)), 'bi-invariance')
            result.check(hamming(p, identity) == 1 - Fraction(perm_core.count_fixed_points(p), n),
                         'distance to the identity')
            moved = [1 - Fraction(perm_core.count_fixed_points(x), n) for x in (compose(p, q), p, q)]
            result.check(moved[0] <= moved[1] + moved[2], 'support of a product')
            result.check(perm_core.decompose(p).recompose() == p, 'decompose/recompose round trip')
        large = random_permutation(rng, self.cfg.VERIFY_ROUND_TRIP_N)
        result.check(perm_core.decompose(large).recompose() == large,
                     lambda: f'decompose/recompose round trip at n={large.degree}')
        result.details['round_trip_degree'] = large.degree

    def run_conjugacy(self, result, rng):
        """Cycle type equality, conjugator success and profile equality agree on class pairs"""
        for n in range(1, self.max_n + 1):
            representatives = oracle.class_transversal(n).representatives
            relabel = random_permutation(rng, n)
            pool = list(representatives) + [perm_core.conjugate(x, relabel) for x in representatives]
            for p in pool:
                for q in pool:
                    same_type = perm_core.cycle_type(p) == perm_core.cycle_type(q)
                    try:
                        r = perm_core.conjugator(p, q)
                        conjugated = perm_core.conjugate(p, r) == q
                    except CycleTypeMismatch:
                        conjugated = False
                    same_profile = sofic_profile.conjugate_equiv(
                        sofic_profile.profile_of(p, n + 1), sofic_profile.profile_of(q, n + 1))
                    result.check(same_type == conjugated == same_profile,
                                 lambda: f'S_{n}: type {same_type}, conjugator {conjugated}, profile {same_profile}')

    def run_power_witness(self, result, rng):
        """Measured products of the Cl(p)^m constructions against their tolerances"""
        n = self.cfg.VERIFY_WITNESS_N
        for c_p, c_q, m in POWER_WITNESS_GRID:
            label = f'c_p={c_p} c_q={c_q} m={m}'
            report = witness_builder.build_power_class_witness(n, c_p, c_q, m)
            tolerance = Fraction(m + 2, n)
            result.check(abs(report.achieved.inf_mass - c_q) <= tolerance,
                         lambda: f'{label}: long-cycle mass {report.achieved.inf_mass}')
            result.check(report.defect <= tolerance, lambda: f'{label}: defect {report.defect}')
            for support in report.part_supports:
                result.check(abs(Fraction(support, n) - c_p) <= Fraction(2, n),
                             lambda: f'{label}: part support {support}')
            types = [perm_core.cycle_type(part) for part in report.parts]
            result.check(all(t == types[0] for t in types), f'{label}: parts differ in cycle type')
        result.details['degree'] = n

    def run_two_class_witness(self, result, rng):
        """Random instances of the class-product construction with margin at least 3/n"""
        n = self.cfg.VERIFY_TWO_CLASS_N
        for _ in range(self.cfg.VERIFY_TWO_CLASS_SAMPLES):
            p = _random_partial_permutation(rng, n)
            support, cycles = perm_core.support_stats(p)
            if support - cycles < 3:
                continue
            d = int(rng.integers(0, support - cycles - 3 + 1))
            s = int(rng.integers(support + cycles + 3, 2 * n - d + 1))
            c1, c2 = Fraction(s + d, 2 * n), Fraction(s - d, 2 * n)
            label = f'm={support} n={cycles} c1={c1} c2={c2}'
            try:
                certificate = witness_builder.build_two_class_witness(p, c1, c2)
            except SoficToolkitError as e:
                result.check(False, f'{label}: {e}')
                continue
            result.check(abs(Fraction(certificate.l1, n) - c1) <= Fraction(5, n), lambda: f'{label}: l1')
            result.check(abs(Fraction(certificate.l2, n) - c2) <= Fraction(5, n), lambda: f'{label}: l2')
            result.check(perm_core.compose(certificate.c1.as_permutation(n),
                                           certificate.c2.as_permutation(n)) == p, f'{label}: product')

    def run_profiles(self, result, rng):
        """Predicate coherence on a rational grid with denominators up to 20"""
        for d in range(1, 21):
            for a in range(d + 1):
                for b in range(d - a + 1):
                    for length in (2, 3, 6):
                        P = sofic_profile.SoficProfile({1: Fraction(a, d), length: Fraction(b, d)},
                                                       Fraction(d - a - b, d))
                        result.check(sofic_profile.powers_stay_in_class(P) == sofic_profile.in_cyc_1_inf(P),
                                     lambda: f'powers in class: {P.to_dict()}')
            for a in range(d + 1):
                P = sofic_profile.one_infinity_profile(Fraction(a, d))
                full = sofic_profile.one_infinity_profile(1)
                for m in range(2, 7):
                    result.check(sofic_profile.covers_from(P, m) == sofic_profile.in_class_power(full, P, m),
                                 lambda: f'covers vs class power: inf={a}/{d} m={m}')
                    for b in range(d + 1):
                        Q = sofic_profile.one_infinity_profile(Fraction(b, d))
                        if sofic_profile.in_class_power(Q, P, m):
                            result.check(sofic_profile.in_class_power(Q, P, m + 1),
                                         lambda: f'monotone in m: {b}/{d} vs {a}/{d} at m={m}')
        for m in range(1, 101):
            samples = [Fraction(1)] if m == 1 else [
                Fraction(1, m),
                (Fraction(1, m) + Fraction(1, m - 1)) / 2,
                Fraction(1, m - 1) - Fraction(1, 1000 * m * m),
            ]
            for c in samples:
                result.check(sofic_profile.bracket_index(c) == m, lambda: f'bracket of {c} is not {m}')

    def run_approx_conjugator(self, result, rng):
        """Defects along a family converging to one profile shrink with the degree"""
        defects = []
        for n in self.cfg.VERIFY_CONJUGATOR_DEGREES:
            p, q = _converging_pair(rng, n)
            found = witness_builder.approximate_conjugator(p, q)
            result.check(found.defect <= found.bound, lambda: f'n={n}: defect {found.defect} above bound')
            result.check(found.defect <= Fraction(found.unmatched_points + 3, n), lambda: f'n={n}: defect')
            defects.append(found.defect)
        result.check(all(x >= y for x, y in zip(defects, defects[1:])), 'defect grows with n')
        result.details['defects'] = [sofic_profile.rational_str(x) for x in defects]


def _random_partial_permutation(rng, n):
    """A random permutation moving a random number of points"""
    moved = int(rng.integers(n // 4, n + 1))
    chosen = rng.choice(n, size=moved, replace=False)
    images = np.arange(n, dtype=np.int64)
    images[chosen] = rng.permutation(chosen)
    return Permutation(images)


def _converging_pair(rng, n):
    """
    Two permutations of degree n (a multiple of 8) with common limit profile
    {1: 1/4, 2: 1/4, inf: 1/2} that differ in a bounded number of cycles
    """
    labels = (rng.permutation(n) + 1).tolist()
    quarter, eighth = n // 4, n // 8

    def take(count):
        chunk = labels[:count]
        del labels[:count]
        return chunk

    p_cycles = [take(2) for _ in range(eighth)] + [take(n - quarter - 2 * eighth)]
    p = Permutation.from_cycles(p_cycles, n)

    labels[:] = (rng.permutation(n) + 1).tolist()
    take(quarter - 3)
    q_cycles = [take(2) for _ in range(eighth + 1)] + [take(3)]
    rest = take(len(labels))
    half = len(rest) // 2
    q_cycles += [rest[:half], rest[half:]]
    q = Permutation.from_cycles(q_cycles, n)
    return p, q
