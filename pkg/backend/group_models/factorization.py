"""
Factorization of a permutation into a product of two cycles

Decides and constructs C1∘C2 = sigma with C1 an l1-cycle and C2 an l2-cycle.

Construction: build D = C2⁻¹ as a cycle through chosen points, then C1 = sigma∘D.
D is a concatenation of blocks; each block walks backwards along an arc
(a run of consecutive points) of one sigma-cycle, or is a single fixed point
of sigma. Inside a block sigma∘D fixes every point but the last one, so
sigma∘D has one nontrivial cycle exactly when arc-successor after
D-successor is a single cycle on blocks. The D-order of the blocks is chosen
gadget by gadget so that it is.

Lengths: with `absorbed` fixed points used, A arcs and T sigma-points in D,
  l2 = T + absorbed,   l1 = A + absorbed + (m - T).
Absorbing a fixed point grows both cycles by one; moving a point from the
walked part of a sigma-cycle into D shifts one unit from l1 to l2.
"""

import logging
from dataclasses import dataclass

from group_models.errors import CertificateError, DomainError, Infeasible, LengthOutOfRange
from group_models.perm_core import (
    Cycle, Permutation, compose, decompose, format_permutation, sign, support_stats,
)

logger = logging.getLogger(__name__)

FEASIBLE_PARITY = 'feasible_parity'
FEASIBLE_CANONICAL = 'feasible_canonical'
INFEASIBLE = 'infeasible'


@dataclass(frozen=True)
class FeasibilityWitness:
    verdict: str
    s: int = None
    reason: str = None

    @property
    def feasible(self):
        return self.verdict != INFEASIBLE

    def to_dict(self):
        return {'verdict': self.verdict, 's': self.s, 'reason': self.reason, 'feasible': self.feasible}


@dataclass(frozen=True)
class FactorizationCertificate:
    """Two cycles with c1∘c2 == sigma, checked by full evaluation on construction"""

    sigma: Permutation
    c1: Cycle
    c2: Cycle

    def __post_init__(self):
        degree = self.sigma.degree
        if not 2 <= self.c2.length <= self.c1.length <= degree:
            raise CertificateError(f'cycle lengths ({self.c1.length}, {self.c2.length}) out of order')
        product = compose(self.c1.as_permutation(degree), self.c2.as_permutation(degree))
        if product != self.sigma:
            raise CertificateError(f'{self.c1}{self.c2} does not multiply to {format_permutation(self.sigma)}')

    @property
    def degree(self):
        return self.sigma.degree

    @property
    def l1(self):
        return self.c1.length

    @property
    def l2(self):
        return self.c2.length

    @property
    def verified(self):
        return True

    def to_dict(self):
        return {
            'sigma': format_permutation(self.sigma),
            'c1': str(self.c1),
            'c2': str(self.c2),
            'l1': self.l1,
            'l2': self.l2,
            'verified': self.verified,
        }


def _check_lengths(sigma, l1, l2):
    if not 2 <= l2 <= l1 <= sigma.degree:
        raise LengthOutOfRange(f'need 2 ≤ l2 ≤ l1 ≤ {sigma.degree}, got l1={l1}, l2={l2}')


def feasible(sigma, l1, l2):
    """
    Decide whether sigma is a product of an l1-cycle and an l2-cycle

    Feasible when sigma is exactly those two disjoint cycles, or when
    l1 + l2 = m + n + 2s for some s ≥ 0 and l1 - l2 ≤ m - n, where m is the
    support size and n the number of nontrivial cycles of sigma.
    """
    _check_lengths(sigma, l1, l2)
    lengths = sorted(c.length for c in decompose(sigma).cycles)
    if lengths == sorted((l1, l2)):
        return FeasibilityWitness(FEASIBLE_CANONICAL)

    m, k = support_stats(sigma)
    slack = l1 + l2 - m - k
    if slack % 2:
        return FeasibilityWitness(INFEASIBLE, reason='parity')
    if slack < 0:
        return FeasibilityWitness(INFEASIBLE, reason='range')
    if l1 - l2 > m - k:
        return FeasibilityWitness(INFEASIBLE, reason='balance')
    return FeasibilityWitness(FEASIBLE_PARITY, s=slack // 2)


def sign_consistent(sigma, l1, l2):
    return sign(sigma) == (-1) ** (l1 - 1) * (-1) ** (l2 - 1)


def _odd_cap(length):
    return length if length % 2 else length - 1


def _distribute_arcs(lengths, total):
    """Arcs per cycle: each count in [1, L], sum `total`, an even number of even counts"""
    arcs = [1] * len(lengths)
    remaining = total - len(lengths)
    for i, length in enumerate(lengths):
        step = min(remaining, _odd_cap(length) - 1)
        arcs[i] += step
        remaining -= step
    even_cycles = [i for i, length in enumerate(lengths) if length % 2 == 0]
    for i, j in zip(even_cycles[::2], even_cycles[1::2]):
        if remaining == 0:
            break
        arcs[i] += 1
        arcs[j] += 1
        remaining -= 2
    if remaining:
        raise CertificateError(f'could not place {total} arcs on cycles of lengths {lengths}')
    return arcs


def _distribute_points(lengths, arcs, total):
    points = list(arcs)
    remaining = total - sum(arcs)
    for i, length in enumerate(lengths):
        extra = min(remaining, length - points[i])
        points[i] += extra
        remaining -= extra
    if remaining:
        raise CertificateError(f'could not place {total} points on cycles of lengths {lengths}')
    return points


def _cycle_blocks(points, arcs, taken):
    """Arcs {z_0}, ..., {z_(a-2)}, {z_(a-1) .. z_(T-1)}, each walked backwards"""
    chosen = points[:taken]
    runs = [[z] for z in chosen[:arcs - 1]] + [chosen[arcs - 1:]]
    return [list(reversed(run)) for run in runs]


def _block_order(cycle_blocks, fixed_blocks):
    """
    D-order of blocks making arc-successor∘D-successor one cycle

    A cycle with an odd number of arcs keeps its arcs in order. Cycles with an
    even number of arcs are paired: X1, Y2..Yb, X2..Xa, Y1.
    """
    order = []
    pending = None
    for blocks in cycle_blocks:
        if len(blocks) % 2:
            order.extend(blocks)
        elif pending is None:
            pending = blocks
        else:
            x, y = pending, blocks
            order.extend([x[0]] + y[1:] + x[1:] + [y[0]])
            pending = None
    if pending is not None:
        raise CertificateError('odd number of cycles with an even arc count')
    order.extend(fixed_blocks)
    return order


def _certificate_from_d_order(sigma, d_points):
    degree = sigma.degree
    d = Permutation.from_cycles([d_points], degree)
    c1_cycles = decompose(compose(sigma, d)).cycles
    if len(c1_cycles) != 1:
        raise CertificateError(f'sigma∘D has {len(c1_cycles)} nontrivial cycles')
    c2 = decompose(Permutation.from_cycles([list(reversed(d_points))], degree)).cycles[0]
    return FactorizationCertificate(sigma, c1_cycles[0], c2)


def _construct(sigma, l1, l2):
    decomposition = decompose(sigma)
    cycles = decomposition.cycles
    lengths = [c.length for c in cycles]
    m = sum(lengths)
    even_count = sum(1 for length in lengths if length % 2 == 0)
    arc_capacity = m if even_count % 2 == 0 else m - 1

    absorbed = max(0, l1 - m, (l1 + l2 - m - arc_capacity) // 2)
    arcs_total = l1 + l2 - m - 2 * absorbed
    d_total = l2 - absorbed
    logger.debug('Factorizing with %d absorbed fixed points, %d arcs, %d cycle points in D',
                 absorbed, arcs_total, d_total)

    arcs = _distribute_arcs(lengths, arcs_total)
    taken = _distribute_points(lengths, arcs, d_total)
    cycle_blocks = [_cycle_blocks(list(c.points), a, t) for c, a, t in zip(cycles, arcs, taken)]
    fixed_blocks = [[f] for f in decomposition.fixed_points[:absorbed]]
    order = _block_order(cycle_blocks, fixed_blocks)
    return _certificate_from_d_order(sigma, [point for block in order for point in block])


def factorize(sigma, l1, l2):
    """Cycles of lengths l1, l2 whose product is sigma; raises Infeasible with the violated condition"""
    witness = feasible(sigma, l1, l2)
    if not witness.feasible:
        raise Infeasible(witness.reason)

    if witness.verdict == FEASIBLE_CANONICAL:
        first, second = decompose(sigma).cycles
        if first.length != l1:
            first, second = second, first
        return FactorizationCertificate(sigma, first, second)

    certificate = _construct(sigma, l1, l2)
    if (certificate.l1, certificate.l2) != (l1, l2):
        raise CertificateError(f'constructed lengths ({certificate.l1}, {certificate.l2}), wanted ({l1}, {l2})')
    return certificate


def factorize_unordered(sigma, a, b):
    return factorize(sigma, max(a, b), min(a, b))


def base_factorization(sigma):
    """
    A cycle through the whole support times a cycle through one point per cycle

    Lengths are m(sigma) and n(sigma).
    """
    cycles = decompose(sigma).cycles
    if len(cycles) < 2:
        raise DomainError(f'base factorization needs at least 2 nontrivial cycles, found {len(cycles)}')
    return _certificate_from_d_order(sigma, [c.points[0] for c in cycles])
