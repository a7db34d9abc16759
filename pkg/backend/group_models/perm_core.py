"""
Exact finite-permutation arithmetic

Permutations are stored as numpy arrays of 0-based images; every value that
crosses the module boundary (points, cycles, text) is 1-based.
Composition convention: compose(p, q)(a) = p(q(a)), the right factor acts first.
"""

import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from group_models.cycle_stats import CycleType
from group_models.errors import CertificateError, CycleTypeMismatch, DegreeMismatch, MalformedInput, RangeError

logger = logging.getLogger(__name__)

_CYCLE_TOKEN = re.compile(r'\(|\)|\d+|[^\s,]+')


@dataclass(frozen=True, eq=False)
class Permutation:
    """A bijection of {1..n}; `images[a]` is the 0-based image of 0-based point a"""

    images: np.ndarray

    def __post_init__(self):
        images = np.array(self.images, dtype=np.int64)
        if images.ndim != 1 or images.shape[0] == 0:
            raise MalformedInput('a permutation needs at least one point')
        n = images.shape[0]
        if images.min() < 0 or images.max() >= n:
            bad = int(np.flatnonzero((images < 0) | (images >= n))[0])
            raise MalformedInput(f'image {int(images[bad]) + 1} out of range 1..{n}', position=bad + 1)
        counts = np.bincount(images, minlength=n)
        if counts.max() > 1:
            value = int(np.flatnonzero(counts > 1)[0])
            position = int(np.flatnonzero(images == value)[1])
            raise MalformedInput(f'duplicate image {value + 1}', position=position + 1)
        images.setflags(write=False)
        object.__setattr__(self, 'images', images)

    @classmethod
    def from_one_line(cls, values):
        """Build from 1-based images of 1..n"""
        return cls(np.asarray(values, dtype=np.int64) - 1)

    @classmethod
    def from_cycles(cls, cycles, degree):
        """Build from an iterable of 1-based point sequences; unlisted points are fixed"""
        images = np.arange(degree, dtype=np.int64)
        used = np.zeros(degree, dtype=bool)
        for cycle in cycles:
            points = [int(x) - 1 for x in cycle]
            for a in points:
                if not 0 <= a < degree:
                    raise MalformedInput(f'point {a + 1} out of range 1..{degree}')
                if used[a]:
                    raise MalformedInput(f'point {a + 1} appears twice')
                used[a] = True
            for k, a in enumerate(points):
                images[a] = points[(k + 1) % len(points)]
        return cls(images)

    @property
    def degree(self):
        return int(self.images.shape[0])

    def __call__(self, point):
        return int(self.images[point - 1]) + 1

    def one_line(self):
        return (self.images + 1).tolist()

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.degree == other.degree and bool(np.array_equal(self.images, other.images))

    def __hash__(self):
        return hash(self.images.tobytes())

    def __repr__(self):
        return f'Permutation({format_permutation(self)!r}, degree={self.degree})'


@dataclass(frozen=True)
class Cycle:
    """A nontrivial cycle as 1-based points, (a_1 ... a_k) with a_k -> a_1"""

    points: tuple

    def __post_init__(self):
        points = tuple(int(a) for a in self.points)
        if len(points) < 2:
            raise RangeError(f'a cycle needs at least two points, got {len(points)}')
        if min(points) < 1:
            raise MalformedInput(f'cycle points are 1-based, got {min(points)}')
        if len(set(points)) != len(points):
            raise MalformedInput(f'cycle repeats a point: {points}')
        object.__setattr__(self, 'points', points)

    @property
    def length(self):
        return len(self.points)

    def as_permutation(self, degree):
        return Permutation.from_cycles([self.points], degree)

    def __str__(self):
        return '(' + ' '.join(str(a) for a in self.points) + ')'


@dataclass(frozen=True)
class CycleDecomposition:
    """Canonical dcd: cycles rotated to their minimum and sorted by it; fixed points apart"""

    cycles: tuple
    fixed_points: tuple
    degree: int

    def recompose(self):
        return Permutation.from_cycles([c.points for c in self.cycles], self.degree)


def require_same_degree(p, q):
    if p.degree != q.degree:
        raise DegreeMismatch(f'degrees differ: {p.degree} vs {q.degree}')


def _orbits(images):
    """Yield 0-based orbits, each starting at its minimum, in order of minimum"""
    seen = bytearray(len(images))
    for start in range(len(images)):
        if seen[start]:
            continue
        seen[start] = 1
        orbit = [start]
        a = images[start]
        while a != start:
            seen[a] = 1
            orbit.append(a)
            a = images[a]
        yield orbit


def orbits(p):
    """All 0-based orbits of p, fixed points included, in canonical order"""
    return list(_orbits(p.images.tolist()))


def orbit_lengths(p):
    """Lengths of all orbits (fixed points included) in canonical order"""
    images = p.images.tolist()
    seen = bytearray(len(images))
    lengths = []
    for start in range(len(images)):
        if seen[start]:
            continue
        seen[start] = 1
        length = 1
        a = images[start]
        while a != start:
            seen[a] = 1
            length += 1
            a = images[a]
        lengths.append(length)
    return np.asarray(lengths, dtype=np.int64)


def identity(degree):
    return Permutation(np.arange(degree, dtype=np.int64))


def compose(p, q):
    """(p∘q)(a) = p(q(a))"""
    require_same_degree(p, q)
    return Permutation(p.images[q.images])


def inverse(p):
    images = np.empty_like(p.images)
    images[p.images] = np.arange(p.degree, dtype=np.int64)
    return Permutation(images)


def decompose(p):
    cycles = []
    fixed = []
    for orbit in _orbits(p.images.tolist()):
        if len(orbit) == 1:
            fixed.append(orbit[0] + 1)
        else:
            cycles.append(Cycle(tuple(a + 1 for a in orbit)))
    return CycleDecomposition(tuple(cycles), tuple(fixed), p.degree)


def cycle_type(p):
    lengths, counts = np.unique(orbit_lengths(p), return_counts=True)
    masses = {int(L): int(L) * int(c) for L, c in zip(lengths, counts)}
    return CycleType(p.degree, masses)


def count_fixed_points(p):
    return int(np.count_nonzero(p.images == np.arange(p.degree)))


def hamming(p, q):
    """Normalized number of points where p and q differ, as an exact Fraction"""
    require_same_degree(p, q)
    return Fraction(int(np.count_nonzero(p.images != q.images)), p.degree)


def support_stats(p):
    """(m, n_cycles): support size and number of nontrivial cycles"""
    lengths = orbit_lengths(p)
    nontrivial = lengths[lengths > 1]
    return int(nontrivial.sum()), int(nontrivial.shape[0])


def conjugate(p, r):
    """r∘p∘r⁻¹"""
    require_same_degree(p, r)
    images = np.empty_like(p.images)
    images[r.images] = r.images[p.images]
    return Permutation(images)


def conjugator(p, q):
    """Some r with r∘p∘r⁻¹ == q, aligning equal-length cycles in canonical order"""
    require_same_degree(p, q)
    if cycle_type(p) != cycle_type(q):
        raise CycleTypeMismatch('permutations have different cycle types')

    q_by_length = {}
    for orbit in orbits(q):
        q_by_length.setdefault(len(orbit), []).append(orbit)

    images = np.empty_like(p.images)
    taken = {length: 0 for length in q_by_length}
    for orbit in orbits(p):
        length = len(orbit)
        target = q_by_length[length][taken[length]]
        taken[length] += 1
        images[orbit] = target
    r = Permutation(images)

    if conjugate(p, r) != q:
        raise CertificateError('conjugator failed verification')
    return r


def power(p, m):
    """m-fold composition by repeated squaring; negative m goes through the inverse"""
    if m < 0:
        return power(inverse(p), -m)
    result = np.arange(p.degree, dtype=np.int64)
    base = p.images
    while m:
        if m & 1:
            result = base[result]
        base = base[base]
        m >>= 1
    return Permutation(result)


def order(p):
    return math.lcm(*set(orbit_lengths(p).tolist()))


def sign(p):
    return -1 if (p.degree - orbit_lengths(p).shape[0]) % 2 else 1


def parse_permutation(text, degree=None, line=None):
    """
    Parse one-line ("2 3 1") or cycle ("(1 3)(2 5)") notation

    Cycle notation needs `degree`; one-line notation infers it from the token
    count and checks it against `degree` when both are present.
    """
    text = text.strip()
    if '(' in text or ')' in text:
        return _parse_cycles(text, degree, line)

    tokens = []
    for match in re.finditer(r'\S+', text):
        token = match.group()
        if not token.isdigit():
            raise MalformedInput(f'bad token {token!r}', line=line, position=match.start() + 1)
        tokens.append((int(token), match.start() + 1))
    if not tokens:
        raise MalformedInput('empty permutation', line=line, position=1)
    if degree is not None and len(tokens) != degree:
        raise MalformedInput(f'expected {degree} images, found {len(tokens)}', line=line)

    seen = set()
    for value, position in tokens:
        if not 1 <= value <= len(tokens):
            raise MalformedInput(f'point {value} out of range 1..{len(tokens)}', line=line, position=position)
        if value in seen:
            raise MalformedInput(f'duplicate point {value}', line=line, position=position)
        seen.add(value)
    return Permutation.from_one_line([value for value, _ in tokens])


def _parse_cycles(text, degree, line):
    if degree is None:
        raise MalformedInput('cycle notation needs an explicit degree', line=line)

    cycles = []
    current = None
    used = set()
    for match in _CYCLE_TOKEN.finditer(text):
        token = match.group()
        position = match.start() + 1
        if token == '(':
            if current is not None:
                raise MalformedInput('nested "("', line=line, position=position)
            current = []
        elif token == ')':
            if current is None:
                raise MalformedInput('unbalanced ")"', line=line, position=position)
            cycles.append(current)
            current = None
        elif token.isdigit():
            if current is None:
                raise MalformedInput(f'point {token} outside a cycle', line=line, position=position)
            point = int(token)
            if not 1 <= point <= degree:
                raise MalformedInput(f'point {point} out of range 1..{degree}', line=line, position=position)
            if point in used:
                raise MalformedInput(f'duplicate point {point}', line=line, position=position)
            used.add(point)
            current.append(point)
        else:
            raise MalformedInput(f'bad token {token!r}', line=line, position=position)
    if current is not None:
        raise MalformedInput('unclosed "("', line=line, position=len(text))
    return Permutation.from_cycles(cycles, degree)


def format_permutation(p, notation='cycle'):
    """Cycle notation prints "()" for the identity; one-line prints all images"""
    if notation == 'one-line':
        return ' '.join(str(a) for a in p.one_line())
    cycles = decompose(p).cycles
    if not cycles:
        return '()'
    return ''.join(str(c) for c in cycles)
