import re
import sys
from fractions import Fraction

from group_models.errors import MalformedInput, SoficToolkitError
from group_models.perm_core import parse_permutation
from group_models.sofic_profile import PermSequence, SoficProfile

_RATIONAL = re.compile(r'^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$')
_DEGREE_HEADER = re.compile(r'^\s*degree\s*[:=]?\s*(\d+)\s*$', re.IGNORECASE)


class DataProcessor:
    """
    Parsing and validation of toolkit inputs: permutation files, exact
    rationals and profiles, from text (CLI) or JSON bodies (HTTP API)
    """

    def __init__(self, degree=None):
        self.degree = degree

    def parse_rational(self, value, name='value'):
        """
        Parse an exact rational given as "p/q" or "p"

        Args:
            value: text, int or Fraction
            name (str): argument name used in error messages

        Returns:
            Fraction
        """
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        if not isinstance(value, str):
            raise MalformedInput(f'{name} must be a "p/q" string, got {type(value).__name__}')
        match = _RATIONAL.match(value)
        if not match:
            raise MalformedInput(f'{name} must be an exact rational "p/q", got {value!r}')
        numerator, denominator = int(match.group(1)), int(match.group(2) or 1)
        if denominator == 0:
            raise MalformedInput(f'{name} has a zero denominator', position=value.index('/') + 2)
        return Fraction(numerator, denominator)

    def parse_positive_int(self, value, name='value', minimum=1):
        try:
            number = int(value)
        except (TypeError, ValueError):
            raise MalformedInput(f'{name} must be an integer, got {value!r}')
        if isinstance(value, float) or number < minimum:
            raise MalformedInput(f'{name} must be an integer ≥ {minimum}, got {value!r}')
        return number

    def parse_profile(self, text):
        """
        Parse "1:1/2 3:1/4 inf:1/4" (commas or spaces between entries)

        A missing inf entry takes the residual mass.
        """
        masses = {}
        inf_mass = None
        for match in re.finditer(r'[^\s,]+', text):
            entry = match.group()
            key, sep, value = entry.partition(':')
            if not sep:
                raise MalformedInput(f'profile entry {entry!r} needs "length:mass"', position=match.start() + 1)
            mass = self.parse_rational(value, f'mass at {key}')
            if key.lower() in ('inf', '∞'):
                inf_mass = mass
            elif key.isdigit() and int(key) >= 1:
                masses[int(key)] = masses.get(int(key), Fraction(0)) + mass
            else:
                raise MalformedInput(f'bad cycle length {key!r}', position=match.start() + 1)
        return self._build_profile(masses, inf_mass)

    def parse_profile_record(self, record):
        """Parse the structured form {"masses": {"1": "1/2"}, "inf": "1/2"}"""
        if not isinstance(record, dict):
            raise MalformedInput('profile must be an object with "masses" and "inf"')
        masses = {}
        for key, value in (record.get('masses') or {}).items():
            if not str(key).isdigit() or int(key) < 1:
                raise MalformedInput(f'bad cycle length {key!r}')
            masses[int(key)] = self.parse_rational(value, f'mass at {key}')
        inf_mass = record.get('inf')
        return self._build_profile(masses, None if inf_mass is None else self.parse_rational(inf_mass, 'inf'))

    def _build_profile(self, masses, inf_mass):
        if inf_mass is None:
            inf_mass = 1 - sum(masses.values(), Fraction(0))
        return SoficProfile(masses, inf_mass)

    def parse_permutations(self, text, degree=None):
        """
        Parse one permutation per line

        Blank lines and lines starting with '#' are skipped; a "degree N"
        line sets the degree for the cycle-notation lines after it.
        """
        degree = degree if degree is not None else self.degree
        permutations = []
        for line_number, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith('#'):
                continue
            header = _DEGREE_HEADER.match(stripped)
            if header:
                degree = int(header.group(1))
                continue
            permutations.append(parse_permutation(stripped, degree=degree, line=line_number))
        if not permutations:
            raise MalformedInput('no permutation found in input')
        return permutations

    def parse_permutation_value(self, value, degree=None, name='permutation'):
        """Accept text in either notation or a list of 1-based images"""
        if isinstance(value, list):
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
                raise MalformedInput(f'{name} images must be integers')
            value = ' '.join(str(v) for v in value)
        if not isinstance(value, str):
            raise MalformedInput(f'{name} must be text or a list of images')
        try:
            return parse_permutation(value, degree=degree)
        except SoficToolkitError:
            raise
        except ValueError as e:
            raise MalformedInput(f'{name}: {e}')

    def parse_sequence(self, text, degree=None):
        return PermSequence.of(self.parse_permutations(text, degree))

    def read_source(self, path):
        """Read a file path, or standard input for '-' / None"""
        if path in (None, '-'):
            return sys.stdin.read()
        try:
            with open(path, encoding='utf-8') as f:
                return f.read()
        except OSError as e:
            raise MalformedInput(f'cannot read {path}: {e.strerror}')
