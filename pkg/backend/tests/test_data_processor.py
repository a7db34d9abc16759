from fractions import Fraction as F

import pytest

from group_models.errors import MalformedInput, RangeError
from group_models.perm_core import parse_permutation
from group_models.sofic_profile import SoficProfile, one_infinity_profile
from utils.data_processor import DataProcessor


@pytest.fixture
def processor():
    return DataProcessor()


@pytest.mark.parametrize('value, expected', [
    ('3/10', F(3, 10)),
    (' 2 / 4 ', F(1, 2)),
    ('2', F(2)),
    (3, F(3)),
    (F(1, 7), F(1, 7)),
    ('-1/3', F(-1, 3)),
])
def test_parse_rational(processor, value, expected):
    assert processor.parse_rational(value) == expected


@pytest.mark.parametrize('value', ['0.5', '1/0', 'one', '', 0.5, True, None])
def test_parse_rational_rejects(processor, value):
    with pytest.raises(MalformedInput):
        processor.parse_rational(value, 'cp')


def test_parse_positive_int(processor):
    assert processor.parse_positive_int('12', 'n') == 12
    assert processor.parse_positive_int(0, 'index', minimum=0) == 0
    for value in ('0', 'abc', None, 2.5):
        with pytest.raises(MalformedInput):
            processor.parse_positive_int(value, 'n')


def test_parse_profile(processor):
    assert processor.parse_profile('1:1/2 inf:1/2') == one_infinity_profile(F(1, 2))
    assert processor.parse_profile('1:1/2') == one_infinity_profile(F(1, 2))
    assert processor.parse_profile('1:1/3, 3:1/3, ∞:1/3') == SoficProfile({1: F(1, 3), 3: F(1, 3)}, F(1, 3))
    assert processor.parse_profile('2:1') == SoficProfile({2: F(1)})


@pytest.mark.parametrize('text', ['1', 'x:1/2', '0:1', '1:0.5'])
def test_parse_profile_rejects(processor, text):
    with pytest.raises(MalformedInput):
        processor.parse_profile(text)


def test_parse_profile_over_unit_mass(processor):
    with pytest.raises(RangeError):
        processor.parse_profile('1:1 2:1/2')


def test_parse_profile_record(processor):
    record = {'masses': {'1': '1/2'}, 'inf': '1/2'}
    assert processor.parse_profile_record(record) == one_infinity_profile(F(1, 2))
    assert processor.parse_profile_record({'masses': {'1': '1/4'}}).inf_mass == F(3, 4)
    with pytest.raises(MalformedInput):
        processor.parse_profile_record({'masses': {'a': '1'}})


def test_parse_permutations(processor):
    text = '2 1 3\n# a comment\n\ndegree 5\n(1 3)(2 5)\n'
    first, second = processor.parse_permutations(text)
    assert first == parse_permutation('2 1 3')
    assert second == parse_permutation('3 5 1 4 2')


def test_parse_permutations_reports_line(processor):
    with pytest.raises(MalformedInput) as excinfo:
        processor.parse_permutations('2 1 3\n\n2 2 1\n')
    assert excinfo.value.line == 3
    assert excinfo.value.position == 3
    assert 'line 3' in str(excinfo.value)


def test_parse_permutations_needs_content(processor):
    with pytest.raises(MalformedInput):
        processor.parse_permutations('# nothing\n\n')


def test_default_degree_for_cycle_notation():
    assert DataProcessor(degree=4).parse_permutations('(1 2)')[0].degree == 4


def test_parse_permutation_value(processor):
    assert processor.parse_permutation_value([2, 3, 1]) == parse_permutation('2 3 1')
    assert processor.parse_permutation_value('(1 2)', degree=3) == parse_permutation('2 1 3')
    with pytest.raises(MalformedInput):
        processor.parse_permutation_value([2, 'a', 1])
    with pytest.raises(MalformedInput):
        processor.parse_permutation_value(231)


def test_parse_sequence(processor):
    sequence = processor.parse_sequence('2 1\n2 1 3 4\n')
    assert [degree for degree, _ in sequence.levels] == [2, 4]


def test_read_source(processor, write_input, tmp_path):
    path = write_input('2 1 3\n')
    assert processor.read_source(path) == '2 1 3\n'
    with pytest.raises(MalformedInput):
        processor.read_source(str(tmp_path / 'missing.txt'))
