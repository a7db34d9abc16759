import math

import pytest

from group_models import factorization, oracle, perm_core
from group_models.errors import BudgetExceeded, LengthOutOfRange, RangeError
from group_models.perm_core import format_permutation, parse_permutation

FIVE_CYCLE = parse_permutation('2 3 4 5 1')


@pytest.mark.parametrize('n, length, expected', [(4, 3, 8), (3, 2, 3), (5, 5, 24), (6, 6, 120), (6, 2, 15)])
def test_enumerate_cycles_counts(n, length, expected):
    cycles = list(oracle.enumerate_cycles(n, length))
    assert len(cycles) == expected == oracle.cycle_count(n, length)
    assert len(set(cycles)) == expected
    assert all(perm_core.cycle_type(c).masses.get(length) == length for c in cycles)


def test_enumerate_cycles_range():
    with pytest.raises(RangeError):
        list(oracle.enumerate_cycles(3, 1))
    with pytest.raises(RangeError):
        list(oracle.enumerate_cycles(3, 4))


def test_all_permutations():
    everything = list(oracle.all_permutations(4))
    assert len(set(everything)) == math.factorial(4)


def test_brute_force_two_cycle():
    assert oracle.brute_force_two_cycle(FIVE_CYCLE, 3, 3) is not None
    assert oracle.brute_force_two_cycle(FIVE_CYCLE, 3, 2) is None

    certificate = oracle.brute_force_two_cycle(perm_core.identity(4), 2, 2)
    assert str(certificate.c1) == str(certificate.c2) == '(1 2)'


def test_brute_force_certificate_multiplies_out():
    sigma = parse_permutation('(1 2)(3 4)', degree=5)
    certificate = oracle.brute_force_two_cycle(sigma, 4, 2)
    product = perm_core.compose(certificate.c1.as_permutation(5), certificate.c2.as_permutation(5))
    assert product == sigma


def test_brute_force_guards():
    with pytest.raises(BudgetExceeded):
        oracle.brute_force_two_cycle(perm_core.identity(10), 10, 10, budget=1000)
    with pytest.raises(LengthOutOfRange):
        oracle.brute_force_two_cycle(FIVE_CYCLE, 2, 1)


def test_partitions():
    assert oracle.partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert [len(oracle.partitions(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_class_transversal():
    assert len(oracle.class_transversal(4)) == 5
    assert len(oracle.class_transversal(7)) == 15
    (partition, representative), = oracle.class_transversal(1)
    assert partition == (1,)
    assert representative == perm_core.identity(1)


def test_class_transversal_has_one_representative_per_type():
    transversal = oracle.class_transversal(6)
    types = {tuple(perm_core.cycle_type(p).masses.items()) for p in transversal.representatives}
    assert len(types) == len(transversal)


def test_class_transversal_range():
    with pytest.raises(RangeError):
        oracle.class_transversal(0)
    with pytest.raises(RangeError):
        oracle.class_transversal(oracle.MAX_TRANSVERSAL_DEGREE + 1)


def test_partition_representative():
    representative = oracle.partition_representative((3, 2, 1))
    assert format_permutation(representative) == '(1 2 3)(4 5)'
    assert representative.degree == 6
    assert oracle.format_partition((3, 2, 1)) == '3+2+1'


def test_feasibility_table():
    table = oracle.feasibility_table(4)
    assert list(table.columns) == ['n', 'type', 'l1', 'l2', 'feasible']
    assert len(table) == 2 * 1 + 3 * 3 + 5 * 6

    row = table[(table['n'] == 3) & (table['type'] == '3') & (table['l1'] == 2)].iloc[0]
    assert bool(row['feasible'])

    for record in table.to_dict(orient='records'):
        sigma = oracle.partition_representative(tuple(int(x) for x in record['type'].split('+')))
        assert factorization.feasible(sigma, record['l1'], record['l2']).feasible == record['feasible']


def test_brute_force_is_invariant_under_conjugation(random_permutation):
    relabelings = [random_permutation(5) for _ in range(3)]
    for partition, sigma in oracle.class_transversal(5):
        for l1 in range(2, 6):
            for l2 in range(2, l1 + 1):
                found = oracle.brute_force_two_cycle(sigma, l1, l2) is not None
                for r in relabelings:
                    conjugated = perm_core.conjugate(sigma, r)
                    assert (oracle.brute_force_two_cycle(conjugated, l1, l2) is not None) == found, \
                        (oracle.format_partition(partition), l1, l2, format_permutation(r))
