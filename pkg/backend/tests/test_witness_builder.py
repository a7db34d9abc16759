from fractions import Fraction as F

import pytest

from group_models import perm_core, witness_builder
from group_models.errors import BadIndex, DegreeMismatch, DomainError, InfeasibleTarget, RangeError, SlackTooSmall
from group_models.perm_core import Permutation, format_permutation, parse_permutation
from group_models.sofic_profile import profile_of
from group_models.witness_builder import interval_cycle


def test_interval_cycle():
    c = interval_cycle(2, 5, 6)
    assert format_permutation(c) == '(2 3 4 5)'
    assert perm_core.decompose(c).fixed_points == (1, 6)
    assert interval_cycle(3, 3, 7) == perm_core.identity(7)
    full = interval_cycle(1, 9, 9)
    assert perm_core.support_stats(full) == (9, 1)
    assert profile_of(full).inf_mass == 1


@pytest.mark.parametrize('s, t, n', [(0, 2, 5), (3, 2, 5), (2, 6, 5)])
def test_interval_cycle_range(s, t, n):
    with pytest.raises(RangeError):
        interval_cycle(s, t, n)


def test_glue_cycles():
    p = parse_permutation('(1 2)(3 4)', degree=4)
    glued = witness_builder.glue_cycles(p, [0, 1])
    assert perm_core.support_stats(glued) == (4, 1)
    assert perm_core.hamming(p, glued) <= F(2, 4)
    assert witness_builder.glue_cycles(p, [1]) == p
    assert witness_builder.glue_cycles(p, []) == p


def test_glue_cycles_changes_one_point_per_cycle(random_permutation, rng):
    for _ in range(10):
        p = random_permutation(200)
        count = len(perm_core.decompose(p).cycles)
        selected = sorted(set(rng.integers(0, count, size=4).tolist()))
        glued = witness_builder.glue_cycles(p, selected)
        expected = len(selected) if len(selected) > 1 else 0
        assert perm_core.hamming(p, glued) == F(expected, 200)


def test_glue_cycles_bad_index():
    with pytest.raises(BadIndex):
        witness_builder.glue_cycles(parse_permutation('(1 2)(3 4)', degree=4), [2])


def test_approximate_conjugator_same_type(random_permutation):
    p, relabel = random_permutation(50), random_permutation(50)
    r, defect = witness_builder.approximate_conjugator(p, perm_core.conjugate(p, relabel))
    assert defect == 0
    assert perm_core.conjugate(p, r) == perm_core.conjugate(p, relabel)


def test_approximate_conjugator_small_difference():
    found = witness_builder.approximate_conjugator(
        parse_permutation('(1 2)', degree=100), parse_permutation('(1 2 3)', degree=100))
    assert found.defect <= F(5, 100)
    assert found.defect <= found.bound


def test_approximate_conjugator_against_identity(random_permutation):
    p = random_permutation(300)
    found = witness_builder.approximate_conjugator(p, perm_core.identity(300))
    assert found.defect == perm_core.hamming(p, perm_core.identity(300))


def test_approximate_conjugator_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        witness_builder.approximate_conjugator(perm_core.identity(3), perm_core.identity(4))


def test_approximate_conjugator_record():
    record = witness_builder.approximate_conjugator(
        parse_permutation('2 1 3 4'), parse_permutation('1 2 4 3')).to_dict()
    assert record['defect'] == '0/1'
    assert record['conjugator'] == '(1 3)(2 4)'


def test_power_witness_growing_case():
    n = 100000
    report = witness_builder.build_power_class_witness(n, F(3, 10), F(1, 2), 2)
    assert report.parameters['case'] == 'growing'
    assert len(report.parts) == 2
    assert all(abs(F(support, n) - F(3, 10)) <= F(1, n) for support in report.part_supports)
    assert abs(report.achieved.inf_mass - F(1, 2)) <= F(4, n)
    assert report.defect <= F(4, n)


def test_power_witness_shrinking_case():
    n = 100000
    report = witness_builder.build_power_class_witness(n, F(1, 2), F(1, 2), 2)
    assert report.parameters['case'] == 'shrinking'
    support, cycles = perm_core.support_stats(report.product)
    assert cycles == 1
    assert abs(F(support, n) - F(1, 2)) <= F(4, n)
    assert report.defect <= F(4, n)


@pytest.mark.parametrize('c_p, c_q, m', [
    (F(1, 5), F(1, 2), 3),
    (F(1, 4), F(1), 4),
    (F(2, 5), F(1, 10), 3),
    (F(9, 10), F(3, 10), 4),
])
def test_power_witness_tolerances(c_p, c_q, m):
    n = 20000
    report = witness_builder.build_power_class_witness(n, c_p, c_q, m)
    assert abs(report.achieved.inf_mass - c_q) <= F(m + 2, n)
    assert report.defect <= F(m + 2, n)
    assert all(abs(F(support, n) - c_p) <= F(2, n) for support in report.part_supports)


@pytest.mark.parametrize('n, c_p, c_q, m', [
    (100000, F(3, 10), F(1, 10), 3),
    (20000, F(1, 2), F(1, 10), 3),
    (20000, F(7, 10), F(1, 10), 3),
    (20000, F(7, 10), F(1, 2), 3),
    (20000, F(1), F(1, 10), 3),
    (20000, F(1), F(1, 2), 3),
    (20000, F(9, 10), F(3, 10), 4),
    (20000, F(3, 5), F(1, 3), 2),
])
def test_shrinking_parts_share_one_cycle_type(n, c_p, c_q, m):
    report = witness_builder.build_power_class_witness(n, c_p, c_q, m)
    assert report.parameters['case'] == 'shrinking'
    types = [perm_core.cycle_type(part) for part in report.parts]
    assert all(t == types[0] for t in types)
    assert perm_core.support_stats(report.parts[0])[1] <= 2
    assert perm_core.support_stats(report.product) == (report.parameters['r'], 1)
    assert all(abs(F(support, n) - c_p) <= F(2, n) for support in report.part_supports)


def test_power_witness_product_of_parts():
    report = witness_builder.build_power_class_witness(1000, F(3, 10), F(1, 2), 2)
    first, second = report.parts
    assert report.product == perm_core.compose(second, first)


def test_power_witness_infeasible_target():
    with pytest.raises(InfeasibleTarget):
        witness_builder.build_power_class_witness(1000, F(1, 10), F(1, 2), 2)


def test_power_witness_domain():
    with pytest.raises(DomainError):
        witness_builder.build_power_class_witness(1000, F(1, 2), F(1, 2), 1)
    with pytest.raises(RangeError):
        witness_builder.build_power_class_witness(1000, F(0), F(1, 2), 2)


def long_cycle(length, n):
    return interval_cycle(1, length, n)


def test_two_class_witness():
    p = long_cycle(600, 1000)
    certificate = witness_builder.build_two_class_witness(p, F(2, 5), F(3, 10))
    assert 398 <= certificate.l1 <= 402
    assert 299 <= certificate.l2 <= 303
    assert perm_core.compose(certificate.c1.as_permutation(1000), certificate.c2.as_permutation(1000)) == p


def test_two_class_witness_rejects_small_support():
    p = Permutation.from_cycles([(1, 2, 3), (4, 5)], 1000)
    with pytest.raises(DomainError):
        witness_builder.build_two_class_witness(p, F(2, 5), F(3, 10))


def test_two_class_witness_slack():
    with pytest.raises(SlackTooSmall):
        witness_builder.build_two_class_witness(long_cycle(600, 1000), F(301, 1000), F(301, 1000))
    with pytest.raises(SlackTooSmall):
        witness_builder.build_two_class_witness(perm_core.identity(1000), F(1, 2), F(1, 2))


def test_two_class_witness_rejects_outside_product():
    with pytest.raises(DomainError):
        witness_builder.build_two_class_witness(long_cycle(500, 1000), F(1, 4), F(1, 4))
    with pytest.raises(DomainError):
        witness_builder.build_two_class_witness(perm_core.identity(1000), F(1, 2), F(0))
