"""
Profile predicates exposed by `check` and /api/check/<predicate>

Each check takes raw argument values (CLI strings or JSON values), parses
them exactly and returns a record with the verdict and the instantiated
inequalities.
"""

from group_models import sofic_profile
from group_models.errors import MalformedInput
from group_models.sofic_profile import rational_str


def _profile(processor, value, name):
    if isinstance(value, dict):
        return processor.parse_profile_record(value)
    if isinstance(value, str):
        return processor.parse_profile(value)
    raise MalformedInput(f'{name} must be a profile string or object')


def check_in_class_power(processor, values):
    cp = processor.parse_rational(values['cp'], 'cp')
    cq = processor.parse_rational(values['cq'], 'cq')
    m = processor.parse_positive_int(values['m'], 'm')
    inequality = sofic_profile.class_power_inequality(cq, cp, m)
    return inequality.holds, [inequality], {}


def check_covers(processor, values):
    cp = processor.parse_rational(values['cp'], 'cp')
    m = processor.parse_positive_int(values['m'], 'm')
    inequality = sofic_profile.covers_inequality(cp, m)
    return inequality.holds, [inequality], {}


def check_bracket(processor, values):
    c = processor.parse_rational(values['c'], 'c')
    m = sofic_profile.bracket_index(c)
    if m == 1:
        bracket = f'{rational_str(c)} = 1/1'
    else:
        bracket = f'1/{m} ≤ {rational_str(c)} < 1/{m - 1}'
    return m, [bracket], {}


def check_density(processor, values):
    c = processor.parse_rational(values['c'], 'c')
    m = processor.parse_positive_int(values['m'], 'm')
    j = sofic_profile.density_bounds(c, m)
    return j, [f'{j}/{m} ≤ {rational_str(c)} < {j + 1}/{m}'], {}


def check_two_class(processor, values):
    inequalities = sofic_profile.two_class_inequalities(
        processor.parse_rational(values['p_m'], 'p-m'),
        processor.parse_rational(values['p_n'], 'p-n'),
        processor.parse_rational(values['c1'], 'c1'),
        processor.parse_rational(values['c2'], 'c2'),
    )
    return all(i.holds for i in inequalities), list(inequalities), {}


def check_trace(processor, values):
    optional = {}
    for key in ('p_inf', 'img_inf'):
        if values.get(key) is not None:
            optional[key] = processor.parse_rational(values[key], key.replace('_', '-'))
    report = sofic_profile.trace_constraints_from_stats(
        processor.parse_rational(values['p_m'], 'p-m'),
        processor.parse_rational(values['p_n'], 'p-n'),
        processor.parse_rational(values['img_m'], 'img-m'),
        processor.parse_rational(values['img_n'], 'img-n'),
        inf=optional.get('p_inf'),
        inf_img=optional.get('img_inf'),
    )
    inequalities = [report.sum_constraint, report.difference_constraint]
    extra = {'constraints': report.to_dict()}
    return report.holds, inequalities, extra


def check_conjugate(processor, values):
    P = _profile(processor, values['profile'], 'profile')
    Q = _profile(processor, values['other'], 'other')
    return sofic_profile.conjugate_equiv(P, Q), [], {}


def check_powers(processor, values):
    P = _profile(processor, values['profile'], 'profile')
    return sofic_profile.powers_stay_in_class(P), [], {'in_cyc_1_inf': sofic_profile.in_cyc_1_inf(P)}


CHECKS = {
    'in-class-power': (('cp', 'cq', 'm'), check_in_class_power),
    'covers': (('cp', 'm'), check_covers),
    'bracket': (('c',), check_bracket),
    'density': (('c', 'm'), check_density),
    'two-class': (('p_m', 'p_n', 'c1', 'c2'), check_two_class),
    'trace': (('p_m', 'p_n', 'img_m', 'img_n'), check_trace),
    'conjugate': (('profile', 'other'), check_conjugate),
    'powers': (('profile',), check_powers),
}


def evaluate_check(name, values, processor, reporter):
    if name not in CHECKS:
        raise MalformedInput(f"unknown predicate {name!r}; choose from {', '.join(CHECKS)}")
    required, check = CHECKS[name]
    for field in required:
        if values.get(field) is None:
            raise MalformedInput(f'Missing required field: {field}')
    verdict, inequalities, extra = check(processor, values)
    return reporter.check_record(name, verdict, inequalities, **extra)
