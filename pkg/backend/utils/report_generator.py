import json
from fractions import Fraction

import pandas as pd

from group_models import perm_core
from group_models.perm_core import format_permutation
from group_models.sofic_profile import default_threshold, profile_of, rational_str

FORMATS = ('text', 'structured', 'csv')


class ReportGenerator:
    """
    Builds the result records of the toolkit and renders them as text,
    structured JSON (stable keys, no timestamps) or CSV tables
    """

    def __init__(self, include_parts=True):
        self.include_parts = include_parts

    def permutation_record(self, p, inf_threshold=None):
        """Statistics of one permutation, keys as in the documented schema"""
        decomposition = perm_core.decompose(p)
        support, cycles = perm_core.support_stats(p)
        threshold = default_threshold(p.degree) if inf_threshold is None else inf_threshold
        return {
            'degree': p.degree,
            'cycles': format_permutation(p),
            'fixed_point_count': len(decomposition.fixed_points),
            'cyc': {str(i): mass for i, mass in perm_core.cycle_type(p).masses.items()},
            'm': support,
            'n_cycles': cycles,
            'hamming_to_id': rational_str(perm_core.hamming(p, perm_core.identity(p.degree))),
            'inf_threshold': threshold,
            'profile': profile_of(p, threshold).to_dict(),
        }

    def sequence_record(self, stats):
        return {
            'levels': [
                {'n_k': degree, 'inf_threshold': threshold, 'profile': profile.to_dict()}
                for degree, threshold, profile in zip(stats.degrees, stats.thresholds, stats.profiles)
            ],
        }

    def certificate_record(self, certificate):
        return certificate.to_dict()

    def infeasible_record(self, error):
        return {'feasible': False, 'reason': error.reason}

    def check_record(self, predicate, verdict, inequalities=(), **extra):
        record = {
            'predicate': predicate,
            'verdict': verdict,
            'inequalities': [str(inequality) for inequality in inequalities],
        }
        record.update(extra)
        return record

    def witness_record(self, report):
        record = {
            'target': report.target.to_dict(),
            'achieved': report.achieved.to_dict(),
            'defect': rational_str(report.defect),
            'parameters': report.parameters,
            'part_supports': report.part_supports,
            'product_cycle_count': perm_core.support_stats(report.product)[1],
        }
        if self.include_parts:
            record['parts'] = [format_permutation(part, notation='one-line') for part in report.parts]
        return record

    def table(self, frame):
        """Copy of a DataFrame with exact rationals written as "p/q" text"""
        return frame.apply(lambda column: column.map(
            lambda value: rational_str(value) if isinstance(value, Fraction) else value))

    def render(self, record, format_type='structured'):
        if format_type == 'structured':
            return json.dumps(_plain(record), sort_keys=True, indent=2, ensure_ascii=False)
        return '\n'.join(f'{key}: {value}' for key, value in _flatten(_plain(record)))

    def render_table(self, frame, format_type='csv'):
        frame = self.table(frame)
        if format_type == 'csv':
            return frame.to_csv(index=False).rstrip('\n')
        if format_type == 'structured':
            return json.dumps(frame.to_dict(orient='records'), sort_keys=True, indent=2, ensure_ascii=False)
        return frame.to_string(index=False)


def _plain(value):
    """Convert Fractions and numpy scalars into JSON-ready values"""
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, pd.DataFrame):
        return _plain(value.to_dict(orient='records'))
    if hasattr(value, 'item') and not isinstance(value, (str, bytes)):
        return value.item()
    return value


def _flatten(record, prefix=''):
    for key, value in record.items():
        name = f'{prefix}{key}'
        if isinstance(value, dict) and value:
            yield from _flatten(value, f'{name}.')
        elif isinstance(value, list):
            yield name, ', '.join(str(item) for item in value)
        else:
            yield name, _text(value)


def _text(value):
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, dict):
        return '{}'
    return str(value)
