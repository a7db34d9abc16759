#!/usr/bin/env python3
"""
Command-line surface of the Sofic Class Toolkit

Exit codes: 0 ok, 1 suite failure, 2 usage or parse error, 3 infeasible,
4 domain error.
"""

import argparse
import logging
import sys

from config import configure_logging, get_config
from group_models import factorization, oracle, perm_core, sofic_profile, witness_builder
from group_models.errors import Infeasible, MalformedInput, SoficToolkitError
from utils.data_processor import DataProcessor
from utils.predicate_checks import evaluate_check
from utils.report_generator import ReportGenerator
from utils.suite_runner import SuiteRunner

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_SUITE_FAILURE = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3


def _add_input(parser):
    parser.add_argument('input', nargs='?', default='-', help="permutation file, '-' for standard input")
    parser.add_argument('--degree', type=int, help='degree for cycle notation')


def build_parser(cfg):
    parser = argparse.ArgumentParser(prog='sofic', description='Permutation statistics and class-product tools')
    parser.add_argument('--format', choices=('text', 'structured', 'csv'), default='structured')
    parser.add_argument('--log-level', help='override LOG_LEVEL')
    commands = parser.add_subparsers(dest='command', required=True)

    stats = commands.add_parser('stats', help='cycle statistics of permutations')
    _add_input(stats)
    stats.add_argument('--inf-threshold', type=int, default=cfg.INF_THRESHOLD)
    stats.add_argument('--sequence', action='store_true', help='treat the lines as levels of one sequence')

    factorize = commands.add_parser('factorize', help='write a permutation as a product of two cycles')
    _add_input(factorize)
    factorize.add_argument('--l1', type=int)
    factorize.add_argument('--l2', type=int)
    factorize.add_argument('--base', action='store_true', help='the (m, n) base pair instead of (l1, l2)')

    check = commands.add_parser('check', help='evaluate a class predicate on exact rationals')
    predicates = check.add_subparsers(dest='predicate', required=True)
    in_class_power = predicates.add_parser('in-class-power')
    in_class_power.add_argument('--cp', required=True)
    in_class_power.add_argument('--cq', required=True)
    in_class_power.add_argument('--m', required=True)
    covers = predicates.add_parser('covers')
    covers.add_argument('--cp', required=True)
    covers.add_argument('--m', required=True)
    bracket = predicates.add_parser('bracket')
    bracket.add_argument('--c', required=True)
    density = predicates.add_parser('density')
    density.add_argument('--c', required=True)
    density.add_argument('--m', required=True)
    two_class = predicates.add_parser('two-class')
    for flag in ('--p-m', '--p-n', '--c1', '--c2'):
        two_class.add_argument(flag, required=True)
    trace = predicates.add_parser('trace')
    for flag in ('--p-m', '--p-n', '--img-m', '--img-n'):
        trace.add_argument(flag, required=True)
    trace.add_argument('--p-inf')
    trace.add_argument('--img-inf')
    conjugate = predicates.add_parser('conjugate')
    conjugate.add_argument('--profile', required=True)
    conjugate.add_argument('--other', required=True)
    powers = predicates.add_parser('powers')
    powers.add_argument('--profile', required=True)

    witness = commands.add_parser('witness', help='finite witness constructions')
    witnesses = witness.add_subparsers(dest='witness', required=True)
    power = witnesses.add_parser('power')
    power.add_argument('--n', type=int, required=True)
    power.add_argument('--cp', required=True)
    power.add_argument('--cq', required=True)
    power.add_argument('--m', required=True)
    power.add_argument('--inf-threshold', type=int, default=cfg.INF_THRESHOLD)
    power.add_argument('--omit-parts', action='store_true')
    two_class_witness = witnesses.add_parser('two-class')
    _add_input(two_class_witness)
    two_class_witness.add_argument('--c1', required=True)
    two_class_witness.add_argument('--c2', required=True)
    two_class_witness.add_argument('--pad-to', type=int, help='add fixed points up to this degree')
    approximate = witnesses.add_parser('approximate-conjugator')
    _add_input(approximate)
    glue = witnesses.add_parser('glue')
    _add_input(glue)
    glue.add_argument('--cycles', required=True, help='comma-separated 0-based cycle indices')

    verify = commands.add_parser('verify', help='run acceptance suites')
    verify.add_argument('--suite', action='append', choices=['all'] + list(SuiteRunner(cfg).suites))
    verify.add_argument('--max-n', type=int)
    verify.add_argument('--budget', type=int)
    verify.add_argument('--seed', type=int)

    table = commands.add_parser('table', help='oracle feasibility table')
    table.add_argument('--max-n', type=int, default=cfg.VERIFY_MAX_N)
    table.add_argument('--budget', type=int, default=cfg.ORACLE_BUDGET)

    return parser


class Commands:
    def __init__(self, cfg, args):
        self.cfg = cfg
        self.args = args
        self.processor = DataProcessor(degree=getattr(args, 'degree', None))
        self.reporter = ReportGenerator(include_parts=cfg.WITNESS_INCLUDE_PARTS)

    def emit(self, record):
        print(self.reporter.render(record, 'text' if self.args.format == 'text' else 'structured'))

    def emit_table(self, frame):
        print(self.reporter.render_table(frame, self.args.format))

    def read_permutations(self):
        return self.processor.parse_permutations(self.processor.read_source(self.args.input))

    def read_one(self):
        permutations = self.read_permutations()
        if len(permutations) != 1:
            raise MalformedInput(f'expected one permutation, found {len(permutations)}')
        return permutations[0]

    def stats(self):
        threshold = self.args.inf_threshold
        if self.args.sequence:
            stats = sofic_profile.sequence_stats(
                self.processor.parse_sequence(self.processor.read_source(self.args.input)),
                (lambda degree: threshold) if threshold is not None else None)
            if self.args.format == 'csv':
                self.emit_table(stats.trajectories())
            else:
                record = self.reporter.sequence_record(stats)
                record['trajectories'] = self.reporter.table(stats.trajectories())
                self.emit(record)
            return EXIT_OK
        permutations = self.read_permutations()
        records = [self.reporter.permutation_record(p, threshold) for p in permutations]
        self.emit(records[0] if len(records) == 1 else {'permutations': records})
        return EXIT_OK

    def factorize(self):
        sigma = self.read_one()
        if self.args.base:
            self.emit(self.reporter.certificate_record(factorization.base_factorization(sigma)))
            return EXIT_OK
        if self.args.l1 is None or self.args.l2 is None:
            raise MalformedInput('--l1 and --l2 are required unless --base is given')
        try:
            certificate = factorization.factorize(sigma, self.args.l1, self.args.l2)
        except Infeasible as e:
            if self.args.format == 'text':
                print(f'infeasible: {e.reason}')
            else:
                self.emit(self.reporter.infeasible_record(e))
            return EXIT_INFEASIBLE
        self.emit(self.reporter.certificate_record(certificate))
        return EXIT_OK

    def check(self):
        values = {field: getattr(self.args, field, None) for field in
                  ('cp', 'cq', 'm', 'c', 'p_m', 'p_n', 'c1', 'c2', 'img_m', 'img_n', 'p_inf', 'img_inf',
                   'profile', 'other')}
        self.emit(evaluate_check(self.args.predicate, values, self.processor, self.reporter))
        return EXIT_OK

    def witness(self):
        kind = self.args.witness
        if kind == 'power':
            if self.args.omit_parts:
                self.reporter.include_parts = False
            report = witness_builder.build_power_class_witness(
                self.processor.parse_positive_int(self.args.n, 'n'),
                self.processor.parse_rational(self.args.cp, 'cp'),
                self.processor.parse_rational(self.args.cq, 'cq'),
                self.processor.parse_positive_int(self.args.m, 'm'),
                self.args.inf_threshold,
            )
            self.emit(self.reporter.witness_record(report))
        elif kind == 'two-class':
            p = self.read_one()
            if self.args.pad_to:
                p = _pad(p, self.args.pad_to)
            certificate = witness_builder.build_two_class_witness(
                p,
                self.processor.parse_rational(self.args.c1, 'c1'),
                self.processor.parse_rational(self.args.c2, 'c2'),
            )
            self.emit(self.reporter.certificate_record(certificate))
        elif kind == 'approximate-conjugator':
            permutations = self.read_permutations()
            if len(permutations) != 2:
                raise MalformedInput(f'expected two permutations, found {len(permutations)}')
            self.emit(witness_builder.approximate_conjugator(*permutations).to_dict())
        else:
            p = self.read_one()
            indices = [self.processor.parse_positive_int(token, 'cycle index', minimum=0)
                       for token in self.args.cycles.split(',') if token.strip()]
            glued = witness_builder.glue_cycles(p, indices)
            self.emit({
                'glued': perm_core.format_permutation(glued),
                'hamming': sofic_profile.rational_str(perm_core.hamming(p, glued)),
            })
        return EXIT_OK

    def verify(self):
        runner = SuiteRunner(self.cfg, seed=self.args.seed, max_n=self.args.max_n, budget=self.args.budget)
        results = runner.run(self.args.suite)
        passed = all(result.passed for result in results)
        self.emit({'passed': passed, 'seed': runner.seed, 'suites': [result.to_dict() for result in results]})
        return EXIT_OK if passed else EXIT_SUITE_FAILURE

    def table(self):
        self.emit_table(oracle.feasibility_table(self.args.max_n, self.args.budget))
        return EXIT_OK


def _pad(p, degree):
    if degree < p.degree:
        raise MalformedInput(f'cannot pad degree {p.degree} down to {degree}')
    return perm_core.Permutation.from_one_line(p.one_line() + list(range(p.degree + 1, degree + 1)))


def main(argv=None, cfg=None):
    cfg = cfg or get_config()
    parser = build_parser(cfg)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    configure_logging(cfg, args.log_level)

    try:
        return getattr(Commands(cfg, args), args.command)()
    except SoficToolkitError as e:
        logger.debug('Command failed', exc_info=True)
        print(f'error: {e}', file=sys.stderr)
        return e.exit_code


if __name__ == '__main__':
    sys.exit(main())
