from types import SimpleNamespace

from flask import Flask, request, jsonify
from flask_cors import CORS
from werkzeug.exceptions import HTTPException

from config import configure_logging, get_config
from group_models import factorization, perm_core, sofic_profile, witness_builder
from group_models.errors import MalformedInput, SoficToolkitError
from utils.data_processor import DataProcessor
from utils.predicate_checks import CHECKS, evaluate_check
from utils.report_generator import ReportGenerator
from utils.suite_runner import SuiteRunner

cfg = get_config()
configure_logging(cfg)

app = Flask(__name__)
app.config.from_object(cfg)
CORS(app, origins=cfg.CORS_ORIGINS)

# Shared utilities
data_processor = DataProcessor()
report_generator = ReportGenerator(include_parts=cfg.WITNESS_INCLUDE_PARTS)


def _body(*required):
    """JSON body with the required fields present"""
    data = request.get_json(silent=True)
    if not isinstance(data, dict):
        raise MalformedInput('request body must be a JSON object')
    for field in required:
        if data.get(field) is None:
            raise MalformedInput(f'Missing required field: {field}')
    return data


def _permutation(data, field='permutation'):
    degree = data.get('degree')
    if degree is not None:
        degree = data_processor.parse_positive_int(degree, 'degree')
    return data_processor.parse_permutation_value(data[field], degree=degree, name=field)


def _threshold(data):
    threshold = data.get('inf_threshold', app.config['INF_THRESHOLD'])
    return None if threshold is None else data_processor.parse_positive_int(threshold, 'inf_threshold')


@app.errorhandler(SoficToolkitError)
def handle_toolkit_error(e):
    return jsonify(e.to_dict()), e.http_status


@app.errorhandler(Exception)
def handle_unexpected_error(e):
    if isinstance(e, HTTPException):
        return jsonify({'error': e.description, 'kind': 'http'}), e.code
    app.logger.exception('Unhandled error')
    return jsonify({'error': str(e), 'kind': 'internal'}), 500


# API Routes
@app.route('/api/health', methods=['GET'])
def health_check():
    """Health check endpoint"""
    return jsonify({'status': 'healthy', 'predicates': list(CHECKS)})


@app.route('/api/stats', methods=['POST'])
def permutation_stats():
    """Cycle statistics and profile of one permutation"""
    data = _body('permutation')
    return jsonify(report_generator.permutation_record(_permutation(data), _threshold(data)))


@app.route('/api/sequence-stats', methods=['POST'])
def sequence_stats():
    """Per-level profiles and trajectories of a permutation sequence"""
    data = _body('permutations')
    if not isinstance(data['permutations'], list) or not data['permutations']:
        raise MalformedInput('permutations must be a non-empty list')
    levels = [data_processor.parse_permutation_value(value, name=f'permutations[{k}]')
              for k, value in enumerate(data['permutations'])]
    threshold = _threshold(data)
    stats = sofic_profile.sequence_stats(
        sofic_profile.PermSequence.of(levels),
        (lambda degree: threshold) if threshold is not None else None)
    record = report_generator.sequence_record(stats)
    record['trajectories'] = report_generator.table(stats.trajectories()).to_dict(orient='records')
    return jsonify(record)


@app.route('/api/factorize', methods=['POST'])
def factorize():
    """Product-of-two-cycles certificate; infeasible instances answer 422 with the reason"""
    data = _body('permutation')
    sigma = _permutation(data)
    if data.get('base'):
        return jsonify(factorization.base_factorization(sigma).to_dict())
    for field in ('l1', 'l2'):
        if data.get(field) is None:
            raise MalformedInput(f'Missing required field: {field}')
    l1 = data_processor.parse_positive_int(data['l1'], 'l1')
    l2 = data_processor.parse_positive_int(data['l2'], 'l2')
    return jsonify(factorization.factorize(sigma, l1, l2).to_dict())


@app.route('/api/check/<string:predicate>', methods=['POST'])
def check_predicate(predicate):
    """Evaluate a class predicate on exact rationals"""
    data = _body()
    return jsonify(evaluate_check(predicate, data, data_processor, report_generator))


@app.route('/api/witness/power', methods=['POST'])
def power_witness():
    data = _body('n', 'cp', 'cq', 'm')
    report = witness_builder.build_power_class_witness(
        data_processor.parse_positive_int(data['n'], 'n'),
        data_processor.parse_rational(data['cp'], 'cp'),
        data_processor.parse_rational(data['cq'], 'cq'),
        data_processor.parse_positive_int(data['m'], 'm'),
        _threshold(data),
    )
    reporter = ReportGenerator(include_parts=bool(data.get('include_parts', report_generator.include_parts)))
    return jsonify(reporter.witness_record(report))


@app.route('/api/witness/two-class', methods=['POST'])
def two_class_witness():
    data = _body('permutation', 'c1', 'c2')
    certificate = witness_builder.build_two_class_witness(
        _permutation(data),
        data_processor.parse_rational(data['c1'], 'c1'),
        data_processor.parse_rational(data['c2'], 'c2'),
    )
    return jsonify(certificate.to_dict())


@app.route('/api/witness/approximate-conjugator', methods=['POST'])
def approximate_conjugator():
    data = _body('p', 'q')
    return jsonify(witness_builder.approximate_conjugator(_permutation(data, 'p'), _permutation(data, 'q')).to_dict())


@app.route('/api/verify', methods=['POST'])
def verify():
    """Run acceptance suites with the configured sizes"""
    data = request.get_json(silent=True) or {}
    runner = SuiteRunner(SimpleNamespace(**app.config), seed=data.get('seed'), max_n=data.get('max_n'),
                         budget=data.get('budget'))
    results = runner.run(data.get('suites'))
    passed = all(result.passed for result in results)
    return jsonify({'passed': passed, 'seed': runner.seed,
                    'suites': [result.to_dict() for result in results]})


if __name__ == '__main__':
    print("Sofic Class Toolkit API starting...")
    print(f"Server running on http://{cfg.API_HOST}:{cfg.API_PORT}")

    app.run(debug=cfg.DEBUG, host=cfg.API_HOST, port=cfg.API_PORT)
