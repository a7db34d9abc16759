"""
Exception hierarchy shared by the group models, the CLI and the HTTP API
"""


class SoficToolkitError(Exception):
    """Base class; carries the CLI exit code and the HTTP status"""

    exit_code = 4
    http_status = 422
    kind = 'error'

    def to_dict(self):
        return {'error': str(self), 'kind': self.kind}


class MalformedInput(SoficToolkitError):
    """Unparseable permutation, rational or profile text"""

    exit_code = 2
    http_status = 400
    kind = 'malformed_input'

    def __init__(self, message, line=None, position=None):
        self.line = line
        self.position = position
        where = []
        if line is not None:
            where.append(f'line {line}')
        if position is not None:
            where.append(f'position {position}')
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)

    def to_dict(self):
        body = super().to_dict()
        body['line'] = self.line
        body['position'] = self.position
        return body


class LengthOutOfRange(SoficToolkitError):
    """Cycle lengths outside 2 <= l2 <= l1 <= n"""

    exit_code = 2
    http_status = 400
    kind = 'length_out_of_range'


class Infeasible(SoficToolkitError):
    """No factorization exists; `reason` names the violated condition"""

    exit_code = 3
    http_status = 422
    kind = 'infeasible'

    def __init__(self, reason, message=None):
        self.reason = reason
        super().__init__(message or f'infeasible: {reason}')

    def to_dict(self):
        body = super().to_dict()
        body['reason'] = self.reason
        return body


class DomainError(SoficToolkitError):
    """Arguments outside the domain of an operation"""

    kind = 'domain_error'


class DegreeMismatch(DomainError):
    kind = 'degree_mismatch'


class CycleTypeMismatch(DomainError):
    kind = 'cycle_type_mismatch'


class RangeError(DomainError):
    kind = 'range_error'


class BadIndex(DomainError):
    kind = 'bad_index'


class MissingDivisor(DomainError):
    kind = 'missing_divisor'

    def __init__(self, divisor):
        self.divisor = divisor
        super().__init__(f'fixed-point count for power {divisor} is required')


class InfeasibleTarget(DomainError):
    kind = 'infeasible_target'


class SlackTooSmall(DomainError):
    kind = 'slack_too_small'


class BudgetExceeded(DomainError):
    kind = 'budget_exceeded'


class CertificateError(SoficToolkitError):
    """A constructed object failed its own verification"""

    exit_code = 1
    http_status = 500
    kind = 'certificate_error'
