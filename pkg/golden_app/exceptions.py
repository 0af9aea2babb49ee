"""Errors raised by the paving apps.

Every error knows the exit code the command line reports for it and how to
describe itself as one line of JSON on stderr.
"""


class GoldenError(Exception):
    """Base class of every domain error."""

    exit_code = 1

    @property
    def code(self):
        return type(self).__name__

    def details(self):
        """Extra machine-readable fields for the JSON error line."""
        return {}

    def to_dict(self):
        return {'error': self.code, 'message': str(self), **self.details()}


class InvalidInput(GoldenError, ValueError):
    pass


class DivisionByZero(GoldenError, ZeroDivisionError):
    pass


class IndexOutOfRange(GoldenError, IndexError):
    pass


class NotAProperRectangle(GoldenError, ValueError):
    pass


class InvalidDimensions(GoldenError, ValueError):
    pass


class ParseError(GoldenError, ValueError):
    pass


class PatternFailsBeforeK(GoldenError):
    def __init__(self, step, k):
        self.step = step
        self.k = k
        super().__init__(f"cut-off pattern fails at step {step}, before square {k}")

    def details(self):
        return {'step': self.step}


class StepBudgetExhausted(GoldenError):
    exit_code = 2

    def __init__(self, max_steps):
        self.max_steps = max_steps
        super().__init__(f"no violation of 0 < W < L within {max_steps} steps")

    def details(self):
        return {'max_steps': self.max_steps}


class InvariantViolation(GoldenError):
    exit_code = 2

    def __init__(self, failed):
        self.failed = tuple(failed)
        super().__init__(f"invariant check failed: {', '.join(self.failed)}")

    def details(self):
        return {'failed': list(self.failed)}


class VerificationFailed(GoldenError):
    exit_code = 2

    def __init__(self, report):
        self.report = report
        super().__init__(f"tiling does not verify: {', '.join(report.failed_checks())} failed")

    def details(self):
        return {'failed': list(self.report.failed_checks())}
