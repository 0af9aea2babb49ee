"""The command-line front end: dispatch, JSON errors and exit codes.

Exit codes: 0 success, 1 invalid input or arguments, 2 a verification
failure or an exhausted classification budget. Errors are reported as one
line of JSON on stderr.
"""
import logging
import sys

from django.core.management import call_command
from django.core.management.base import CommandError

from golden_app.exceptions import GoldenError
from render.serializers import dumps

logger = logging.getLogger(__name__)

COMMANDS = ('identity', 'convergents', 'sandwich', 'matrix', 'classify', 'tile', 'render')


def _report(stream, payload):
    stream.write(dumps(payload) + '\n')


def run(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    if not argv or argv[0] not in COMMANDS:
        name = argv[0] if argv else ''
        _report(stderr, {
            'error': 'UnknownCommand',
            'message': f"unknown command {name!r}; expected one of {', '.join(COMMANDS)}",
        })
        return 1

    name, *args = argv
    try:
        call_command(name, *args, stdout=stdout, stderr=stderr)
    except GoldenError as exc:
        logger.info(f"{name} failed: {exc}")
        _report(stderr, exc.to_dict())
        return exc.exit_code
    except CommandError as exc:
        logger.info(f"{name} rejected its arguments: {exc}")
        _report(stderr, {'error': 'InvalidArguments', 'message': str(exc)})
        return exc.returncode
    return 0
