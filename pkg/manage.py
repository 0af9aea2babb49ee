#!/usr/bin/env python
"""Command-line entry point of the golden_app project.

The paving commands (identity, convergents, sandwich, matrix, classify, tile,
render) go through cli.runner, which reports errors as one JSON line on
stderr with exit codes 0/1/2. Everything else (test, check, ...) is plain
Django.
"""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'golden_app.settings')
    try:
        import django
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc

    django.setup()
    from cli.runner import COMMANDS, run

    if len(sys.argv) > 1 and sys.argv[1] in COMMANDS:
        sys.exit(run(sys.argv[1:]))
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
