from django.conf import settings

from cli.base import (
    JsonCommand, add_decimal_argument, add_rectangle_arguments, decimal_text, rectangle_from_options,
)
from cutoff.dynamics import classify


class Command(JsonCommand):
    help = 'Decide whether the square cut-off runs forever (golden) or at which step it fails.'

    def add_arguments(self, parser):
        add_rectangle_arguments(parser)
        parser.add_argument('--max-steps', type=int, help='step budget (default PAVING_CLASSIFY_BUDGET)')
        add_decimal_argument(parser)

    def build(self, max_steps=None, decimal=None, **options):
        rect = rectangle_from_options(options)
        if max_steps is None:
            max_steps = settings.PAVING_CLASSIFY_BUDGET
        payload = classify(rect, max_steps).to_dict()
        if decimal is not None:
            payload['ratio'] = decimal_text(rect.ratio, decimal)
        return payload
