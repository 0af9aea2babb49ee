from cli.base import JsonCommand, add_decimal_argument, decimal_text
from fibonacci.sequence import convergent
from golden_app.exceptions import InvalidInput


class Command(JsonCommand):
    help = 'List the ratios f(k+1)/f(k) for k = 0 .. count-1.'

    def add_arguments(self, parser):
        parser.add_argument('--count', type=int, required=True)
        add_decimal_argument(parser)

    def build(self, count, decimal=None, **options):
        if count < 1:
            raise InvalidInput(f"--count must be at least 1, got {count}")
        values = [convergent(k) for k in range(count)]
        payload = {'count': count, 'convergents': values}
        if decimal is not None:
            payload['decimals'] = [decimal_text(value, decimal) for value in values]
        return payload
