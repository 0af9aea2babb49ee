from cli.base import JsonCommand, add_decimal_argument, decimal_text
from fibonacci.sequence import sandwich, sandwich_holds


class Command(JsonCommand):
    help = 'Bound the golden ratio between the convergents 0..n.'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True)
        add_decimal_argument(parser)

    def build(self, n, decimal=None, **options):
        entries = sandwich(n)
        rows = []
        for k, entry in enumerate(entries):
            row = {'k': k, 'value': entry.value, 'side': entry.side.value}
            if decimal is not None:
                row['decimal'] = decimal_text(entry.value, decimal)
            rows.append(row)
        return {'n': n, 'entries': rows, 'holds': sandwich_holds(entries)}
