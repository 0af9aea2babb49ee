from cli.base import JsonCommand
from fibonacci.sequence import sum_of_squares


class Command(JsonCommand):
    help = 'Check f(0)^2 + ... + f(n)^2 = f(n) * f(n+1).'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True)

    def build(self, n, **options):
        result = sum_of_squares(n)
        return {'n': n, 'lhs': str(result.lhs), 'rhs': str(result.rhs), 'equal': result.equal}
