from cli.base import JsonCommand
from fibonacci.matrices import mat_power_closed, mat_power_iter
from golden_app.exceptions import InvariantViolation


class Command(JsonCommand):
    help = 'Print M^n from its closed form; --check compares it with repeated multiplication.'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--check', action='store_true')

    def build(self, n, check=False, **options):
        closed = mat_power_closed(n)
        payload = {'n': n, 'matrix': str(closed)}
        if check:
            iterated = mat_power_iter(n)
            payload.update({
                'iterated': str(iterated),
                'agree': closed == iterated,
                'det': closed.det(),
            })
            if closed != iterated or closed.det() != (-1) ** n:
                raise InvariantViolation(['closed_form'])
        return payload
