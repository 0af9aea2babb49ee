import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.test import SimpleTestCase, override_settings

from .runner import run


class CliTestCase(SimpleTestCase):

    def invoke(self, *argv):
        stdout, stderr = StringIO(), StringIO()
        code = run(list(argv), stdout=stdout, stderr=stderr)
        return code, stdout.getvalue(), stderr.getvalue()

    def assertJsonLine(self, text):
        lines = text.splitlines()
        self.assertEqual(len(lines), 1, text)
        return json.loads(lines[0])

    def assertSucceeds(self, *argv):
        code, out, err = self.invoke(*argv)
        self.assertEqual(code, 0, err)
        self.assertEqual(err, '')
        return out

    def assertFails(self, code, *argv):
        actual, out, err = self.invoke(*argv)
        self.assertEqual(actual, code, err)
        self.assertEqual(out, '')
        return self.assertJsonLine(err)


class NumberCommandTests(CliTestCase):

    def test_identity(self):
        out = self.assertSucceeds('identity', '--n', '5')
        self.assertEqual(out, '{"n":5,"lhs":"104","rhs":"104","equal":true}\n')

    def test_convergents(self):
        payload = self.assertJsonLine(self.assertSucceeds('convergents', '--count', '7'))
        self.assertEqual(payload['convergents'], ['1', '2', '3/2', '5/3', '8/5', '13/8', '21/13'])

    def test_convergents_with_decimals(self):
        payload = self.assertJsonLine(self.assertSucceeds('convergents', '--count', '3', '--decimal', '4'))
        self.assertEqual(payload['decimals'], ['1.0', '2.0', '1.5'])

    def test_sandwich(self):
        payload = self.assertJsonLine(self.assertSucceeds('sandwich', '--n', '3'))
        self.assertTrue(payload['holds'])
        self.assertEqual(
            [(row['value'], row['side']) for row in payload['entries']],
            [('1', 'lower'), ('2', 'upper'), ('3/2', 'lower'), ('5/3', 'upper')],
        )

    def test_matrix(self):
        payload = self.assertJsonLine(self.assertSucceeds('matrix', '--n', '3', '--check'))
        self.assertEqual(payload, {
            'n': 3,
            'matrix': '[[-3, 2], [2, -1]]',
            'iterated': '[[-3, 2], [2, -1]]',
            'agree': True,
            'det': -1,
        })

    def test_matrix_needs_positive_power(self):
        error = self.assertFails(1, 'matrix', '--n', '0')
        self.assertEqual(error['error'], 'IndexOutOfRange')


class ClassifyCommandTests(CliTestCase):

    def test_golden(self):
        self.assertEqual(self.assertSucceeds('classify', '--golden'), '{"verdict":"golden"}\n')

    def test_ratio(self):
        out = self.assertSucceeds('classify', '--ratio', '13/8')
        self.assertEqual(out, '{"verdict":"fails","step":5,"mode":"equal"}\n')

    def test_quad(self):
        self.assertEqual(self.assertJsonLine(self.assertSucceeds('classify', '--quad', '1/2,1/2')),
                         {'verdict': 'golden'})
        payload = self.assertJsonLine(self.assertSucceeds('classify', '--quad', '0,1'))
        self.assertEqual(payload['verdict'], 'fails')

    def test_rect(self):
        payload = self.assertJsonLine(self.assertSucceeds('classify', '--rect', '2', '5'))
        self.assertEqual(payload, {'verdict': 'fails', 'step': 1, 'mode': 'reversed'})
        payload = self.assertJsonLine(self.assertSucceeds('classify', '--rect', '2', '1+1*sqrt5'))
        self.assertEqual(payload, {'verdict': 'golden'})

    def test_orientation(self):
        error = self.assertFails(1, 'classify', '--rect', '13', '8')
        self.assertEqual(error['error'], 'NotAProperRectangle')
        out = self.assertSucceeds('classify', '--rect', '13', '8', '--normalize')
        self.assertEqual(self.assertJsonLine(out)['step'], 5)

    def test_decimal(self):
        payload = self.assertJsonLine(self.assertSucceeds('classify', '--golden', '--decimal', '6'))
        self.assertEqual(payload['ratio'], '1.61803')

    def test_budget_exhausted(self):
        error = self.assertFails(2, 'classify', '--ratio', '13/8', '--max-steps', '2')
        self.assertEqual(error['error'], 'StepBudgetExhausted')
        self.assertEqual(error['max_steps'], 2)

    @override_settings(PAVING_CLASSIFY_BUDGET=3)
    def test_budget_from_settings(self):
        self.assertFails(2, 'classify', '--ratio', '13/8')

    def test_exhausted_budget_reports_only_json(self):
        with self.assertNoLogs('cutoff', level='WARNING'), self.assertNoLogs('cli', level='WARNING'):
            error = self.assertFails(2, 'classify', '--ratio', '13/8', '--max-steps', '2')
        self.assertEqual(error['error'], 'StepBudgetExhausted')

    def test_decimal_needs_positive_digits(self):
        for digits in ('0', '-1'):
            with self.subTest(digits=digits):
                error = self.assertFails(1, 'classify', '--golden', '--decimal', digits)
                self.assertEqual(error['error'], 'InvalidInput')
        self.assertFails(1, 'convergents', '--count', '3', '--decimal', '0')
        self.assertFails(1, 'sandwich', '--n', '3', '--decimal', '0')

    def test_bad_arguments(self):
        self.assertEqual(self.assertFails(1, 'classify')['error'], 'InvalidArguments')
        self.assertEqual(self.assertFails(1, 'classify', '--ratio', '1.6')['error'], 'InvalidInput')
        self.assertFails(1, 'classify', '--golden', '--ratio', '3/2')
        self.assertFails(1, 'identity', '--n', 'five')
        self.assertEqual(self.assertFails(1, 'bogus')['error'], 'UnknownCommand')
        self.assertFails(1)


class TileAndRenderTests(CliTestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.dir = Path(self.tmp.name)

    def test_figure_reproduction(self):
        tiling_path, svg_path = self.dir / 't.json', self.dir / 't.svg'
        out = self.assertSucceeds('tile', 'fib', '--n', '12', '--out', str(tiling_path))
        self.assertEqual(self.assertJsonLine(out), {'out': str(tiling_path), 'squares': 13, 'certified': True})
        tiling = json.loads(tiling_path.read_text())
        self.assertEqual([square['side'] for square in tiling['squares']],
                         ['233', '144', '89', '55', '34', '21', '13', '8', '5', '3', '2', '1', '1'])

        out = self.assertSucceeds('render', '--in', str(tiling_path), '--out', str(svg_path), '--scale', '2')
        self.assertEqual(self.assertJsonLine(out)['elements'], 14)
        svg = svg_path.read_text()
        self.assertIn('viewBox="0 0 754 466"', svg)
        self.assertEqual(svg.count('<rect '), 14)

    def test_repeated_runs_are_byte_identical(self):
        outputs = []
        for attempt in range(2):
            tiling_path = self.dir / f't{attempt}.json'
            svg_path = self.dir / f't{attempt}.svg'
            self.assertSucceeds('tile', 'rect', '--width', '7/3', '--length', '11/2', '--out', str(tiling_path))
            self.assertSucceeds('render', '--in', str(tiling_path), '--out', str(svg_path))
            outputs.append((tiling_path.read_bytes(), svg_path.read_bytes()))
        self.assertEqual(outputs[0], outputs[1])

    def test_tile_to_stdout(self):
        out = self.assertSucceeds('tile', 'rect', '--width', '1', '--length', '1')
        self.assertEqual(out, '{"width":"1","length":"1","squares":[{"index":0,"x":"0","y":"0","side":"1"}]}\n')

    def test_tile_rect_orientation(self):
        self.assertEqual(self.assertFails(1, 'tile', 'rect', '--width', '3', '--length', '2')['error'],
                         'InvalidDimensions')
        payload = self.assertJsonLine(self.assertSucceeds('tile', 'rect', '--width', '3', '--length', '2',
                                                          '--normalize'))
        self.assertEqual((payload['width'], payload['length']), ('2', '3'))

    def test_golden_prefix(self):
        tiling_path, svg_path = self.dir / 'g.json', self.dir / 'g.svg'
        self.assertSucceeds('tile', 'prefix', '--golden', '--k', '5', '--out', str(tiling_path))
        out = self.assertSucceeds('render', '--in', str(tiling_path), '--out', str(svg_path), '--scale', '100')
        self.assertTrue(self.assertJsonLine(out)['approximate'])
        self.assertIn('approximate', svg_path.read_text())

    def test_prefix_past_failure(self):
        error = self.assertFails(1, 'tile', 'prefix', '--rect', '8', '13', '--k', '6')
        self.assertEqual(error, {
            'error': 'PatternFailsBeforeK',
            'message': 'cut-off pattern fails at step 5, before square 6',
            'step': 5,
        })

    def test_render_rejects_tampered_tiling(self):
        tiling_path = self.dir / 'bad.json'
        self.assertSucceeds('tile', 'fib', '--n', '4', '--out', str(tiling_path))
        payload = json.loads(tiling_path.read_text())
        payload['squares'][-1]['x'] = '0'
        tiling_path.write_text(json.dumps(payload))
        error = self.assertFails(2, 'render', '--in', str(tiling_path), '--out', str(self.dir / 'bad.svg'))
        self.assertEqual(error['error'], 'InvariantViolation')
        self.assertFalse((self.dir / 'bad.svg').exists())

    def test_render_errors(self):
        missing = str(self.dir / 'missing.json')
        self.assertEqual(self.assertFails(1, 'render', '--in', missing, '--out', 'x.svg')['error'], 'InvalidInput')
        truncated = self.dir / 'cut.json'
        truncated.write_text('{"width":"1","len')
        self.assertEqual(self.assertFails(1, 'render', '--in', str(truncated), '--out', 'x.svg')['error'],
                         'ParseError')
        self.assertFails(1, 'render', '--in', missing, '--out', 'x.svg', '--palette', 'neon')

    def test_rejected_square_reports_only_json(self):
        tiling_path = self.dir / 'negative.json'
        self.assertSucceeds('tile', 'fib', '--n', '3', '--out', str(tiling_path))
        payload = json.loads(tiling_path.read_text())
        payload['squares'][0]['x'] = '-1'
        tiling_path.write_text(json.dumps(payload))
        with self.assertNoLogs('render', level='WARNING'), self.assertNoLogs('cli', level='WARNING'):
            error = self.assertFails(2, 'render', '--in', str(tiling_path), '--out', str(self.dir / 'n.svg'))
        self.assertEqual(error['failed'], ['containment'])

    def test_render_rejects_non_utf8_input(self):
        tiling_path = self.dir / 'latin.json'
        tiling_path.write_bytes(b'\xff\xfe{"width":"1"}')
        error = self.assertFails(1, 'render', '--in', str(tiling_path), '--out', str(self.dir / 'l.svg'))
        self.assertEqual(error['error'], 'ParseError')
        self.assertFalse((self.dir / 'l.svg').exists())


class CallCommandTests(SimpleTestCase):

    def test_call_command_writes_json(self):
        stdout = StringIO()
        call_command('identity', '--n', '12', stdout=stdout)
        self.assertEqual(json.loads(stdout.getvalue())['lhs'], '87841')
