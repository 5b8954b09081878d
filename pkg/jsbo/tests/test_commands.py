import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from jsbo.exceptions import InvalidArgument
from jsbo.management.base import FAILED, USAGE, UsageError, VerificationFailed


def run(*argv):
    out = StringIO()
    call_command(*argv, stdout=out)
    return out.getvalue()


def run_json(*argv):
    return json.loads(run(*argv))


class DomainsCommandTests(SimpleTestCase):

    def test_default_table(self):
        rows = run_json('domains', 'list')
        self.assertEqual([row['domain'] for row in rows], ['sym:2', 'mat:2x2', 'skew:4', 'quadric:3'])
        self.assertTrue(all(row['tube'] for row in rows))

    def test_text_table(self):
        lines = run('domains', 'list', '--domain', 'mat:2x3', '--format', 'text').splitlines()
        self.assertEqual(lines[0].split(), ['domain', 'r', 'n', 'd', 'b', 'p', 'epsilon', 'tube'])
        self.assertEqual(lines[1].split(), ['mat:2x3', '2', '6', '2', '1', '5', '1', 'False'])

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'domains.json'
            self.assertEqual(run('domains', 'list', '--out', str(path)), '')
            self.assertEqual(len(json.loads(path.read_text())), 4)

    def test_bad_descriptor(self):
        with self.assertRaises(InvalidArgument):
            run('domains', 'list', '--domain', 'cube:3')


class KernelCommandTests(SimpleTestCase):

    def test_expansion_agrees(self):
        data = run_json('kernel_expand', '--domain', 'sym:1', '--degree', '2', '--lambda', '2')
        self.assertTrue(data['agree'])
        self.assertEqual(data['lambda'], '2')
        self.assertEqual(data['series']['terms'][-1], {'coeff': '3/1', 'exps': [2, 2]})

    def test_symbolic_latex(self):
        self.assertIn(r'\lambda', run('kernel_expand', '--domain', 'sym:1', '--degree', '1', '--format', 'latex'))

    def test_kernel(self):
        data = run_json('kernel', '--domain', 'sym:1', '--m', '2')
        self.assertEqual(data['vars'], ['x[1,1]', 'x~[1,1]'])
        self.assertEqual(data['terms'], [{'coeff': '1/2', 'exps': [2, 2]}])

    def test_kernel_partition_too_long(self):
        with self.assertRaises(InvalidArgument):
            run('kernel', '--domain', 'sym:2', '--m', '1,1,1')

    def test_schur_closed_form(self):
        data = run_json('schur', '--d', '2', '--m', '2,1', '--r', '3')
        self.assertTrue(data['closed_form_agrees'])

    def test_schur_needs_d_two(self):
        with self.assertRaises(UsageError) as ctx:
            run('schur', '--d', '1', '--m', '2', '--r', '2')
        self.assertEqual(ctx.exception.returncode, USAGE)


class OperatorCommandTests(SimpleTestCase):

    def test_rational_holographic(self):
        data = run_json('operator', 'emit', '--pair', 'u-uu', '--sizes', '1,1,1,1', '--degree', '2',
                        '--lambda', '1/2')
        self.assertEqual(data['label'], 'F[u-uu]')
        self.assertEqual(data['kind'], 'holographic')
        self.assertEqual(data['order'], 2)
        self.assertIn({'c': '2/1', 'factors': []}, [term['coeff'] for term in data['terms']])

    def test_tensor_latex(self):
        text = run('operator', 'emit', '--pair', 'tensor', '--domain', 'sym:1', '--k', '1', '--format', 'latex')
        self.assertTrue(text.startswith('RC[sym:1,k=1] = '))
        self.assertEqual(run('operator', 'emit', '--pair', 'tensor-sl2', '--k', '1', '--format', 'latex'), text)

    def test_normal_needs_partition(self):
        with self.assertRaises(UsageError):
            run('operator', 'emit', '--pair', 'normal-u', '--sizes', '1,1,1')

    def test_pair_required(self):
        with self.assertRaises(UsageError):
            run('operator', 'emit')

    def test_unknown_choice(self):
        with self.assertRaises(CommandError):
            run('operator', 'emit', '--pair', 'e7-e6')


class VerifyCommandTests(SimpleTestCase):

    def test_tensor_formula(self):
        data = run_json('verify', 'tensor-formula', '--k', '2')
        self.assertTrue(data['ok'])
        self.assertEqual(data['reports'][0]['check'], 'tensor_formula')

    def test_calibrate(self):
        data = run_json('verify', 'calibrate', '--domain', 'sym:1')
        self.assertEqual(data['reports'][0]['convention']['c1'], '-1/1')

    def test_identity_intertwines(self):
        text = run('verify', 'intertwine', '--domain', 'sym:1', '--max-degree', '2', '--format', 'text')
        self.assertEqual(text.strip(), 'intertwine sym:1 ok')

    def test_intertwine_needs_target(self):
        with self.assertRaises(UsageError):
            run('verify', 'intertwine')

    def test_failures_raise_after_output(self):
        failing = [{'check': 'oracle', 'pair': 'sp-u', 'ok': False, 'failures': ['x']}]
        out = StringIO()
        with mock.patch('jsbo.management.commands.verify.run_cases', return_value=failing):
            with self.assertRaises(VerificationFailed) as ctx:
                call_command('verify', 'oracle', '--pair', 'sp-u', '--sizes', '1,1', stdout=out)
        self.assertEqual(ctx.exception.returncode, FAILED)
        self.assertFalse(json.loads(out.getvalue())['ok'])


class ResidueCommandTests(SimpleTestCase):

    def test_checked_residue(self):
        data = run_json('residue', '--pair', 'u-uu', '--sizes', '1,1,1,1', '--mu', '0', '--order', '1',
                        '--degree', '2', '--check', '--max-degree', '2')
        self.assertEqual(data['profile']['lambda0'], '0/1')
        self.assertEqual(data['order'], 1)
        self.assertEqual(data['structural_order'], 1)
        self.assertEqual(len(data['operator']['terms']), 1)
        self.assertTrue(data['report']['ok'])

    def test_report_only_when_checked(self):
        data = run_json('residue', '--pair', 'u-uu', '--sizes', '1,1,1,1', '--mu', '0', '--order', '0')
        self.assertNotIn('report', data)

    def test_order_out_of_range(self):
        with self.assertRaises(InvalidArgument):
            run('residue', '--pair', 'u-uu', '--sizes', '1,1,1,1', '--mu', '0', '--order', '3')
