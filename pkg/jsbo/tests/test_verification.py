from fractions import Fraction

from django.test import SimpleTestCase, override_settings

from jsbo.domains import DomainSpec
from jsbo.exceptions import Unsupported
from jsbo.pairs import splittings
from jsbo.verification import (
    PointSampler, expansion_suite, jordan_suite, run_cases, symmetric_suite, tensor_formula_check,
)


class PointSamplerTests(SimpleTestCase):

    def test_seeded_points_repeat(self):
        dom = DomainSpec.mat(2, 2)
        self.assertEqual(PointSampler(7).point(dom), PointSampler(7).point(dom))

    def test_small_rationals(self):
        for value in PointSampler(3).values(50):
            self.assertLessEqual(abs(value), Fraction(2, 3))


class SuiteTests(SimpleTestCase):

    def test_jordan_identities(self):
        report = jordan_suite('sym:2', seed=11, points=3)
        self.assertTrue(report['ok'], report['failures'])
        self.assertEqual(report['check'], 'jordan')
        self.assertEqual(report['counts']['det_bergman'], 1)
        self.assertIn('projprop', report['counts'])
        self.assertIn('generic_norm_square', report['counts'])

    def test_square_matrices_at_full_budget(self):
        report = jordan_suite('mat:2x2', seed=42, points=100)
        self.assertTrue(report['ok'], report['failures'])
        self.assertIn('bergman_decomp', report['counts'])
        for name, count in report['counts'].items():
            if name not in ('det_bergman', 'generic_norm_square'):
                with self.subTest(identity=name):
                    self.assertGreaterEqual(count, 100)

    def test_pair_identities_sampled_per_splitting(self):
        dom = DomainSpec.skew(4)
        report = jordan_suite(dom, seed=42, points=20)
        self.assertTrue(report['ok'], report['failures'])
        self.assertEqual(report['counts']['projprop'], 20 * len(splittings(dom)))
        self.assertEqual(report['counts']['generic_norm_square'], 1)

    def test_quadric_identities(self):
        report = jordan_suite(DomainSpec.quadric(3), seed=5, points=2)
        self.assertTrue(report['ok'], report['failures'])

    def test_expansions(self):
        report = expansion_suite('sym:2', degree=2)
        self.assertTrue(report['ok'], report['failures'])
        self.assertEqual(report['degree'], 2)

    def test_expansions_at_default_degree(self):
        report = expansion_suite('sym:2')
        self.assertTrue(report['ok'], report['failures'])
        self.assertEqual(report['degree'], 6)

    def test_skew_expansion(self):
        report = expansion_suite('skew:4', degree=4)
        self.assertTrue(report['ok'], report['failures'])

    def test_symmetric_identities(self):
        report = symmetric_suite(max_degree=3, max_rank=2)
        self.assertTrue(report['ok'], report['failures'])
        self.assertEqual(report['exponential_degree'], 6)

    def test_tensor_formula(self):
        for k in (1, 2, 3):
            with self.subTest(k=k):
                report = tensor_formula_check('sym:1', k)
                self.assertTrue(report['ok'], report['failures'])

    def test_tensor_formula_needs_rank_one(self):
        with self.assertRaises(Unsupported):
            tensor_formula_check('sym:2', 1)


class RunCasesTests(SimpleTestCase):

    @override_settings(JSBO_THREADS=2)
    def test_order_is_kept(self):
        cases = [(tensor_formula_check, {'dom': 'sym:1', 'k': k}) for k in (3, 1, 2)]
        reports = run_cases(cases)
        self.assertEqual([r['k'] for r in reports], [3, 1, 2])
        self.assertTrue(all(r['ok'] for r in reports))
