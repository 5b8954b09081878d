from fractions import Fraction

from django.test import SimpleTestCase

from jsbo.domains import DomainSpec
from jsbo.exceptions import InvalidArgument, Unsupported
from jsbo.operators import apply_operator
from jsbo.pairs import build_pair
from jsbo.partitions import Partition
from jsbo.polynomials import MultiPoly
from jsbo.residues import (
    SubmoduleSpec, filtration_check, residue_operator, residue_profile, residue_property_check,
    structural_pole_order, submodule_project,
)


class SubmoduleTests(SimpleTestCase):

    def test_membership(self):
        dom = DomainSpec.sym(2)
        spec = SubmoduleSpec(dom, 2, Fraction(1, 2))
        self.assertEqual(spec.bound(), 0)
        self.assertTrue(spec.contains(Partition((3,))))
        self.assertFalse(spec.contains(Partition((1, 1))))
        self.assertFalse(SubmoduleSpec(dom, 0, Fraction(0)).contains(Partition()))
        self.assertTrue(SubmoduleSpec(dom, 3, Fraction(0)).contains(Partition((2, 2))))

    def test_projection(self):
        dom = DomainSpec.sym(2)
        x11, x12, x22 = (MultiPoly.variable('x', i, j) for i, j in ((1, 1), (1, 2), (2, 2)))
        delta = x11 * x22 - x12 * x12
        spec = SubmoduleSpec(dom, 2, Fraction(1, 2))
        self.assertFalse(submodule_project(spec, delta))
        self.assertEqual(submodule_project(spec, x12 + 1), x12 + 1)

    def test_filtration_is_stable(self):
        report = filtration_check('sym:1', 0, max_degree=3)
        self.assertTrue(report['ok'], report['failures'])
        report = filtration_check(DomainSpec.sym(2), '1/2', max_degree=2)
        self.assertTrue(report['ok'], report['failures'])
        self.assertEqual(report['weight'], '1/2')


class ProfileTests(SimpleTestCase):

    def test_u_uu_profile(self):
        profile = residue_profile(build_pair('u-uu', (1, 1, 1, 1)), 0)
        self.assertEqual((profile.base, profile.top, profile.lam0), (0, 1, 0))
        self.assertEqual(profile.expected_count, 1)
        self.assertEqual(profile.domain_index(0), 1)
        self.assertEqual(profile.domain_index(1), profile.everything)
        self.assertEqual(profile.to_json()['lambda0'], '0')

    def test_shifted_pole(self):
        profile = residue_profile(build_pair('u-uu', (1, 1, 1, 1), k=1, l=1), 1)
        self.assertEqual(profile.lam0, -1)
        self.assertEqual(profile.base, 1)

    def test_half_integral_sp_u(self):
        profile = residue_profile(build_pair('sp-u', (1, 1)), '-1/2')
        self.assertEqual((profile.base, profile.top, profile.lam0), (0, 1, Fraction(-1, 2)))

    def test_bad_mu(self):
        pair = build_pair('u-uu', (1, 1, 1, 1))
        with self.assertRaises(InvalidArgument):
            residue_profile(pair, '1/2')
        with self.assertRaises(InvalidArgument):
            residue_profile(pair, '1/3')
        with self.assertRaises(Unsupported):
            residue_profile(build_pair('su-sp'), 0)


class ResidueOperatorTests(SimpleTestCase):

    def test_structural_orders(self):
        self.assertEqual(structural_pole_order(build_pair('u-uu', (1, 1, 1, 1)), 0), 1)
        self.assertEqual(structural_pole_order(build_pair('sp-u', (1, 1)), '-1/2'), 1)
        self.assertEqual(structural_pole_order(build_pair('sp-u', (1, 1)), 0), 0)

    def test_first_order_residue_drops_identity(self):
        pair = build_pair('u-uu', (1, 1, 1, 1))
        F = residue_operator(pair, 0, 1, 2)
        f = MultiPoly.variable('x11') * MultiPoly.variable('x22')
        self.assertEqual(apply_operator(F, f), MultiPoly.variable('x12') * MultiPoly.variable('x21'))
        self.assertFalse(apply_operator(F, MultiPoly.one()))

    def test_order_out_of_range(self):
        with self.assertRaises(InvalidArgument):
            residue_operator(build_pair('u-uu', (1, 1, 1, 1)), 0, 2, 2)

    def test_u_uu_properties(self):
        pair = build_pair('u-uu', (1, 1, 1, 1))
        for mu in (0, -1):
            for order in (0, 1):
                with self.subTest(mu=mu, order=order):
                    report = residue_property_check(pair, mu, order, max_degree=2)
                    self.assertTrue(report['ok'], report['failures'])
                    self.assertEqual(report['structural_order'], 1)

    def test_sp_u_properties(self):
        pair = build_pair('sp-u', (1, 1))
        report = residue_property_check(pair, '-1/2', 1, max_degree=2)
        self.assertTrue(report['ok'], report['failures'])
        report = residue_property_check(pair, 0, 0, max_degree=2)
        self.assertTrue(report['ok'], report['failures'])
        self.assertEqual(report['structural_order'], 0)
