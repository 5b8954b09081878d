from fractions import Fraction

from django.test import SimpleTestCase

from jsbo.domains import DomainSpec
from jsbo.kernels import expand_h_power
from jsbo.operators import apply_operator, rc_tensor
from jsbo.pairs import build_pair
from jsbo.polynomials import MultiPoly
from jsbo.residues import residue_profile
from jsbo.scalars import ParamScalar
from jsbo.serializers import (
    DomainSpecSerializer, DomainTableSerializer, MultiPolySerializer, ParamScalarSerializer,
    ParamSeriesSerializer, PolyOperatorSerializer, ReportSerializer, ResidueProfileSerializer,
    TraceCoordinatePolySerializer, render_json,
)
from jsbo.symmetric import TraceCoordinatePoly


class RenderTests(SimpleTestCase):

    def test_compact_json(self):
        self.assertEqual(render_json({'b': 1, 'a': [True, None]}), '{"b":1,"a":[true,null]}')


class DomainSerializerTests(SimpleTestCase):

    def test_create(self):
        serializer = DomainSpecSerializer(data={'kind': 'mat', 'params': [2, 3]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), DomainSpec.mat(2, 3))

    def test_invalid_sizes(self):
        serializer = DomainSpecSerializer(data={'kind': 'skew', 'params': [1]})
        self.assertFalse(serializer.is_valid())
        self.assertIn('non_field_errors', serializer.errors)
        self.assertFalse(DomainSpecSerializer(data={'kind': 'cube', 'params': [3]}).is_valid())
        self.assertFalse(DomainSpecSerializer(data={'kind': 'quadric', 'params': [2]}).is_valid())

    def test_table_row(self):
        row = DomainTableSerializer(DomainSpec.mat(2, 3)).data
        self.assertEqual(row['domain'], 'mat:2x3')
        self.assertEqual((row['r'], row['n'], row['b'], row['p']), (2, 6, 1, 5))
        self.assertFalse(row['tube'])


class ScalarAndPolynomialTests(SimpleTestCase):

    def test_param_scalar_round_trip(self):
        p = ParamScalar(Fraction(-2, 3), (('lam', Fraction(1, 2), -1),))
        data = ParamScalarSerializer(p).data
        self.assertEqual(data['c'], '-2/3')
        self.assertEqual(data['factors'][0], {'shift': '1/2', 'mult': -1})
        self.assertEqual(data, p.to_json())
        serializer = ParamScalarSerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), p)

    def test_second_parameter_is_tagged(self):
        p = ParamScalar(Fraction(1), (('lam', Fraction(0), 1), ('mu', Fraction(2), -1)))
        data = ParamScalarSerializer(p).data
        self.assertEqual([factor.get('param') for factor in data['factors']], [None, 'mu'])
        self.assertEqual(ParamScalar.from_json(data), p)
        serializer = ParamScalarSerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), p)

    def test_bad_rational(self):
        serializer = ParamScalarSerializer(data={'c': 'one half'})
        self.assertFalse(serializer.is_valid())
        self.assertIn('c', serializer.errors)

    def test_multipoly(self):
        f = MultiPoly.variable('x', 1, 2) * MultiPoly.variable('x~', 1, 2) + Fraction(1, 3)
        data = MultiPolySerializer(f).data
        self.assertEqual(data['vars'], ['x[1,2]', 'x~[1,2]'])
        serializer = MultiPolySerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), f)

    def test_symbolic_series_round_trip(self):
        total = expand_h_power(DomainSpec.sym(1), 2)[0].total()
        serializer = MultiPolySerializer(data=MultiPolySerializer(total).data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), total)

    def test_multipoly_exponent_width(self):
        serializer = MultiPolySerializer(data={'vars': ['x[1,1]'], 'terms': [{'coeff': '1', 'exps': [1, 2]}]})
        self.assertFalse(serializer.is_valid())

    def test_power_sums(self):
        data = TraceCoordinatePolySerializer(TraceCoordinatePoly.power_sum(2)).data
        self.assertEqual(data['powersum_terms'][0]['powers'], [2])


class OperatorSerializerTests(SimpleTestCase):

    def test_representation(self):
        data = PolyOperatorSerializer(rc_tensor(DomainSpec.sym(1), 1)).data
        self.assertEqual(data['kind'], 'tensor')
        self.assertEqual(data['order'], 1)
        self.assertEqual(sorted(term['diff'] for term in data['terms']), ['xL[1,1]', 'xR[1,1]'])

    def test_create_needs_context(self):
        F = rc_tensor(DomainSpec.sym(1), 1)
        dom = DomainSpec.sym(1)
        serializer = PolyOperatorSerializer(
            data=PolyOperatorSerializer(F).data,
            context={'diff_domains': {'xL': dom, 'xR': dom}, 'restrict': F.restrict},
        )
        self.assertTrue(serializer.is_valid(), serializer.errors)
        G = serializer.save()
        f = MultiPoly.variable('xL') * MultiPoly.variable('xR')
        self.assertEqual(apply_operator(G, f), apply_operator(F, f))

    def test_series(self):
        _, structured = expand_h_power(DomainSpec.sym(1), 2)
        data = ParamSeriesSerializer(structured).data
        self.assertEqual(data['groups'], ['x~'])
        self.assertEqual([term['label'] for term in data['terms']], ['()', '(1)', '(2)'])


class ReportSerializerTests(SimpleTestCase):

    def test_key_order(self):
        report = {'ok': False, 'failures': [{'m': 1}], 'check': 'oracle', 'pair': 'sp-u'}
        data = ReportSerializer(report).data
        self.assertEqual(list(data), ['check', 'pair', 'ok', 'failures'])
        self.assertEqual(data['failures'], [{'m': 1}])

    def test_profile(self):
        data = ResidueProfileSerializer(residue_profile(build_pair('sp-u', (1, 1)), '-1/2')).data
        self.assertEqual(data['lambda0'], '-1/2')
        self.assertEqual(data['mu'], '-1/2')
        self.assertTrue(data['in_range'])
