from fractions import Fraction

from django.test import SimpleTestCase

from jsbo.exceptions import InvalidArgument, LimitDiverges, LimitVanishes, Singular, Unsupported
from jsbo.partitions import Partition
from jsbo.scalars import LAM, ParamScalar, Weight, param_limit, parse_rational, pochhammer


class ParseRationalTests(SimpleTestCase):

    def test_parses_strings_and_ints(self):
        self.assertEqual(parse_rational('7/3'), Fraction(7, 3))
        self.assertEqual(parse_rational(' -1/2 '), Fraction(-1, 2))
        self.assertEqual(parse_rational(4), Fraction(4))

    def test_rejects_garbage(self):
        with self.assertRaises(InvalidArgument):
            parse_rational('seven')
        with self.assertRaises(InvalidArgument):
            parse_rational('1/0')


class PochhammerTests(SimpleTestCase):

    def test_rank_one_is_rising_factorial(self):
        p = pochhammer((0,), Partition((3,)), 1)
        self.assertEqual(p.value(), LAM * (LAM + 1) * (LAM + 2))

    def test_rows_shift_by_half_d(self):
        # (lam)_{(2,1),d=2} = lam (lam + 1) (lam - 1)
        p = pochhammer((0, 0), Partition((2, 1)), 2)
        self.assertEqual(p.value({'lam': 3}), Fraction(3 * 4 * 2))

    def test_weight_pochhammer_rescales(self):
        # (2 lam + 2)_2 = (2 lam + 2)(2 lam + 3) = 4 (lam + 1)(lam + 3/2)
        p = Weight.param('lam', 2, 2).pochhammer(Partition((2,)), 1)
        self.assertEqual(p.constant, 4)
        self.assertEqual(p.value({'lam': 0}), Fraction(6))

    def test_constant_weight(self):
        p = Weight.constant(Fraction(1, 2)).pochhammer(Partition((2,)), 1)
        self.assertEqual(p, ParamScalar(Fraction(3, 4)))


class ParamScalarTests(SimpleTestCase):

    def test_inverse_and_product(self):
        p = ParamScalar.linear(1) * ParamScalar.linear(1) * 3
        q = p.inverse()
        self.assertEqual((p * q), ParamScalar.one())
        self.assertEqual(q.order_at(-1), -2)

    def test_value_at_pole_is_singular(self):
        with self.assertRaises(Singular):
            ParamScalar.linear(2).inverse().value({'lam': -2})

    def test_json_round_trip(self):
        p = ParamScalar(Fraction(-2, 3), (('lam', Fraction(1, 2), -1), ('mu', 0, 2)))
        self.assertEqual(ParamScalar.from_json(p.to_json()), p)

    def test_zero_constant_drops_factors(self):
        self.assertTrue(ParamScalar(0, (('lam', 1, 1),)).is_zero)
        self.assertEqual(ParamScalar(0, (('lam', 1, 1),)).factors, ())


class ParamLimitTests(SimpleTestCase):

    def test_simple_pole(self):
        # lim_{lam -> -1} (lam + 1) * 1/(lam (lam + 1)) = -1
        p = (ParamScalar.linear(0) * ParamScalar.linear(1)).inverse()
        self.assertEqual(param_limit(p, -1, 1), Fraction(-1))

    def test_signals(self):
        p = ParamScalar.linear(1).inverse()
        with self.assertRaises(LimitDiverges):
            param_limit(p, -1, 0)
        with self.assertRaises(LimitVanishes):
            param_limit(p, -1, 2)
        with self.assertRaises(InvalidArgument):
            param_limit(p, -1, -1)

    def test_other_parameters_unsupported(self):
        with self.assertRaises(Unsupported):
            param_limit(ParamScalar.linear(0, 'mu'), 0, 0)

    def test_regular_point(self):
        self.assertEqual(param_limit(ParamScalar.linear(2), 1, 0), Fraction(3))
