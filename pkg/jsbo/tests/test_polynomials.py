from fractions import Fraction

from django.test import SimpleTestCase

from jsbo.exceptions import InvalidArgument, ShapeMismatch
from jsbo.polynomials import (
    MultiPoly, PolyMatrix, Var, mono_diff, mono_str, poly_compose_linear, poly_diff, substitute,
)
from jsbo.scalars import LAM

X = MultiPoly.variable('x', 1, 1)
Y = MultiPoly.variable('x', 1, 2)
W = MultiPoly.variable('w', 1, 1)


class MultiPolyArithmeticTests(SimpleTestCase):

    def test_cancellation_leaves_zero(self):
        self.assertFalse((X + Y) - (Y + X))
        self.assertEqual(len(X * Y + Y * X), 1)

    def test_power_and_degree(self):
        f = (X + W) ** 3
        self.assertEqual(f.degree(), 3)
        self.assertEqual(f.degree({'w'}), 3)
        self.assertEqual(f.homogeneous(2, {'x'}), (X * X * W).scale(3))

    def test_truncated_product(self):
        f = (X + W).mul(X + W, truncate=(frozenset({'w'}), 1))
        self.assertEqual(f, X * X + (X * W).scale(2))

    def test_symbolic_coefficients_mix_with_rationals(self):
        f = X.scale(LAM) + X
        self.assertEqual(f.coefficient(((Var('x', 1, 1), 1),)), LAM + 1)
        self.assertEqual(f.at_params({'lam': Fraction(1, 2)}), X.scale(Fraction(3, 2)))

    def test_rename_and_split(self):
        f = X * W + Y
        self.assertEqual(f.rename({'w': 'x'}).groups(), ['x'])
        parts = f.split({'w'})
        self.assertEqual(parts[((Var('w', 1, 1), 1),)], X)
        self.assertEqual(parts[()], Y)

    def test_evaluate_partially(self):
        f = X * W + Y
        self.assertEqual(f.evaluate({Var('w', 1, 1): Fraction(2)}), X.scale(2) + Y)

    def test_json_round_trip(self):
        f = (X + Y.scale(Fraction(-1, 3))) * W
        self.assertEqual(MultiPoly.from_json(f.to_json()), f)

    def test_symbolic_json_round_trip(self):
        f = X.scale(LAM * (LAM + 1) / 2) + Y.scale(1 / (2 * LAM + 1)) + W
        data = f.to_json()
        self.assertTrue(any('lam' in term['coeff'] for term in data['terms']))
        self.assertEqual(MultiPoly.from_json(data), f)

    def test_json_rejects_unknown_symbols(self):
        data = {'vars': ['x[1,1]'], 'terms': [{'coeff': 'nu + 1', 'exps': [1]}]}
        with self.assertRaises(InvalidArgument):
            MultiPoly.from_json(data)


class DerivativeTests(SimpleTestCase):

    def test_poly_diff(self):
        f = X ** 3 + X * Y
        v = Var('x', 1, 1)
        self.assertEqual(poly_diff(f, v), (X * X).scale(3) + Y)
        self.assertEqual(poly_diff(f, v, 3), MultiPoly.constant(6))
        self.assertEqual(poly_diff(f, v, 0), f)
        with self.assertRaises(InvalidArgument):
            poly_diff(f, v, -1)

    def test_mono_diff(self):
        f = X * X * Y
        mono = ((Var('x', 1, 1), 1), (Var('x', 1, 2), 1))
        self.assertEqual(mono_diff(f, mono), X.scale(2))
        self.assertEqual(mono_str(mono), 'x[1,1]*x[1,2]')


class SubstitutionTests(SimpleTestCase):

    def test_substitute(self):
        f = X * X + Y
        g = substitute(f, {Var('x', 1, 1): W + 1})
        self.assertEqual(g, W * W + W.scale(2) + 1 + Y)

    def test_linear_composition_rejects_quadratic_images(self):
        with self.assertRaises(InvalidArgument):
            poly_compose_linear(X, {Var('x', 1, 1): W * W})
        self.assertEqual(poly_compose_linear(X * Y, {Var('x', 1, 1): W}), W * Y)


class PolyMatrixTests(SimpleTestCase):

    def test_det_and_trace(self):
        m = PolyMatrix([[X, Y], [Y, W]])
        self.assertEqual(m.det(), X * W - Y * Y)
        self.assertEqual(m.trace(), X + W)

    def test_pfaffian_of_skew_4x4(self):
        a, b, c, d, e, f = (MultiPoly.variable('s', i, 1) for i in range(1, 7))
        zero = Fraction(0)
        m = PolyMatrix([
            [zero, a, b, c],
            [-a, zero, d, e],
            [-b, -d, zero, f],
            [-c, -e, -f, zero],
        ])
        self.assertEqual(m.pfaffian(), a * f - b * e + c * d)

    def test_shape_mismatch(self):
        with self.assertRaises(ShapeMismatch):
            PolyMatrix.identity(2).matmul(PolyMatrix.identity(3))
        with self.assertRaises(ShapeMismatch):
            PolyMatrix([[1, 2], [3]])
