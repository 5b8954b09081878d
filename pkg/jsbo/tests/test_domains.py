from fractions import Fraction

from django.test import SimpleTestCase

from jsbo.domains import (
    DESK_DOMAINS, DomainSpec, adjugate, bergman_apply, det_poly, diagonal_norm, generic_norm_h, inner_product,
    jordan_determinant, quasi_inverse, spectral_norm_numeric, triple_D,
)
from jsbo.exceptions import InvalidArgument, ShapeMismatch, Singular, Unsupported
from jsbo.polynomials import MultiPoly, PolyMatrix, Var


class DomainSpecTests(SimpleTestCase):

    def test_structure_constants(self):
        expected = {
            'sym:2': (2, 3, 1, 3),
            'mat:2x3': (2, 6, 2, 5),
            'skew:4': (2, 6, 4, 6),
            'quadric:3': (2, 3, 1, 3),
        }
        for text, (r, n, d, p) in expected.items():
            dom = DomainSpec.parse(text)
            with self.subTest(domain=text):
                self.assertEqual((dom.r, dom.n, dom.d, dom.p), (r, n, d, p))

    def test_parse_round_trip(self):
        for dom in DESK_DOMAINS:
            self.assertEqual(DomainSpec.parse(str(dom)), dom)

    def test_bad_descriptors(self):
        for text in ('sym', 'cube:3', 'mat:2', 'skew:1', 'sym:0', 'quadric:1', 'quadric:2'):
            with self.subTest(text=text), self.assertRaises(InvalidArgument):
                DomainSpec.parse(text)

    def test_small_quadrics_are_blocks_only(self):
        block = DomainSpec.quadric(2)
        self.assertEqual((block.r, block.d), (2, 0))
        with self.assertRaises(InvalidArgument):
            block.standalone()
        self.assertEqual(DomainSpec.quadric(3).standalone(), DomainSpec.quadric(3))

    def test_tube_type(self):
        self.assertTrue(DomainSpec.mat(2, 2).is_tube)
        self.assertFalse(DomainSpec.mat(2, 3).is_tube)
        self.assertFalse(DomainSpec.skew(5).is_tube)

    def test_fischer_weights(self):
        dom = DomainSpec.sym(2)
        self.assertEqual(dom.weight(Var('x', 1, 2)), 2)
        self.assertEqual(dom.weight(Var('x', 2, 2)), 1)


class StructureMapTests(SimpleTestCase):

    def test_rank_one_generic_norm(self):
        dom = DomainSpec.sym(1)
        h = generic_norm_h(dom, dom.point([Fraction(1, 2)]), dom.point([Fraction(1, 3)]))
        self.assertEqual(h.constant_term(), Fraction(5, 6))

    def test_generic_norm_on_diagonal_points(self):
        dom = DomainSpec.sym(2)
        x = dom.fill({(1, 1): Fraction(1, 2), (2, 2): Fraction(1, 3)})
        h = generic_norm_h(dom, x, dom.unit())
        self.assertEqual(h.constant_term(), diagonal_norm([Fraction(1, 2), Fraction(1, 3)], [1, 1]))

    def test_quadric_generic_norm(self):
        dom = DomainSpec.quadric(3)
        x = dom.point([Fraction(1, 2), 0, 0])
        self.assertEqual(generic_norm_h(dom, x, x).constant_term(), Fraction(9, 16))

    def test_bergman_determinant_is_power_of_h(self):
        dom = DomainSpec.sym(1)
        x, y = dom.point([Fraction(1, 2)]), dom.point([Fraction(1, 3)])
        self.assertEqual(jordan_determinant(dom, x, y), Fraction(25, 36))

    def test_symbolic_bergman_determinant(self):
        dom = DomainSpec.mat(1, 2)
        x, ybar = dom.matrix('x'), dom.matrix('x~')
        self.assertEqual(jordan_determinant(dom, x, ybar), generic_norm_h(dom, x, ybar) ** dom.p)

    def test_rank_one_quasi_inverse(self):
        dom = DomainSpec.sym(1)
        z = quasi_inverse(dom, dom.point([Fraction(1, 2)]), dom.point([Fraction(1, 3)]))
        self.assertEqual(z[0, 0], Fraction(3, 5))

    def test_quasi_inverse_singular(self):
        dom = DomainSpec.sym(1)
        with self.assertRaises(Singular):
            quasi_inverse(dom, dom.point([1]), dom.point([1]))

    def test_symbolic_quasi_inverse_is_geometric_series(self):
        dom = DomainSpec.sym(1)
        x, y = MultiPoly.variable('x'), MultiPoly.variable('x~')
        z = quasi_inverse(dom, dom.matrix('x'), dom.matrix('x~'), degree=2)
        self.assertEqual(z[0, 0], x + x * x * y + x ** 3 * y * y)

    def test_symbolic_needs_degree(self):
        dom = DomainSpec.sym(1)
        with self.assertRaises(InvalidArgument):
            quasi_inverse(dom, dom.matrix('x'), dom.matrix('x~'))

    def test_triple_product_and_bergman(self):
        dom = DomainSpec.sym(1)
        x, y, z = dom.point([2]), dom.point([3]), dom.point([5])
        # D(x, y)z = 2xyz and B(x, y)z = (1 - xy)^2 z in rank one
        self.assertEqual(triple_D(dom, x, y, z)[0, 0], Fraction(60))
        self.assertEqual(bergman_apply(dom, x, y, z)[0, 0], Fraction(125))

    def test_inner_product_normalized_on_unit(self):
        dom = DomainSpec.sym(2)
        self.assertEqual(inner_product(dom, dom.unit(), dom.unit()), Fraction(2))

    def test_shape_mismatch(self):
        with self.assertRaises(ShapeMismatch):
            generic_norm_h(DomainSpec.sym(2), PolyMatrix.identity(3), PolyMatrix.identity(3))


class DeterminantTests(SimpleTestCase):

    def test_det_poly_sym(self):
        dom = DomainSpec.sym(2)
        a, b, c = (MultiPoly.variable(v) for v in dom.coords())
        self.assertEqual(det_poly(dom, dom.matrix()), a * c - b * b)
        self.assertEqual(det_poly(dom, dom.unit()), MultiPoly.one())

    def test_det_poly_pfaffian(self):
        dom = DomainSpec.skew(4)
        self.assertEqual(det_poly(dom, dom.unit()), MultiPoly.one())

    def test_det_poly_unsupported(self):
        dom = DomainSpec.mat(1, 2)
        with self.assertRaises(Unsupported):
            det_poly(dom, dom.matrix())

    def test_adjugate(self):
        dom = DomainSpec.sym(2)
        x = dom.matrix()
        product = x.matmul(adjugate(dom, x))
        delta = det_poly(dom, x)
        self.assertEqual(product, PolyMatrix([[delta, Fraction(0)], [Fraction(0), delta]]))

    def test_spectral_norm(self):
        dom = DomainSpec.sym(2)
        x = dom.fill({(1, 1): Fraction(1, 2), (2, 2): Fraction(-3, 4)})
        self.assertAlmostEqual(spectral_norm_numeric(dom, x), 0.75, places=12)
