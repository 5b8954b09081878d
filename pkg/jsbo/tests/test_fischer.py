from fractions import Fraction

from django.test import SimpleTestCase

from jsbo.domains import DESK_DOMAINS, DomainSpec
from jsbo.fischer import (
    exponential_series, fischer_apply, fischer_inner, fischer_norm_monomial, hks_components, hks_project,
    kernel_sum, repkernel_K, weighted_inner,
)
from jsbo.partitions import Partition
from jsbo.polynomials import MultiPoly, Var

SYM2 = DomainSpec.sym(2)
X11 = MultiPoly.variable('x', 1, 1)
X12 = MultiPoly.variable('x', 1, 2)
X22 = MultiPoly.variable('x', 2, 2)


class FischerProductTests(SimpleTestCase):

    def test_monomial_norms(self):
        self.assertEqual(fischer_norm_monomial(SYM2, ((Var('x', 1, 2), 2),)), Fraction(1, 2))
        self.assertEqual(fischer_norm_monomial(SYM2, ((Var('x', 1, 1), 3),)), Fraction(6))

    def test_inner_product(self):
        self.assertEqual(fischer_inner(SYM2, X12, X12), Fraction(1, 2))
        self.assertEqual(fischer_inner(SYM2, X11, X22), 0)
        self.assertEqual(weighted_inner(SYM2, X12, X12), Fraction(1, 2))

    def test_dual_differentiation(self):
        self.assertEqual(fischer_apply(SYM2, MultiPoly.variable('x~', 1, 1), X11 * X11), X11.scale(2))
        self.assertEqual(fischer_apply(SYM2, MultiPoly.variable('x~', 1, 2), X12), MultiPoly.constant(Fraction(1, 2)))

    def test_weighted_inner_divides_by_pochhammer(self):
        # x11 x22 - x12^2 lies in P_(1,1); (lam)_{(1,1),1} = lam (lam - 1/2)
        delta = X11 * X22 - X12 * X12
        value = weighted_inner(SYM2, delta, delta, Fraction(3))
        self.assertEqual(value, fischer_inner(SYM2, delta, delta) / Fraction(15, 2))


class ReproducingKernelTests(SimpleTestCase):

    def test_kernels_sum_to_exponential(self):
        for dom in DESK_DOMAINS:
            with self.subTest(domain=str(dom)):
                self.assertEqual(kernel_sum(dom, 2), exponential_series(dom, 2))

    def test_too_long_partition(self):
        self.assertFalse(repkernel_K(DomainSpec.sym(1), (1, 1)))
        self.assertEqual(repkernel_K(SYM2, ()), MultiPoly.one())

    def test_determinant_is_one_component(self):
        delta = X11 * X22 - X12 * X12
        self.assertEqual(hks_project(SYM2, delta, Partition((1, 1))), delta)
        self.assertFalse(hks_project(SYM2, delta, Partition((2,))))

    def test_components_add_up(self):
        f = X11 * X22 + X12 + 3
        components = hks_components(SYM2, f)
        self.assertEqual(set(components), {Partition(), Partition((1,)), Partition((2,)), Partition((1, 1))})
        total = MultiPoly.zero()
        for part in components.values():
            total = total + part
        self.assertEqual(total, f)
