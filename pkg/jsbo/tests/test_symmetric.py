from fractions import Fraction

from django.test import SimpleTestCase

from jsbo.domains import DomainSpec
from jsbo.exceptions import InvalidArgument, Unsupported
from jsbo.partitions import Partition, partitions
from jsbo.polynomials import MultiPoly, PolyMatrix
from jsbo.symmetric import (
    TraceCoordinatePoly, complete_homogeneous, jack_phi_tilde, phi_tilde_on_matrix, schur_closed_form,
    schur_powersum,
)

P1 = TraceCoordinatePoly.power_sum(1)
P2 = TraceCoordinatePoly.power_sum(2)


class TraceCoordinatePolyTests(SimpleTestCase):

    def test_arithmetic(self):
        self.assertEqual(P1 * P1 - P1 * P1, TraceCoordinatePoly())
        self.assertEqual((P1 + 1) * 2, P1 * 2 + 2)
        self.assertEqual((P1 * P2).degree, 3)

    def test_evaluate_eigenvalues(self):
        # p1^2 + p2 at (1, 2) = 9 + 5
        self.assertEqual((P1 * P1 + P2).evaluate_eigenvalues([1, 2]), Fraction(14))

    def test_complete_homogeneous(self):
        self.assertEqual(complete_homogeneous(2), (P1 * P1 + P2) * Fraction(1, 2))
        self.assertFalse(complete_homogeneous(-1))


class JackTests(SimpleTestCase):

    def test_exponential_normalization(self):
        for d in (1, 2, 4):
            for degree in (1, 2, 3):
                total = TraceCoordinatePoly()
                for m in partitions(degree):
                    total = total + jack_phi_tilde(d, m)
                expected = TraceCoordinatePoly.constant(1)
                for _ in range(degree):
                    expected = expected * P1
                with self.subTest(d=d, degree=degree):
                    self.assertEqual(total, expected * Fraction(1, [1, 1, 2, 6][degree]))

    def test_rank_one_values(self):
        self.assertEqual(jack_phi_tilde(1, (3,)).evaluate_eigenvalues([Fraction(1, 2)]), Fraction(1, 48))
        self.assertEqual(jack_phi_tilde(1, (2, 1)).evaluate_eigenvalues([Fraction(1, 2)]), 0)

    def test_schur_closed_form_matches_jack(self):
        for degree in range(1, 5):
            for m in partitions(degree, 3):
                with self.subTest(m=m):
                    self.assertEqual(jack_phi_tilde(2, m), schur_closed_form(m, 3))

    def test_schur_powersum(self):
        self.assertEqual(schur_powersum((1, 1)), (P1 * P1 - P2) * Fraction(1, 2))
        self.assertEqual(schur_powersum(()), TraceCoordinatePoly.constant(1))

    def test_partition_longer_than_rank(self):
        with self.assertRaises(InvalidArgument):
            jack_phi_tilde(DomainSpec.sym(2), Partition((1, 1, 1)))

    def test_nonpositive_multiplicity(self):
        with self.assertRaises(Unsupported):
            jack_phi_tilde(0, (1,))

    def test_on_matrix(self):
        a = MultiPoly.variable('t', 1, 1)
        matrix = PolyMatrix([[a, Fraction(0)], [Fraction(0), a]])
        # Phi~_(1) = p1, so at eigenvalues (t, t) it is 2t
        self.assertEqual(phi_tilde_on_matrix(1, (1,), matrix), a.scale(2))
