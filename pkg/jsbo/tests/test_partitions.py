from django.test import SimpleTestCase

from jsbo.exceptions import InvalidArgument
from jsbo.partitions import Partition, partitions, z_factor


class PartitionTests(SimpleTestCase):

    def test_trailing_zeros_dropped(self):
        self.assertEqual(Partition((2, 1, 0, 0)), Partition((2, 1)))
        self.assertEqual(Partition.parse('0'), Partition())
        self.assertEqual(Partition.parse('2,1'), Partition((2, 1)))

    def test_rejects_increasing_parts(self):
        with self.assertRaises(InvalidArgument):
            Partition((1, 2))
        with self.assertRaises(InvalidArgument):
            Partition.parse('a,b')

    def test_complement_in_box(self):
        self.assertEqual(Partition((2,)).complement(3, 2), Partition((3, 1)))
        with self.assertRaises(InvalidArgument):
            Partition((4,)).complement(3, 2)

    def test_conjugate_and_doubled(self):
        self.assertEqual(Partition((3, 1)).conjugate(), Partition((2, 1, 1)))
        self.assertEqual(Partition((2, 1)).doubled(), Partition((2, 2, 1, 1)))

    def test_dominance(self):
        self.assertTrue(Partition((3,)).dominates(Partition((2, 1))))
        self.assertFalse(Partition((2, 2)).dominates(Partition((3, 1))))


class EnumerationTests(SimpleTestCase):

    def test_counts(self):
        self.assertEqual(len(list(partitions(5))), 7)
        self.assertEqual(len(list(partitions(5, 2))), 3)
        self.assertEqual(list(partitions(0)), [Partition()])

    def test_reverse_lexicographic(self):
        self.assertEqual(list(partitions(3)), [Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))])

    def test_max_part(self):
        self.assertEqual(list(partitions(4, 2, 2)), [Partition((2, 2))])

    def test_z_factor(self):
        self.assertEqual(z_factor(Partition((2, 1, 1))), 4)
        self.assertEqual(z_factor(Partition((3,))), 3)
