from fractions import Fraction

from django.test import SimpleTestCase

from jsbo.domains import DomainSpec
from jsbo.exceptions import InvalidArgument, Unsupported
from jsbo.pairs import CATALOG, HOLOGRAPHIC, NORMAL, TENSOR, build_pair, parse_sizes, splittings
from jsbo.partitions import Partition
from jsbo.polynomials import MultiPoly


class BuildPairTests(SimpleTestCase):

    def test_catalog_defaults_build(self):
        for key in CATALOG:
            with self.subTest(pair=key):
                pair = build_pair(key)
                self.assertEqual(pair.key, key)
                self.assertEqual(sum(slot.dom.n for slot in pair.layout.slots), pair.big.n)

    def test_kinds(self):
        self.assertEqual(build_pair('sp-u').kind, HOLOGRAPHIC)
        self.assertEqual(build_pair('normal-u').kind, NORMAL)
        self.assertEqual(build_pair('tensor', domain=DomainSpec.sym(2)).kind, TENSOR)

    def test_sp_u_data(self):
        pair = build_pair('sp-u', (1, 2), k=1)
        self.assertEqual(str(pair.big), 'sym:3')
        self.assertEqual(pair.layout.names, ('x11', 'x12', 'x22'))
        self.assertEqual(pair.c, 2)
        self.assertEqual(pair.prefactor, MultiPoly.variable('x11'))
        self.assertEqual(pair.source_weight_at('x12', 1), Fraction(4))
        self.assertEqual(pair.shape(Partition((1,))), (Partition((2,)),))

    def test_u_uu_prefactor(self):
        pair = build_pair('u-uu', (1, 1, 1, 1), k=1, l=2)
        x12, x21 = MultiPoly.variable('x12'), MultiPoly.variable('x21')
        self.assertEqual(pair.prefactor, x12 * x21 * x21)
        self.assertEqual(pair.source_weight_at('x11', 0), Fraction(3))

    def test_symbol_partitions(self):
        pair = build_pair('sp-u', (1, 1))
        self.assertEqual(list(pair.symbol_partitions(4)), [Partition(), Partition((1,)), Partition((2,))])

    def test_describe(self):
        data = build_pair('sp-spsp', (1, 1)).describe()
        self.assertEqual(data['pair'], 'sp-spsp')
        self.assertEqual(data['big'], 'sym:2')
        self.assertEqual(data['complement'], ['x12'])
        self.assertEqual([s['name'] for s in data['source']], ['x11', 'x22'])


class BuildPairErrorTests(SimpleTestCase):

    def test_unknown_pair(self):
        with self.assertRaises(Unsupported):
            build_pair('e7-e6')

    def test_negative_integers(self):
        with self.assertRaises(InvalidArgument):
            build_pair('sp-u', (1, 1), k=-1)

    def test_k_needs_equal_blocks(self):
        with self.assertRaises(Unsupported):
            build_pair('sp-spsp', (1, 2), k=1)

    def test_wrong_number_of_sizes(self):
        with self.assertRaises(InvalidArgument):
            build_pair('u-uu', (1, 1))

    def test_tensor_needs_tube_domain(self):
        with self.assertRaises(InvalidArgument):
            build_pair('tensor')
        with self.assertRaises(Unsupported):
            build_pair('tensor', domain=DomainSpec.mat(2, 3))
        self.assertEqual(build_pair('tensor', domain='mat:3x1').big, DomainSpec.mat(3, 1))
        self.assertEqual(build_pair('tensor-sl2').big, DomainSpec.sym(1))

    def test_parse_sizes(self):
        self.assertEqual(parse_sizes('1,2'), (1, 2))
        self.assertEqual(parse_sizes(''), ())
        with self.assertRaises(InvalidArgument):
            parse_sizes('1,x')


class SplittingTests(SimpleTestCase):

    def test_sym(self):
        keys = [(p.key, p.sizes) for p in splittings(DomainSpec.sym(2))]
        self.assertEqual(keys, [('sp-spsp', (1, 1)), ('sp-u', (1, 1))])

    def test_mat(self):
        keys = [p.key for p in splittings(DomainSpec.mat(2, 2))]
        self.assertEqual(keys, ['u-uu', 'su-sp', 'su-sost'])

    def test_rank_one_has_none(self):
        self.assertEqual(splittings(DomainSpec.sym(1)), [])
