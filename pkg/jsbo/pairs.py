"""
Catalog of the classical symmetric pairs (G, G1) of scalar type.

A pair is data: the big domain p+, its decomposition into slots (the source
blocks p1+ and the complement p2+), the source factors with their weights,
the K1-invariant polynomial K on p2+ and the closed-form symbol of the
holographic operator. Slot variables of the big domain carry the same group
names as the source factors, so a source polynomial is literally a
polynomial on the big domain that does not depend on p2+.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable

from .domains import MAT, QUADRIC, SKEW, SYM, DomainSpec, adjugate
from .exceptions import InvalidArgument, Unsupported
from .partitions import Partition, partitions
from .polynomials import MultiPoly, PolyMatrix, conj_tag, poly_diff
from .scalars import Weight
from .symmetric import phi_tilde_on_matrix, schur_prime

logger = logging.getLogger(__name__)

HOLOGRAPHIC = 'holographic'
TENSOR = 'tensor'
NORMAL = 'normal'


def _as_poly(value):
    return value if isinstance(value, MultiPoly) else MultiPoly.constant(value)


@dataclass(frozen=True)
class Slot:
    """A linear block of the big space: embed maps slot matrices in, extract reads them out."""

    name: str
    dom: DomainSpec
    embed: Callable
    extract: Callable

    def matrix(self, conj=False):
        return self.dom.matrix(conj_tag(self.name) if conj else self.name)

    def coords(self, conj=False):
        return self.dom.coords(conj_tag(self.name) if conj else self.name)


def block_slot(name, dom, big, row, col, mirror=0):
    """Slot placed at (row, col); mirror=+-1 also writes +-M^T at the transposed place."""
    rows, cols = dom.shape

    def embed(matrix):
        out = [[Fraction(0)] * big.shape[1] for _ in range(big.shape[0])]
        for i in range(rows):
            for j in range(cols):
                value = matrix[i, j]
                out[row + i][col + j] = value
                if mirror and value:
                    out[col + j][row + i] = value * mirror
        return PolyMatrix(out)

    def extract(matrix):
        return matrix.submatrix(range(row, row + rows), range(col, col + cols))

    return Slot(name, dom, embed, extract)


def symmetric_part_slot(name, dom):
    return Slot(name, dom, lambda m: m, lambda v: (v + v.T).scale(Fraction(1, 2)))


def skew_part_slot(name, dom):
    return Slot(name, dom, lambda m: m, lambda v: (v - v.T).scale(Fraction(1, 2)))


def cross_product_slot(name):
    """C^3 inside M(3, C) through v -> [v]x, the matrix of v x (.)."""
    dom = DomainSpec.mat(3, 1)

    def embed(v):
        a, b, c = v[0, 0], v[1, 0], v[2, 0]
        zero = Fraction(0)
        return PolyMatrix([[zero, -c, b], [c, zero, -a], [-b, a, zero]])

    def extract(m):
        half = Fraction(1, 2)
        return PolyMatrix([
            [(m[2, 1] - m[1, 2]) * half],
            [(m[0, 2] - m[2, 0]) * half],
            [(m[1, 0] - m[0, 1]) * half],
        ])

    return Slot(name, dom, embed, extract)


def slot_derivative(slot, direction, f, group=None):
    """Derivative of f along the slot component of `direction`, in the variables of `group`."""
    component = slot.extract(direction)
    result = MultiPoly.zero()
    for v in slot.dom.coords(group or slot.name):
        a = component[v.row - 1, v.col - 1]
        if not a:
            continue
        partial = poly_diff(f, v)
        if partial:
            result = result + partial * a
    return result


class Layout:
    """The big domain as a direct sum of slots."""

    def __init__(self, big, slots):
        self.big = big
        self.slots = tuple(slots)
        self._by_name = {slot.name: slot for slot in self.slots}
        if sum(slot.dom.n for slot in self.slots) != big.n:
            raise InvalidArgument(f'Slots of {big} do not add up to its dimension.')

    @classmethod
    def single(cls, dom, group='x'):
        return cls(dom, [Slot(group, dom, lambda m: m, lambda v: v)])

    def slot(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise InvalidArgument(f'{self.big} has no slot {name!r}.')

    @property
    def names(self):
        return tuple(slot.name for slot in self.slots)

    def assemble(self, values):
        """Big matrix from {slot name: slot matrix}; missing slots are zero."""
        total = self.big.zero()
        for slot in self.slots:
            if slot.name in values:
                total = total + slot.embed(values[slot.name])
        return total

    def matrix(self, conj=False, names=None):
        names = self.names if names is None else names
        return self.assemble({name: self.slot(name).matrix(conj) for name in names})

    def split(self, matrix, names=None):
        names = self.names if names is None else names
        return {name: self.slot(name).extract(matrix) for name in names}

    def coords(self, conj=False):
        return [v for slot in self.slots for v in slot.coords(conj)]

    def groups(self, conj=False):
        return {conj_tag(name) if conj else name for name in self.names}

    def point(self, values):
        """Concrete big point from {slot name: coordinate list}."""
        return self.assemble({name: self.slot(name).dom.point(coords) for name, coords in values.items()})

    def derivative(self, direction, f):
        """Directional derivative of f along the big matrix `direction`."""
        result = MultiPoly.zero()
        for slot in self.slots:
            result = result + slot_derivative(slot, direction, f)
        return result


@dataclass(frozen=True)
class SourceFactor:
    name: str
    dom: DomainSpec
    weight: Weight


@dataclass
class PairSpec:
    """One implemented pair with the data of its operator family."""

    key: str
    sizes: tuple
    k: int
    l: int
    kind: str
    layout: Layout
    factors: tuple
    complement: tuple = ()
    c: Fraction = Fraction(1)
    target_weight: Weight = field(default_factory=lambda: Weight.param('lam'))
    prefactor: MultiPoly = field(default_factory=MultiPoly.one)
    symbol_fn: Callable = None
    symbol_weight: Weight = None
    symbol_d: Fraction = Fraction(1)
    symbol_length: int = 1
    shape_fn: Callable = None
    orthogonal: tuple = ()

    @property
    def big(self):
        return self.layout.big

    @property
    def source_names(self):
        return tuple(factor.name for factor in self.factors)

    def factor(self, name):
        for item in self.factors:
            if item.name == name:
                return item
        raise InvalidArgument(f'{self.key} has no source factor {name!r}.')

    def source_groups(self, conj=False):
        return {conj_tag(name) if conj else name for name in self.source_names}

    def symbol(self, m):
        """S_m(x2; D1): the m-th term of the symbol, without the prefactor and Pochhammer."""
        if self.symbol_fn is None:
            raise Unsupported(f'{self.key} has no holographic symbol.')
        return _as_poly(self.symbol_fn(Partition(m)))

    def symbol_coefficient(self, m):
        return self.symbol_weight.pochhammer(Partition(m), self.symbol_d).inverse()

    def symbol_partitions(self, degree):
        """Partitions whose symbol term has derivative order at most `degree`."""
        for size in range(degree // 2 + 1):
            yield from partitions(size, self.symbol_length)

    def shape(self, m):
        """Source HKS index of the conjugate part of S_m, one partition per factor."""
        if self.shape_fn is None:
            return tuple(Partition(m) for _ in self.factors)
        return self.shape_fn(Partition(m))

    def source_weight_at(self, name, lam):
        return self.factor(name).weight.value({'lam': lam})

    def describe(self):
        return {
            'pair': self.key,
            'sizes': list(self.sizes),
            'k': self.k,
            'l': self.l,
            'kind': self.kind,
            'big': str(self.big),
            'slots': [{'name': slot.name, 'domain': str(slot.dom)} for slot in self.layout.slots],
            'source': [{'name': f.name, 'domain': str(f.dom), 'weight': str(f.weight)} for f in self.factors],
            'complement': list(self.complement),
            'c': f'{self.c.numerator}/{self.c.denominator}',
            'target_weight': str(self.target_weight),
            'prefactor': str(self.prefactor),
        }


def _det(matrix):
    return _as_poly(matrix.det())


def _pf(matrix):
    return _as_poly(matrix.pfaffian())


def _q(column):
    total = MultiPoly.zero()
    for i in range(column.shape[0]):
        total = total + column[i, 0] * column[i, 0]
    return total


def _require(condition, message):
    if not condition:
        raise Unsupported(message)


def _sizes(sizes, count, default):
    sizes = tuple(int(s) for s in (sizes or default))
    if len(sizes) != count or any(s < 1 for s in sizes):
        raise InvalidArgument(f'Expected {count} positive sizes, got {sizes}.')
    return sizes


def _sp_spsp(sizes, k, l):
    s1, s2 = _sizes(sizes, 2, (1, 1))
    _require(l == 0, 'Sp-SpSp has no second integer l.')
    _require(k == 0 or s1 == s2, 'k must be 0 unless the blocks are equal (s\' = s").')
    big = DomainSpec.sym(s1 + s2)
    layout = Layout(big, [
        block_slot('x11', DomainSpec.sym(s1), big, 0, 0),
        block_slot('x12', DomainSpec.mat(s1, s2), big, 0, s1, mirror=1),
        block_slot('x22', DomainSpec.sym(s2), big, s1, s1),
    ])
    weight = Weight.param('lam', 1, k)
    x12 = layout.slot('x12').matrix()
    d11, d22 = layout.slot('x11').matrix(True), layout.slot('x22').matrix(True)
    product = x12.matmul(d22).matmul(x12.T).matmul(d11)
    return PairSpec(
        key='sp-spsp', sizes=(s1, s2), k=k, l=0, kind=HOLOGRAPHIC, layout=layout,
        factors=(SourceFactor('x11', DomainSpec.sym(s1), weight), SourceFactor('x22', DomainSpec.sym(s2), weight)),
        complement=('x12',),
        prefactor=_det(x12) ** k if k else MultiPoly.one(),
        symbol_fn=lambda m: phi_tilde_on_matrix(1, m, product),
        symbol_weight=weight, symbol_d=Fraction(1), symbol_length=min(s1, s2),
        shape_fn=lambda m: (m, m),
        orthogonal=('x11', 'x22'),
    )


def _u_uu(sizes, k, l):
    q1, s1, q2, s2 = _sizes(sizes, 4, (1, 1, 1, 1))
    _require(k == 0 or q1 == s2, 'k must be 0 unless x12 is square.')
    _require(l == 0 or q2 == s1, 'l must be 0 unless x21 is square.')
    big = DomainSpec.mat(q1 + q2, s1 + s2)
    layout = Layout(big, [
        block_slot('x11', DomainSpec.mat(q1, s1), big, 0, 0),
        block_slot('x12', DomainSpec.mat(q1, s2), big, 0, s1),
        block_slot('x21', DomainSpec.mat(q2, s1), big, q1, 0),
        block_slot('x22', DomainSpec.mat(q2, s2), big, q1, s1),
    ])
    weight = Weight.param('lam', 1, k + l)
    x12, x21 = layout.slot('x12').matrix(), layout.slot('x21').matrix()
    d11, d22 = layout.slot('x11').matrix(True), layout.slot('x22').matrix(True)
    product = x12.matmul(d22.T).matmul(x21).matmul(d11.T)
    prefactor = MultiPoly.one()
    if k:
        prefactor = prefactor * _det(x12) ** k
    if l:
        prefactor = prefactor * _det(x21) ** l
    return PairSpec(
        key='u-uu', sizes=(q1, s1, q2, s2), k=k, l=l, kind=HOLOGRAPHIC, layout=layout,
        factors=(SourceFactor('x11', DomainSpec.mat(q1, s1), weight),
                 SourceFactor('x22', DomainSpec.mat(q2, s2), weight)),
        complement=('x12', 'x21'),
        prefactor=prefactor,
        symbol_fn=lambda m: phi_tilde_on_matrix(2, m, product),
        symbol_weight=weight, symbol_d=Fraction(2), symbol_length=min(q1, s1, q2, s2),
        shape_fn=lambda m: (m, m),
        orthogonal=('x11', 'x22'),
    )


def _sost_sostsost(sizes, k, l):
    s1, s2 = _sizes(sizes, 2, (2, 2))
    _require(s1 >= 2 and s2 >= 2, 'SO*-SO*SO* needs blocks of size at least 2.')
    _require(l == 0, 'SO*-SO*SO* has no second integer l.')
    _require(k == 0 or s1 == s2, 'k must be 0 unless the blocks are equal.')
    big = DomainSpec.skew(s1 + s2)
    layout = Layout(big, [
        block_slot('x11', DomainSpec.skew(s1), big, 0, 0),
        block_slot('x12', DomainSpec.mat(s1, s2), big, 0, s1, mirror=-1),
        block_slot('x22', DomainSpec.skew(s2), big, s1, s1),
    ])
    weight = Weight.param('lam', 1, 2 * k)
    x12 = layout.slot('x12').matrix()
    d11, d22 = layout.slot('x11').matrix(True), layout.slot('x22').matrix(True)
    product = -x12.matmul(d22).matmul(x12.T).matmul(d11)
    return PairSpec(
        key='sost-sostsost', sizes=(s1, s2), k=k, l=0, kind=HOLOGRAPHIC, layout=layout,
        factors=(SourceFactor('x11', DomainSpec.skew(s1), weight),
                 SourceFactor('x22', DomainSpec.skew(s2), weight)),
        complement=('x12',),
        prefactor=_det(x12) ** k if k else MultiPoly.one(),
        symbol_fn=lambda m: phi_tilde_on_matrix(4, m, product, divisor=2),
        symbol_weight=weight, symbol_d=Fraction(4), symbol_length=min(s1 // 2, s2 // 2),
        shape_fn=lambda m: (m, m),
        orthogonal=('x11', 'x22'),
    )


def _sp_u(sizes, k, l):
    s1, s2 = _sizes(sizes, 2, (1, 1))
    big = DomainSpec.sym(s1 + s2)
    layout = Layout(big, [
        block_slot('x11', DomainSpec.sym(s1), big, 0, 0),
        block_slot('x12', DomainSpec.mat(s1, s2), big, 0, s1, mirror=1),
        block_slot('x22', DomainSpec.sym(s2), big, s1, s1),
    ])
    x11, x22 = layout.slot('x11').matrix(), layout.slot('x22').matrix()
    d12 = layout.slot('x12').matrix(True)
    product = x11.matmul(d12).matmul(x22).matmul(d12.T).scale(Fraction(1, 4))
    prefactor = MultiPoly.one()
    if k:
        prefactor = prefactor * _det(x11) ** k
    if l:
        prefactor = prefactor * _det(x22) ** l
    return PairSpec(
        key='sp-u', sizes=(s1, s2), k=k, l=l, kind=HOLOGRAPHIC, layout=layout,
        factors=(SourceFactor('x12', DomainSpec.mat(s1, s2), Weight.param('lam', 2, 2 * k + 2 * l)),),
        complement=('x11', 'x22'), c=Fraction(2),
        prefactor=prefactor,
        symbol_fn=lambda m: phi_tilde_on_matrix(1, m, product),
        symbol_weight=Weight.param('lam', 1, k + l + Fraction(1, 2)), symbol_d=Fraction(1),
        symbol_length=min(s1, s2),
        shape_fn=lambda m: (Partition(2 * p for p in m),),
        orthogonal=('x11', 'x22'),
    )


def _sost_u(sizes, k, l):
    s1, s2 = _sizes(sizes, 2, (2, 2))
    _require(s1 >= 2 and s2 >= 2, 'SO*-U needs blocks of size at least 2.')
    _require(k == 0 or s1 % 2 == 0, 'Pf(x11) needs an even block.')
    _require(l == 0 or s2 % 2 == 0, 'Pf(x22) needs an even block.')
    big = DomainSpec.skew(s1 + s2)
    layout = Layout(big, [
        block_slot('x11', DomainSpec.skew(s1), big, 0, 0),
        block_slot('x12', DomainSpec.mat(s1, s2), big, 0, s1, mirror=-1),
        block_slot('x22', DomainSpec.skew(s2), big, s1, s1),
    ])
    x11, x22 = layout.slot('x11').matrix(), layout.slot('x22').matrix()
    d12 = layout.slot('x12').matrix(True)
    product = -x11.matmul(d12).matmul(x22).matmul(d12.T)
    prefactor = MultiPoly.one()
    if k:
        prefactor = prefactor * _pf(x11) ** k
    if l:
        prefactor = prefactor * _pf(x22) ** l
    return PairSpec(
        key='sost-u', sizes=(s1, s2), k=k, l=l, kind=HOLOGRAPHIC, layout=layout,
        factors=(SourceFactor('x12', DomainSpec.mat(s1, s2), Weight.param('lam', 1, k + l)),),
        complement=('x11', 'x22'),
        prefactor=prefactor,
        symbol_fn=lambda m: phi_tilde_on_matrix(4, m, product, divisor=2),
        symbol_weight=Weight.param('lam', 1, k + l - 1), symbol_d=Fraction(4),
        symbol_length=min(s1 // 2, s2 // 2),
        shape_fn=lambda m: (m.doubled(),),
        orthogonal=('x11', 'x22'),
    )


def _su_sp(sizes, k, l):
    (s,) = _sizes(sizes, 1, (2,))
    _require(s >= 2, 'SU-Sp needs s >= 2.')
    _require(l == 0, 'SU-Sp has no second integer l.')
    _require(k == 0 or s % 2 == 0, 'Pf(x2) needs s even.')
    big = DomainSpec.mat(s, s)
    layout = Layout(big, [symmetric_part_slot('x1', DomainSpec.sym(s)), skew_part_slot('x2', DomainSpec.skew(s))])
    x2, d1 = layout.slot('x2').matrix(), layout.slot('x1').matrix(True)
    product = x2.matmul(d1)
    return PairSpec(
        key='su-sp', sizes=(s,), k=k, l=0, kind=HOLOGRAPHIC, layout=layout,
        factors=(SourceFactor('x1', DomainSpec.sym(s), Weight.param('lam', 1, k)),),
        complement=('x2',),
        prefactor=_pf(x2) ** k if k else MultiPoly.one(),
        symbol_fn=lambda m: schur_prime(m, product),
        symbol_weight=Weight.param('lam', 1, k - Fraction(1, 2)), symbol_d=Fraction(2),
        symbol_length=s // 2,
    )


def _su_sost(sizes, k, l):
    (s,) = _sizes(sizes, 1, (2,))
    _require(s >= 2, 'SU-SO* needs s >= 2.')
    _require(l == 0, 'SU-SO* has no second integer l.')
    big = DomainSpec.mat(s, s)
    layout = Layout(big, [skew_part_slot('x1', DomainSpec.skew(s)), symmetric_part_slot('x2', DomainSpec.sym(s))])
    x2, d1 = layout.slot('x2').matrix(), layout.slot('x1').matrix(True)
    product = x2.matmul(d1).scale(Fraction(1, 2))
    return PairSpec(
        key='su-sost', sizes=(s,), k=k, l=0, kind=HOLOGRAPHIC, layout=layout,
        factors=(SourceFactor('x1', DomainSpec.skew(s), Weight.param('lam', 2, 4 * k)),),
        complement=('x2',), c=Fraction(2),
        prefactor=_det(x2) ** k if k else MultiPoly.one(),
        symbol_fn=lambda m: schur_prime(m, product),
        symbol_weight=Weight.param('lam', 1, 2 * k + Fraction(1, 2)), symbol_d=Fraction(2),
        symbol_length=s // 2,
    )


def _su33_sost6(sizes, k, l):
    _require(not sizes or tuple(sizes) == (3,), 'SU(3,3) > SO*(6) has no size parameters.')
    _require(l == 0, 'SU(3,3) > SO*(6) has no second integer l.')
    big = DomainSpec.mat(3, 3)
    layout = Layout(big, [cross_product_slot('x1'), symmetric_part_slot('x2', DomainSpec.sym(3))])
    x2, d1 = layout.slot('x2').matrix(), layout.slot('x1').matrix(True)
    pairing = _as_poly(d1.T.matmul(adjugate(DomainSpec.sym(3), x2)).matmul(d1)[0, 0])
    base = pairing.scale(Fraction(-1, 4))

    def symbol(m):
        j = m.size
        return base.power(j).scale(Fraction(1, factorial(j)))

    return PairSpec(
        key='su33-sost6', sizes=(), k=k, l=0, kind=HOLOGRAPHIC, layout=layout,
        factors=(SourceFactor('x1', DomainSpec.mat(3, 1), Weight.param('lam', 2, 4 * k)),),
        complement=('x2',), c=Fraction(2),
        prefactor=_det(x2) ** k if k else MultiPoly.one(),
        symbol_fn=symbol,
        symbol_weight=Weight.param('lam', 1, 2 * k + Fraction(1, 2)), symbol_d=Fraction(2),
        symbol_length=1,
    )


def _so_soso(sizes, k, l):
    n1, n2 = _sizes(sizes, 2, (2, 2))
    _require(l == 0, 'SO-SOSO is implemented for k1 = k2 = k only.')
    big = DomainSpec.quadric(n1 + n2)
    layout = Layout(big, [
        block_slot('x1', DomainSpec.quadric(n1), big, 0, 0),
        block_slot('x2', DomainSpec.quadric(n2), big, n1, 0),
    ])
    q2 = _q(layout.slot('x2').matrix())
    qd = _q(layout.slot('x1').matrix(True))
    base = (q2 * qd).scale(-1)

    def symbol(m):
        j = m.size
        return base.power(j).scale(Fraction(1, factorial(j)))

    return PairSpec(
        key='so-soso', sizes=(n1, n2), k=k, l=0, kind=HOLOGRAPHIC, layout=layout,
        factors=(SourceFactor('x1', DomainSpec.quadric(n1), Weight.param('lam', 1, 2 * k)),),
        complement=('x2',),
        prefactor=q2 ** k if k else MultiPoly.one(),
        symbol_fn=symbol,
        symbol_weight=Weight.param('lam', 1, 2 * k - Fraction(n1 - 2, 2)), symbol_d=Fraction(2),
        symbol_length=1,
    )


def _normal_u(sizes, k, l):
    q, s1, s2 = _sizes(sizes, 3, (1, 1, 1))
    big = DomainSpec.mat(q, s1 + s2)
    layout = Layout(big, [
        block_slot('x1', DomainSpec.mat(q, s1), big, 0, 0),
        block_slot('x2', DomainSpec.mat(q, s2), big, 0, s1),
    ])
    return PairSpec(
        key='normal-u', sizes=(q, s1, s2), k=k, l=l, kind=NORMAL, layout=layout,
        factors=(SourceFactor('x1', DomainSpec.mat(q, s1), Weight.param('lam')),),
        complement=('x2',),
    )


def tensor_pair(dom, k=0):
    """(G0 x G0, diag G0): source groups xL, xR with weights lam, mu; target group x."""
    dom = DomainSpec.parse(dom) if isinstance(dom, str) else dom
    _require(dom.is_tube or (dom.kind == MAT and dom.params[1] == 1),
             f'Tensor operators need a tube domain or MAT(s,1), got {dom}.')
    return PairSpec(
        key='tensor', sizes=dom.params, k=k, l=0, kind=TENSOR, layout=Layout.single(dom, 'x'),
        factors=(SourceFactor('xL', dom, Weight.param('lam')), SourceFactor('xR', dom, Weight.param('mu'))),
        target_weight=Weight({'lam': 1, 'mu': 1}, 2 * k),
        symbol_d=Fraction(dom.d), symbol_length=dom.r,
    )


CATALOG = {
    'sp-spsp': _sp_spsp,
    'u-uu': _u_uu,
    'sost-sostsost': _sost_sostsost,
    'sp-u': _sp_u,
    'sost-u': _sost_u,
    'su-sp': _su_sp,
    'su-sost': _su_sost,
    'su33-sost6': _su33_sost6,
    'so-soso': _so_soso,
    'normal-u': _normal_u,
}

PAIR_CHOICES = sorted(CATALOG) + ['tensor', 'tensor-sl2']


def parse_sizes(text):
    if text is None or text == '':
        return ()
    if isinstance(text, (tuple, list)):
        return tuple(int(s) for s in text)
    try:
        return tuple(int(s) for s in str(text).split(','))
    except ValueError:
        raise InvalidArgument(f'Cannot parse sizes from {text!r}.')


def build_pair(key, sizes=(), k=0, l=0, domain=None):
    """PairSpec for a catalog id; tensor pairs take the domain G0."""
    k, l = int(k), int(l)
    if k < 0 or l < 0:
        raise InvalidArgument('k and l must be non-negative.')
    sizes = parse_sizes(sizes)
    if key == 'tensor-sl2':
        return tensor_pair(DomainSpec.sym(1), k)
    if key == 'tensor':
        if domain is None:
            raise InvalidArgument('Tensor pairs need a domain G0.')
        return tensor_pair(domain, k)
    builder = CATALOG.get(key)
    if builder is None:
        raise Unsupported(f'Unknown pair {key!r}.')
    pair = builder(sizes, k, l)
    logger.debug('Built pair %s sizes=%s k=%s l=%s on %s', key, pair.sizes, k, l, pair.big)
    return pair


def splittings(dom):
    """Implemented pairs (k = l = 0) whose big domain is `dom`."""
    candidates = []
    if dom.kind == SYM:
        s = dom.params[0]
        for s1 in range(1, s):
            candidates += [('sp-spsp', (s1, s - s1)), ('sp-u', (s1, s - s1))]
    elif dom.kind == MAT:
        q, s = dom.params
        for q1 in range(1, q):
            for s1 in range(1, s):
                candidates.append(('u-uu', (q1, s1, q - q1, s - s1)))
        if q == s and s >= 2:
            candidates += [('su-sp', (s,)), ('su-sost', (s,))]
        if q == s == 3:
            candidates.append(('su33-sost6', ()))
    elif dom.kind == SKEW:
        s = dom.params[0]
        for s1 in range(2, s - 1):
            candidates += [('sost-sostsost', (s1, s - s1)), ('sost-u', (s1, s - s1))]
    elif dom.kind == QUADRIC:
        n = dom.params[0]
        for n1 in range(2, n):
            candidates.append(('so-soso', (n1, n - n1)))
    return [build_pair(key, sizes) for key, sizes in candidates]
