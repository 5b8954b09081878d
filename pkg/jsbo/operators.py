"""
Differential operators with parameter-valued coefficients.

A PolyOperator is a finite list of terms coeff * x^mult * D^diff where D is
the Fischer-dual derivative of the diff groups (D_v = w_v^{-1} d/dv). After
differentiation the result can be restricted: groups mapped to another group
are renamed (the diagonal restriction of the tensor case), groups mapped to
None are set to zero (normal derivatives).
"""
import logging
from fractions import Fraction
from typing import NamedTuple

from .domains import DomainSpec, det_poly
from .exceptions import InvalidArgument, Unsupported
from .fischer import hks_project, repkernel_K
from .pairs import HOLOGRAPHIC, NORMAL, TENSOR, tensor_pair
from .partitions import Partition, partitions
from .polynomials import (
    ONE_MONO, MultiPoly, Var, conj_tag, is_conj, mono_canonical, mono_diff, mono_latex, mono_str,
)
from .scalars import ParamScalar, Weight

logger = logging.getLogger(__name__)

MULT = 'mult'
IDENTITY = 'identity'

KIND_CHOICES = (HOLOGRAPHIC, TENSOR, NORMAL, MULT, IDENTITY)


class OperatorTerm(NamedTuple):
    coeff: ParamScalar
    mult: tuple
    diff: tuple


def parse_mono(text):
    """Inverse of mono_str: '1' or 'x[1,2]^2*v[1,1]'."""
    text = text.strip()
    if text == '1':
        return ONE_MONO
    mono = []
    for factor in text.split('*'):
        base, _, exponent = factor.partition('^')
        mono.append((Var.parse(base), int(exponent or 1)))
    return mono_canonical(mono)


class PolyOperator:
    """Finite differential operator acting on polynomials."""

    def __init__(self, terms, diff_domains=None, restrict=None, label='', kind=IDENTITY,
                 source_weights=None, target_weight=None, degree=None, pair=None, domain=None):
        self.terms = [term for term in terms if not term.coeff.is_zero]
        self.diff_domains = dict(diff_domains or {})
        self.restrict = dict(restrict or {})
        self.label = label
        self.kind = kind
        self.source_weights = dict(source_weights or {})
        self.target_weight = target_weight
        self.degree = degree
        self.pair = pair
        self.domain = domain
        if kind not in KIND_CHOICES:
            raise InvalidArgument(f'Unknown operator kind {kind!r}.')
        mult_groups = {v.group for term in self.terms for v, _ in term.mult}
        shared = mult_groups & set(self.diff_domains)
        if shared:
            raise InvalidArgument(f'Groups {sorted(shared)} are both multiplied and differentiated.')
        stray = {v.group for term in self.terms for v, _ in term.diff} - set(self.diff_domains)
        if stray:
            raise InvalidArgument(f'No domain declared for derivative groups {sorted(stray)}.')

    def __len__(self):
        return len(self.terms)

    @property
    def diff_groups(self):
        return set(self.diff_domains)

    def order(self):
        return max((sum(e for _, e in term.diff) for term in self.terms), default=0)

    def at(self, point):
        """Copy with every coefficient specialised to a rational."""
        terms = [term._replace(coeff=ParamScalar.const(_scalar(term.coeff, point))) for term in self.terms]
        return PolyOperator(terms, self.diff_domains, self.restrict, self.label, self.kind, self.source_weights,
                            self.target_weight, self.degree, self.pair, self.domain)

    def to_json(self):
        return {
            'label': self.label,
            'kind': self.kind,
            'terms': [
                {'coeff': term.coeff.to_json(), 'mult': mono_str(term.mult), 'diff': mono_str(term.diff)}
                for term in self.terms
            ],
        }

    @classmethod
    def from_json(cls, data, diff_domains=None, restrict=None):
        terms = [
            OperatorTerm(ParamScalar.from_json(item['coeff']), parse_mono(item['mult']), parse_mono(item['diff']))
            for item in data.get('terms', [])
        ]
        if diff_domains is None:
            raise InvalidArgument('Operators read from JSON need their derivative domains.')
        return cls(terms, diff_domains, restrict, data.get('label', ''), data.get('kind', IDENTITY))

    def latex(self):
        if not self.terms:
            return '0'
        parts = []
        for term in self.terms:
            pieces = [term.coeff.latex()]
            if term.mult:
                pieces.append(mono_latex(term.mult))
            for v, e in term.diff:
                symbol = rf'\partial_{{{v.group}_{{{v.row}{v.col}}}}}'
                pieces.append(symbol if e == 1 else f'{symbol}^{{{e}}}')
            parts.append(' '.join(pieces))
        return ' + '.join(parts).replace('+ -', '- ')

    def __str__(self):
        return ' + '.join(f'({term.coeff})*{mono_str(term.mult)}*D[{mono_str(term.diff)}]' for term in self.terms) or '0'


def _diff_weight(F, diff):
    weight = Fraction(1)
    for v, e in diff:
        weight *= F.diff_domains[v.group].weight(v) ** e
    return weight


def _scalar(coeff, at):
    if not coeff.factors:
        return coeff.constant
    return coeff.value(at)


def _restrict(f, restrict):
    zeroed = {group for group, target in restrict.items() if target is None}
    if zeroed:
        f = f.evaluate({v: Fraction(0) for v in f.variables() if v.group in zeroed})
    renamed = {group: target for group, target in restrict.items() if target is not None}
    return f.rename(renamed) if renamed else f


def apply_operator(F, f, at=None):
    """F f exactly; with `at` the parameters are specialised to rationals."""
    if F.degree is not None and f.degree(F.diff_groups) > F.degree:
        raise InvalidArgument(
            f'Operator {F.label} was built for inputs of degree {F.degree}, got {f.degree(F.diff_groups)}.')
    by_diff = {}
    for term in F.terms:
        by_diff.setdefault(term.diff, []).append(term)
    result = MultiPoly.zero()
    for diff, terms in by_diff.items():
        derivative = mono_diff(f, diff)
        if not derivative:
            continue
        derivative = derivative.scale(1 / _diff_weight(F, diff))
        for term in terms:
            piece = derivative.mul(MultiPoly.monomial(term.mult)) if term.mult else derivative
            result = result + piece.scale(_scalar(term.coeff, at))
    return _restrict(result, F.restrict)


def terms_from_poly(poly, coeff):
    """Terms of a polynomial in ordinary and conjugate variables; conjugate symbols become derivatives."""
    terms = []
    for mono, c in poly.items():
        mult = tuple((v, e) for v, e in mono if not is_conj(v.group))
        diff = mono_canonical((v.renamed(conj_tag(v.group)), e) for v, e in mono if is_conj(v.group))
        terms.append(OperatorTerm(coeff * c, mult, diff))
    return terms


def identity_operator(dom, weight=None):
    dom = DomainSpec.parse(dom) if isinstance(dom, str) else dom
    weight = weight or Weight.param('lam')
    return PolyOperator([OperatorTerm(ParamScalar.one(), ONE_MONO, ONE_MONO)], label='identity', kind=IDENTITY,
                        source_weights={'x': weight}, target_weight=weight, domain=dom)


def symbol_terms(pair, m, coeff=None):
    """Terms of K(x2) S_m(x2; D1) with the given coefficient (the Pochhammer reciprocal by default)."""
    m = Partition(m)
    coeff = pair.symbol_coefficient(m) if coeff is None else coeff
    return terms_from_poly(pair.prefactor.mul(pair.symbol(m)), coeff)


def holographic(pair, degree):
    """sum_m K(x2) S_m(x2; D1) / (w)_{m,d}, finite on inputs of degree <= `degree`."""
    if pair.kind != HOLOGRAPHIC:
        raise Unsupported(f'{pair.key} has no holographic operator.')
    terms = []
    for m in pair.symbol_partitions(degree):
        terms.extend(symbol_terms(pair, m))
    logger.debug('Holographic operator of %s for degree %s: %s terms', pair.key, degree, len(terms))
    return PolyOperator(
        terms,
        diff_domains={factor.name: factor.dom for factor in pair.factors},
        label=f'F[{pair.key}]',
        kind=HOLOGRAPHIC,
        source_weights={factor.name: factor.weight for factor in pair.factors},
        target_weight=pair.target_weight,
        degree=degree,
        pair=pair,
    )


def apply_holographic(pair, f, at=None):
    """The holographic operator built to the degree of f and applied to it."""
    degree = f.degree(set(pair.source_names))
    return apply_operator(holographic(pair, degree), f, at)


def rc_tensor(dom, k):
    """Rankin-Cohen type operator f(xL, xR) -> sum_m c_m Phi_{k-m*,m}(DL, DR) f restricted to xL = xR = x.

    The components Phi are read off Delta(DL - DR)^k by projecting on P_m in
    the xR symbols; each gets 1/((lam)_{k-m*,d} (mu)_{m,d}). On MAT(s,1) the
    power (v.DL - v.DR)^k keeps the W-slot variables v as multipliers.
    """
    pair = tensor_pair(dom, k)
    dom = pair.big
    left, right = dom.matrix('xL~'), dom.matrix('xR~')
    if dom.is_tube:
        base = det_poly(dom, left - right)
    else:
        v = dom.matrix('v')
        base = MultiPoly.zero()
        for i in range(dom.shape[0]):
            base = base + v[i, 0] * (left[i, 0] - right[i, 0])
    power = base.power(k)
    lam, mu = Weight.param('lam'), Weight.param('mu')
    terms = []
    for size in range(dom.r * k + 1):
        for m in partitions(size, dom.r, k):
            component = hks_project(dom, power, m, 'xR~')
            if not component:
                continue
            coeff = (lam.pochhammer(m.complement(k, dom.r), dom.d) * mu.pochhammer(m, dom.d)).inverse()
            terms.extend(terms_from_poly(component, coeff))
    return PolyOperator(
        terms,
        diff_domains={'xL': dom, 'xR': dom},
        restrict={'xL': 'x', 'xR': 'x'},
        label=f'RC[{dom},k={k}]',
        kind=TENSOR,
        source_weights={'xL': lam, 'xR': mu},
        target_weight=pair.target_weight,
        pair=pair,
    )


def _normal_slots(pair):
    if pair.kind != NORMAL:
        raise Unsupported(f'{pair.key} is not a normal-derivative pair.')
    return pair.layout.slot(pair.source_names[0]), pair.layout.slot(pair.complement[0])


def normal_operator(pair, m, group='v'):
    """K_m(v; D_x2) followed by x2 = 0: the P_m(p2+) part of the x2-jet, written in v."""
    _, x2 = _normal_slots(pair)
    m = Partition(m)
    if len(m) > x2.dom.r:
        raise InvalidArgument(f'Partition {m} is longer than the rank of {x2.dom}.')
    kernel = repkernel_K(x2.dom, m, group, conj_tag(x2.name))
    lam = Weight.param('lam')
    return PolyOperator(
        terms_from_poly(kernel, ParamScalar.one()),
        diff_domains={x2.name: x2.dom},
        restrict={x2.name: None},
        label=f'N[{pair.key},m={m}]',
        kind=NORMAL,
        source_weights={slot.name: lam for slot in pair.layout.slots},
        target_weight=lam,
        pair=pair,
    )


def normal_sbo(pair, m, f, at=None):
    return apply_operator(normal_operator(pair, m), f, at)


def mult_operator(pair, K):
    """f(x1) -> K(x2) f(x1) for a homogeneous K on the complement."""
    K = K if isinstance(K, MultiPoly) else MultiPoly.constant(K)
    degree = K.degree()
    if K != K.homogeneous(degree):
        raise InvalidArgument('The multiplier K must be homogeneous.')
    stray = set(K.groups()) - set(pair.complement)
    if stray:
        raise InvalidArgument(f'K depends on {sorted(stray)} outside the complement of {pair.key}.')
    terms = [OperatorTerm(ParamScalar.const(c), mono, ONE_MONO) for mono, c in K.items()]
    return PolyOperator(
        terms,
        label=f'M[{pair.key},K={K}]',
        kind=MULT,
        source_weights={factor.name: factor.weight.shifted(degree) for factor in pair.factors},
        target_weight=pair.target_weight,
        pair=pair,
    )


def mult_embed(pair, K, f):
    return apply_operator(mult_operator(pair, K), f)


def operator_latex(F):
    """Display string with the label on the left."""
    return rf'{F.label} = {F.latex()}' if F.label else F.latex()

