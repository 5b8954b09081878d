"""
The filtration M_i(lam) of the weight-lam module at reducible points and the
residue operators of the holographic families at their poles.

A pole sits at lam0 = mu - offset, where mu is the source weight of the
family. The residue of order j keeps only the terms whose source index lies
in the declared input submodule, and takes each coefficient's limit of
(lam - lam0)^j * c_m.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, floor

from .domains import DomainSpec
from .exceptions import InvalidArgument, LimitDiverges, LimitVanishes, OrderTooSmall, Unsupported
from .fischer import hks_components
from .lie import (
    big_action, dpi_apply, ensure_calibrated, probe_monomials, source_action, spanning_elements,
    subalgebra_basis,
)
from .operators import PolyOperator, apply_operator, symbol_terms
from .pairs import HOLOGRAPHIC, Layout
from .partitions import Partition, partitions
from .polynomials import MultiPoly
from .scalars import ParamScalar, Weight, param_limit, parse_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubmoduleSpec:
    """M_index(weight) inside the polynomials of `group` on `dom`."""

    dom: DomainSpec
    index: int
    weight: Fraction
    group: str = 'x'

    def bound(self):
        return Fraction(self.dom.d, 2) * (self.index - 1) - self.weight

    def contains(self, m):
        m = Partition(m)
        if self.index <= 0:
            return False
        if self.index > self.dom.r:
            return True
        return m.part(self.index) <= self.bound()

    def to_json(self):
        return {'domain': str(self.dom), 'index': self.index, 'weight': f'{self.weight}', 'group': self.group}


def submodule_project(spec, f):
    """Sum of the HKS components of f that lie in M_i."""
    result = MultiPoly.zero()
    for m, part in hks_components(spec.dom, f, spec.group).items():
        if spec.contains(m):
            result = result + part
    return result


def filtration_check(dom, weight, max_degree=4):
    """M_{i-1} inside M_i and every M_i stable under the action, through `max_degree`."""
    dom = DomainSpec.parse(dom) if isinstance(dom, str) else dom
    weight = parse_rational(weight)
    ensure_calibrated(dom)
    layout = Layout.single(dom, 'x')
    monomials = probe_monomials([('x', dom)], max_degree)
    failures = []
    for index in range(dom.r + 2):
        spec = SubmoduleSpec(dom, index, weight)
        smaller = SubmoduleSpec(dom, index - 1, weight)
        for f in monomials:
            g = submodule_project(smaller, f)
            if g and submodule_project(spec, g) != g:
                failures.append({'index': index, 'input': str(f), 'reason': 'not nested'})
            g = submodule_project(spec, f)
            if not g:
                continue
            for X in spanning_elements(dom):
                image = dpi_apply(layout, weight, X, g)
                if submodule_project(spec, image) != image:
                    logger.warning('M_%s(%s) on %s is not stable under %s', index, weight, dom, X.label(dom))
                    failures.append({'index': index, 'input': str(f), 'element': X.label(dom)})
    return {
        'check': 'filtration',
        'domain': str(dom),
        'weight': f'{weight}',
        'max_degree': max_degree,
        'ok': not failures,
        'failures': failures,
    }


@dataclass(frozen=True)
class ResidueProfile:
    """Pole data of one family at one mu: J, T and R are affine in i as (slope, shift)."""

    pair: str
    mu: Fraction
    lam0: Fraction
    base: int
    top: int
    domain_rule: tuple
    trivial_rule: tuple
    restricted_rule: tuple
    everything: int

    def _index(self, rule, i, top_is_everything=False):
        if top_is_everything and i == self.top:
            return self.everything
        slope, shift = rule
        return slope * i + shift

    def domain_index(self, i):
        return self._index(self.domain_rule, i, True)

    def trivial_index(self, i):
        return self._index(self.trivial_rule, i)

    def restricted_index(self, i):
        return self._index(self.restricted_rule, i, True)

    @property
    def expected_count(self):
        return max(self.top - self.base, 0)

    @property
    def in_range(self):
        return self.base <= self.top

    def to_json(self):
        return {
            'pair': self.pair,
            'mu': f'{self.mu}',
            'lambda0': f'{self.lam0}',
            'base': self.base,
            'top': self.top,
            'expected_count': self.expected_count,
            'in_range': self.in_range,
        }


def _integral(mu, key):
    if mu.denominator != 1:
        raise InvalidArgument(f'{key} has poles only at integral mu, got {mu}.')


def residue_profile(pair, mu):
    mu = parse_rational(mu)
    key = pair.key
    s1 = pair.sizes[0] if pair.sizes else 0
    everything = max(factor.dom.r for factor in pair.factors) + 1
    if mu.denominator not in (1, 2):
        raise InvalidArgument(f'mu must be an integer or a half-integer, got {mu}.')
    half = mu.denominator == 2
    if key == 'u-uu':
        _integral(mu, key)
        offset = pair.k + pair.l
        base, top = max(0, int(mu)), min(pair.sizes)
        rules = ((1, 1), (1, 0), (1, 1))
    elif key == 'sp-spsp':
        offset = pair.k
        base = max(0, floor(mu))
        top = s1 // 2 if half else ceil(Fraction(s1, 2))
        rules = ((2, 2), (2, 0), (2, 2)) if half else ((2, 1), (2, -1), (2, 1))
    elif key == 'sost-sostsost':
        _integral(mu, key)
        offset = 2 * pair.k
        base, top = max(0, ceil(mu / 2)), s1 // 2
        rules = ((1, 1), (1, 0), (1, 1))
    elif key == 'sp-u':
        offset = pair.k + pair.l
        base = max(0, ceil(mu))
        top = ceil(Fraction(s1, 2)) if half else s1 // 2
        rules = ((2, 1), (2, -1), (2, 0)) if half else ((2, 2), (2, 0), (2, 1))
    elif key == 'sost-u':
        _integral(mu, key)
        offset = pair.k + pair.l
        base, top = max(0, floor(mu / 2)), s1 // 2
        rules = ((2, 2), (2, 0), (2, 1))
    else:
        raise Unsupported(f'No residue profile for {key}.')
    return ResidueProfile(key, mu, mu - offset, base, top, *rules, everything)


def source_weights_at(pair, lam0):
    return {factor.name: factor.weight.value({'lam': lam0}) for factor in pair.factors}


def _active(pair, weights, m, index):
    """A term acts on M_index of some factor only when its source index lies there."""
    for factor, shape in zip(pair.factors, pair.shape(m)):
        if SubmoduleSpec(factor.dom, index, weights[factor.name], factor.name).contains(shape):
            return True
    return False


def structural_pole_order(pair, mu, budget=None):
    """Largest pole order at lam0 over the coefficient family, read from the ParamScalar factors."""
    profile = residue_profile(pair, mu)
    d = int(pair.symbol_d)
    budget = budget or pair.symbol_length * (int(abs(profile.lam0)) + d * pair.symbol_length + 2)
    order = 0
    for size in range(budget + 1):
        for m in partitions(size, pair.symbol_length):
            order = max(order, -pair.symbol_coefficient(m).order_at(profile.lam0))
    return order


def residue_operator(pair, mu, order, degree):
    """lim (lam - lam0)^order F restricted to the declared input submodule."""
    profile = residue_profile(pair, mu)
    i = profile.base + int(order)
    if order < 0 or not profile.base <= i <= profile.top:
        raise InvalidArgument(f'Order {order} is outside 0..{profile.top - profile.base} for {pair.key} at mu={mu}.')
    weights = source_weights_at(pair, profile.lam0)
    index = profile.domain_index(i)
    terms = []
    for m in pair.symbol_partitions(degree):
        if not _active(pair, weights, m, index):
            continue
        try:
            value = param_limit(pair.symbol_coefficient(m), profile.lam0, order)
        except LimitVanishes:
            continue
        except LimitDiverges:
            raise OrderTooSmall(f'The term {m} of {pair.key} keeps a pole at lam={profile.lam0} after order {order}.')
        terms.extend(symbol_terms(pair, m, ParamScalar.const(value)))
    logger.info('Residue of %s at mu=%s order %s: %s terms', pair.key, mu, order, len(terms))
    return PolyOperator(
        terms,
        diff_domains={factor.name: factor.dom for factor in pair.factors},
        label=f'R[{pair.key},mu={mu},order={order}]',
        kind=HOLOGRAPHIC,
        source_weights={name: Weight.constant(value) for name, value in weights.items()},
        target_weight=Weight.constant(profile.lam0),
        degree=degree,
        pair=pair,
    )


def _submodule_inputs(pair, specs, max_degree):
    """Products of projected monomials, one per factor, of total degree <= max_degree."""
    per_factor = []
    for factor in pair.factors:
        spec = specs.get(factor.name)
        items = []
        for g in probe_monomials([(factor.name, factor.dom)], max_degree):
            projected = submodule_project(spec, g) if spec else g
            if projected:
                items.append((g.degree(), projected))
        per_factor.append(items)
    inputs = []
    for combination in product(*per_factor):
        if sum(degree for degree, _ in combination) > max_degree:
            continue
        f = MultiPoly.one()
        for _, g in combination:
            f = f * g
        inputs.append(f)
    return inputs


def residue_property_check(pair, mu, order, max_degree=3):
    """The residue vanishes on the trivial submodule and intertwines on the restricted one."""
    profile = residue_profile(pair, mu)
    i = profile.base + int(order)
    F = residue_operator(pair, mu, order, max_degree + 1)
    weights = source_weights_at(pair, profile.lam0)
    failures = []

    trivial = profile.trivial_index(i)
    for factor in pair.factors:
        spec = SubmoduleSpec(factor.dom, trivial, weights[factor.name], factor.name)
        for f in _submodule_inputs(pair, {factor.name: spec}, max_degree):
            image = apply_operator(F, f)
            if image:
                logger.warning('Residue %s does not vanish on %s', F.label, f)
                failures.append({'check': 'trivial', 'input': str(f), 'image': str(image)})

    ensure_calibrated(pair.big, *(factor.dom for factor in pair.factors))
    restricted = profile.restricted_index(i)
    specs = {factor.name: SubmoduleSpec(factor.dom, restricted, weights[factor.name], factor.name)
             for factor in pair.factors}
    checked = 0
    for X in subalgebra_basis(pair):
        for f in _submodule_inputs(pair, specs, max_degree):
            lhs = big_action(pair, X, apply_operator(F, f), profile.lam0)
            rhs = apply_operator(F, source_action(pair, X, f, weights))
            checked += 1
            if lhs != rhs:
                logger.warning('Residue %s fails to intertwine %s on %s', F.label, X.label, f)
                failures.append({'check': 'intertwine', 'element': X.label, 'input': str(f), 'defect': str(lhs - rhs)})
    return {
        'check': 'residue',
        'pair': pair.key,
        'profile': profile.to_json(),
        'order': int(order),
        'structural_order': structural_pole_order(pair, mu),
        'trivial_index': trivial,
        'restricted_index': restricted,
        'max_degree': max_degree,
        'checked': checked,
        'ok': not failures,
        'failures': failures,
    }
