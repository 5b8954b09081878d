"""
The scalar-type action of g = p+ + k + p- on polynomials over a layout.

PLUS(b), KAY(a, b) = [a, theta b] and MINUS(b) act by

    PLUS(b)    s0 d_b
    KAY(a, b)  s2 lam (a|b) + s1 d_{D(a,b)x}
    MINUS(b)   c1 lam (x|b) + c2 d_{Q(x)b}

with the constants fixed once per domain by requiring the bracket relations
on test polynomials.
"""
import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import product
from threading import Lock
from typing import NamedTuple

import numpy as np
from django.conf import settings

from .domains import DomainSpec, inner_product, quad, triple_D
from .exceptions import CalibrationAmbiguous, CalibrationFailure, InvalidArgument, Uncalibrated, Unsupported
from .linalg import rank_rational
from .operators import IDENTITY, apply_operator
from .pairs import NORMAL, TENSOR, Layout, slot_derivative
from .polynomials import MultiPoly, PolyMatrix
from .scalars import Weight, parse_rational

logger = logging.getLogger(__name__)

PLUS = 'plus'
KAY = 'kay'
MINUS = 'minus'

DEFAULT_MU = Fraction(11, 3)

CANDIDATE_VALUES = (Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 2), Fraction(2), Fraction(-2))


class LieElement(NamedTuple):
    tag: str
    a: PolyMatrix
    b: PolyMatrix = None

    def label(self, dom):
        if self.tag == KAY:
            return f'K({_coords(dom, self.a)},{_coords(dom, self.b)})'
        return f'{self.tag[0].upper()}({_coords(dom, self.a)})'


def _coords(dom, point):
    return ','.join(str(a) for a in dom.coordinates(point))


@dataclass(frozen=True)
class ActionConvention:
    s0: Fraction
    s1: Fraction
    s2: Fraction
    c1: Fraction
    c2: Fraction

    def to_json(self):
        return {name: f'{value.numerator}/{value.denominator}' for name, value in asdict(self).items()}


_CONVENTIONS = {}
_LOCK = Lock()


def _layout(target):
    return target if isinstance(target, Layout) else Layout.single(target, 'x')


def convention(dom):
    try:
        return _CONVENTIONS[dom]
    except KeyError:
        raise Uncalibrated(f'No action convention has been calibrated for {dom}.')


def weight_value(weight, point=None):
    """Scalar for the weight: a rational in rational mode, a field element otherwise."""
    if isinstance(weight, Weight):
        if point is not None:
            return weight.value(point)
        return weight.offset if weight.is_constant else weight.value()
    if isinstance(weight, (int, Fraction, str)):
        return parse_rational(weight)
    return weight


def dpi_apply(target, lam, X, f, conv=None):
    """dpi_lam(X) f on a domain or a layout of it."""
    layout = _layout(target)
    dom = layout.big
    conv = conv or convention(dom)
    if X.tag == PLUS:
        return layout.derivative(X.a, f).scale(conv.s0)
    x = layout.matrix()
    if X.tag == KAY:
        character = inner_product(dom, X.a, X.b)
        result = layout.derivative(triple_D(dom, X.a, X.b, x), f).scale(conv.s1)
        if character:
            result = result + f.scale(lam).scale(character * conv.s2)
        return result
    pairing = inner_product(dom, x, X.a)
    pairing = pairing if isinstance(pairing, MultiPoly) else MultiPoly.constant(pairing)
    result = layout.derivative(quad(dom, x, X.a), f).scale(conv.c2)
    return result + (pairing * f).scale(lam).scale(conv.c1)


def bracket(dom, X, Y):
    """[X, Y] as a list of (coefficient, LieElement)."""
    if X.tag == Y.tag and X.tag in (PLUS, MINUS):
        return []
    if X.tag == PLUS and Y.tag == MINUS:
        return [(Fraction(1), LieElement(KAY, X.a, Y.a))]
    if X.tag == MINUS and Y.tag == PLUS:
        return [(Fraction(-1), LieElement(KAY, Y.a, X.a))]
    if X.tag == KAY and Y.tag == PLUS:
        return [(Fraction(-1), LieElement(PLUS, triple_D(dom, X.a, X.b, Y.a)))]
    if X.tag == PLUS and Y.tag == KAY:
        return [(Fraction(1), LieElement(PLUS, triple_D(dom, Y.a, Y.b, X.a)))]
    if X.tag == KAY and Y.tag == MINUS:
        return [(Fraction(1), LieElement(MINUS, triple_D(dom, X.b, X.a, Y.a)))]
    if X.tag == MINUS and Y.tag == KAY:
        return [(Fraction(-1), LieElement(MINUS, triple_D(dom, Y.b, Y.a, X.a)))]
    return [
        (Fraction(-1), LieElement(KAY, triple_D(dom, X.a, X.b, Y.a), Y.b)),
        (Fraction(1), LieElement(KAY, Y.a, triple_D(dom, X.b, X.a, Y.b))),
    ]


def apply_combination(target, lam, combination, f, conv=None):
    result = MultiPoly.zero()
    for coeff, element in combination:
        result = result + dpi_apply(target, lam, element, f, conv).scale(coeff)
    return result


def spanning_elements(dom):
    basis = dom.basis()
    elements = [LieElement(PLUS, e) for e in basis] + [LieElement(MINUS, e) for e in basis]
    elements += [LieElement(KAY, a, b) for a in basis for b in basis]
    return elements


def probe_monomials(groups_and_doms, degree):
    """All monomials of degree <= `degree` in the coordinates of the given (group, dom) list."""
    variables = [v for group, dom in groups_and_doms for v in dom.coords(group)]
    monomials = [MultiPoly.one()]
    frontier = [((), MultiPoly.one())]
    for _ in range(degree):
        following = []
        for start, poly in frontier:
            first = start[0] if start else 0
            for index in range(first, len(variables)):
                term = poly * MultiPoly.variable(variables[index])
                following.append(((index,), term))
                monomials.append(term)
        frontier = following
    return monomials


def bracket_defect(dom, lam, X, Y, f, conv):
    """[dpi(X), dpi(Y)] f - dpi([X, Y]) f."""
    left = dpi_apply(dom, lam, X, dpi_apply(dom, lam, Y, f, conv), conv)
    right = dpi_apply(dom, lam, Y, dpi_apply(dom, lam, X, f, conv), conv)
    return left - right - apply_combination(dom, lam, bracket(dom, X, Y), f, conv)


def _checks(dom, degree, budget, seed):
    elements = spanning_elements(dom)
    monomials = probe_monomials([('x', dom)], degree)
    if dom.n <= 3:
        for X, Y in product(elements, elements):
            for f in monomials:
                yield X, Y, f
        return
    rng = np.random.default_rng(seed)
    for _ in range(budget):
        i, j, t = (int(v) for v in rng.integers(0, [len(elements), len(elements), len(monomials)]))
        logger.debug('Calibration sample on %s: X=%s Y=%s f=%s', dom, i, j, monomials[t])
        yield elements[i], elements[j], monomials[t]


def calibrate(dom, degree=3, budget=None, seed=None, lam=None):
    """Find the unique convention satisfying the bracket relations on `dom`."""
    dom = DomainSpec.parse(dom) if isinstance(dom, str) else dom
    budget = budget or settings.JSBO_CALIBRATION_BUDGET
    seed = settings.JSBO_SEED if seed is None else seed
    lam = parse_rational(lam or settings.JSBO_DEFAULT_LAMBDA)
    with _LOCK:
        if dom in _CONVENTIONS:
            return _CONVENTIONS[dom]
        checks = list(_checks(dom, degree, budget, seed))
        found = []
        for s1, c1, c2 in product(CANDIDATE_VALUES, repeat=3):
            conv = ActionConvention(Fraction(-1), s1, Fraction(1), c1, c2)
            if all(not bracket_defect(dom, lam, X, Y, f, conv) for X, Y, f in checks):
                found.append(conv)
        if not found:
            raise CalibrationFailure(f'No convention closes the brackets on {dom}.')
        if len(found) > 1:
            raise CalibrationAmbiguous(f'{len(found)} conventions close the brackets on {dom}.')
        _CONVENTIONS[dom] = found[0]
        logger.info('Calibrated %s: %s', dom, found[0].to_json())
        return found[0]


def ensure_calibrated(*doms):
    for dom in doms:
        if dom not in _CONVENTIONS:
            calibrate(dom)


class G1Element(NamedTuple):
    """An element of g1: its action on each source factor and its image in the big algebra."""

    label: str
    parts: tuple
    image: LieElement


def _embedded(slot, element):
    b = slot.embed(element.b) if element.b is not None else None
    return LieElement(element.tag, slot.embed(element.a), b)


def subalgebra_basis(pair):
    """Spanning set PLUS(b_i), MINUS(b_i), KAY(b_i, b_j) of g1 over coordinate bases of p1+."""
    elements = []
    if pair.kind == TENSOR:
        dom = pair.big
        for element in spanning_elements(dom):
            parts = tuple((factor.name, element) for factor in pair.factors)
            elements.append(G1Element(element.label(dom), parts, element))
        return elements
    for factor in pair.factors:
        slot = pair.layout.slot(factor.name)
        for element in spanning_elements(factor.dom):
            label = f'{factor.name}:{element.label(factor.dom)}'
            elements.append(G1Element(label, ((factor.name, element),), _embedded(slot, element)))
    return elements


def subalgebra_dimensions(pair):
    """dim p1+ and the rank of the k-span of [p1+, theta p1+] acting on p+."""
    big = pair.big
    rows = []
    for element in subalgebra_basis(pair):
        if element.image.tag != KAY:
            continue
        row = []
        for e in big.basis():
            row.extend(big.coordinates(triple_D(big, element.image.a, element.image.b, e)))
        rows.append(row)
    p_plus = sum(factor.dom.n for factor in pair.factors)
    if pair.kind == TENSOR:
        p_plus = big.n
    k_span = rank_rational(rows)
    return {'p_plus': p_plus, 'k_span': k_span, 'total': 2 * p_plus + k_span}


def source_action(pair, X, f, weights):
    """sum over factors of dpi_{w_i}(X_i) f."""
    result = MultiPoly.zero()
    for name, element in X.parts:
        factor = pair.factor(name)
        layout = Layout.single(factor.dom, factor.name)
        result = result + dpi_apply(layout, weights[name], element, f, convention(factor.dom))
    return result


def big_action(pair, X, f, lam):
    return dpi_apply(pair.layout, lam, X.image, f, convention(pair.big))


def normal_target_action(pair, X, g, lam, group='v'):
    """Action of g1 on W-valued functions g(x1, v) for a normal-derivative pair."""
    big = pair.big
    conv = convention(big)
    x1_slot = pair.layout.slot(pair.source_names[0])
    x2_slot = pair.layout.slot(pair.complement[0])
    element = X.image
    if element.tag == PLUS:
        return slot_derivative(x1_slot, element.a, g).scale(conv.s0)
    x1 = x1_slot.embed(x1_slot.matrix())
    v = x2_slot.embed(x2_slot.dom.matrix(group))
    if element.tag == KAY:
        result = slot_derivative(x1_slot, triple_D(big, element.a, element.b, x1), g)
        result = result + slot_derivative(x2_slot, triple_D(big, element.a, element.b, v), g, group)
        result = result.scale(conv.s1)
        character = inner_product(big, element.a, element.b)
        if character:
            result = result + g.scale(lam).scale(character * conv.s2)
        return result
    result = slot_derivative(x1_slot, quad(big, x1, element.a), g)
    result = result + slot_derivative(x2_slot, triple_D(big, x1, element.a, v), g, group)
    pairing = inner_product(big, x1, element.a)
    pairing = pairing if isinstance(pairing, MultiPoly) else MultiPoly.constant(pairing)
    return result.scale(conv.c2) + (pairing * g).scale(lam).scale(conv.c1)


def default_point():
    """The generic rational weights used in rational mode."""
    return {'lam': parse_rational(settings.JSBO_DEFAULT_LAMBDA), 'mu': DEFAULT_MU}


def _identity_setup(F):
    dom = F.domain
    ensure_calibrated(dom)
    layout = Layout.single(dom, 'x')
    elements = [G1Element(X.label(dom), (('x', X),), X) for X in spanning_elements(dom)]
    weight = F.source_weights['x']

    def source(X, f, point):
        return dpi_apply(layout, weight_value(weight, point), X.image, f)

    def target(X, g, point):
        return dpi_apply(layout, weight_value(weight, point), X.image, g)

    return elements, [('x', dom)], source, target


def _pair_setup(pair, F):
    if F.kind == NORMAL:
        ensure_calibrated(pair.big)
        inputs = [(slot.name, slot.dom) for slot in pair.layout.slots]

        def source(X, f, point):
            return big_action(pair, X, f, weight_value(F.target_weight, point))

        def target(X, g, point):
            return normal_target_action(pair, X, g, weight_value(F.target_weight, point))

        return subalgebra_basis(pair), inputs, source, target
    ensure_calibrated(pair.big, *(factor.dom for factor in pair.factors))
    inputs = [(factor.name, factor.dom) for factor in pair.factors]

    def source(X, f, point):
        weights = {name: weight_value(w, point) for name, w in F.source_weights.items()}
        return source_action(pair, X, f, weights)

    def target(X, g, point):
        return big_action(pair, X, g, weight_value(F.target_weight, point))

    return subalgebra_basis(pair), inputs, source, target


def intertwine_check(pair, F, max_degree, point=None):
    """dpi_target(X) F f == F dpi_source(X) f over g1 and source monomials of degree <= max_degree.

    `point` maps lam (and mu) to rationals; None keeps the parameters symbolic.
    """
    if F.degree is not None and F.degree <= max_degree:
        raise InvalidArgument(f'{F.label} must be built for degree {max_degree + 1} to absorb raising elements.')
    if F.kind == TENSOR and not F.pair.big.is_tube:
        raise Unsupported(f'Intertwining of W-valued tensor operators on {F.pair.big} is not checked.')
    if F.kind == IDENTITY:
        elements, inputs, source, target = _identity_setup(F)
        key = str(F.domain)
    else:
        elements, inputs, source, target = _pair_setup(pair, F)
        key = pair.key
    monomials = probe_monomials(inputs, max_degree)
    failures = []
    checked = 0
    for X in elements:
        for f in monomials:
            image = apply_operator(F, f, point)
            lhs = target(X, image, point)
            rhs = apply_operator(F, source(X, f, point), point)
            checked += 1
            defect = lhs - rhs
            if defect:
                logger.warning('%s fails to intertwine %s on %s: %s', F.label, X.label, f, defect)
                failures.append({'element': X.label, 'input': str(f), 'defect': str(defect)})
    logger.info('Intertwining %s on %s: %s checks, %s failures', F.label, key, checked, len(failures))
    return {
        'check': 'intertwine',
        'pair': key,
        'operator': F.label,
        'mode': 'symbolic' if point is None else {name: f'{value}' for name, value in point.items()},
        'max_degree': max_degree,
        'ok': not failures,
        'checked': checked,
        'failures': failures,
    }
