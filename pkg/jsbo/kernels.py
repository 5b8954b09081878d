"""
Formal expansions of h(x, y)^{-lam}, the invariant kernel K^(x; y1) of a pair
and the brute-force coefficient oracle for holographic operators.

Every series is truncated by its degree in the conjugate variables; the
budget is always passed in by the caller.
"""
import logging
from fractions import Fraction
from math import factorial

from django.conf import settings

from .domains import QUADRIC, SKEW, SYM, generic_norm_h, quad, quasi_inverse
from .exceptions import Unsupported
from .fischer import hks_components, repkernel_K
from .linalg import inverse_rational
from .partitions import Partition, partitions
from .polynomials import MultiPoly, PolyMatrix, conj_tag, substitute
from .scalars import ParamScalar, Weight, parse_rational

logger = logging.getLogger(__name__)


class ParamSeries:
    """A truncated sum of (label, ParamScalar coefficient, polynomial) terms."""

    def __init__(self, degree, groups, terms=None):
        self.degree = degree
        self.groups = frozenset(groups)
        self.terms = list(terms or [])

    def add(self, label, coeff, poly):
        if poly and not coeff.is_zero:
            self.terms.append((label, coeff, poly))

    def total(self):
        """The series as one polynomial over QQ(lam, mu)."""
        result = MultiPoly.zero()
        for _, coeff, poly in self.terms:
            result = result + poly.scale(coeff.value())
        return result

    def at(self, point):
        """The series with parameters specialised to rationals."""
        result = MultiPoly.zero()
        for _, coeff, poly in self.terms:
            result = result + poly.scale(coeff.value(point))
        return result

    def labels(self):
        return [label for label, _, _ in self.terms]

    def to_json(self):
        return {
            'degree': self.degree,
            'groups': sorted(self.groups),
            'terms': [
                {'label': str(label), 'coeff': coeff.to_json(), 'poly': poly.to_json()}
                for label, coeff, poly in self.terms
            ],
        }


def power_coefficient(weight, j):
    """Coefficient (-1)^j (w)_j / j! of u^j in (1 + u)^{-w}."""
    return weight.pochhammer(Partition((j,)), 1) * Fraction((-1) ** j, factorial(j))


def h_power_series(h, weight, degree, groups):
    """(h)^{-w} = sum_j (-1)^j (w)_j/j! (h - 1)^j, truncated at `degree` in `groups`."""
    groups = frozenset(groups)
    truncate = (groups, degree)
    u = h - 1
    series = ParamSeries(degree, groups)
    power = MultiPoly.one()
    for j in range(degree + 1):
        if j:
            power = power.mul(u, truncate)
        if not power:
            break
        series.add(j, power_coefficient(weight, j), power)
    return series


def expand_h_power(dom, degree, weight=None):
    """Direct and structured expansions of h(x, y)^{-lam} on one domain.

    The direct series is the binomial expansion of (1 + u)^{-lam} with
    u = h - 1; the structured one is sum_m (lam)_{m,d} K_m(x, y). Both are
    truncated at `degree` in the conjugate variables and must agree.
    """
    weight = weight or Weight.param('lam')
    x, ybar = dom.matrix('x'), dom.matrix('x~')
    h = generic_norm_h(dom, x, ybar)
    direct = h_power_series(h, weight, degree, {'x~'})
    structured = ParamSeries(degree, {'x~'})
    for size in range(degree + 1):
        for m in partitions(size, dom.r):
            structured.add(m, weight.pochhammer(m, dom.d), repkernel_K(dom, m, 'x', 'x~'))
    logger.debug('Expanded h^(-%s) on %s to degree %s', weight, dom, degree)
    return direct, structured


def _require_holographic(pair):
    if pair.kind != 'holographic':
        raise Unsupported(f'{pair.key} has no invariant kernel of holographic type.')


def _pullback(pair, K, point, truncate):
    """K evaluated at the complement part of a big matrix."""
    mapping = {}
    for name in pair.complement:
        slot = pair.layout.slot(name)
        block = slot.extract(point)
        for v in slot.coords():
            entry = block[v.row - 1, v.col - 1]
            mapping[v] = entry if isinstance(entry, MultiPoly) else MultiPoly.constant(entry)
    return substitute(K, mapping, truncate)


def build_hat_kernel(pair, degree, K=None, weight=None):
    """K^(x; y1) = h(x, y1)^{-lam} K(Proj2(x^{y1})), truncated in conj y1."""
    _require_holographic(pair)
    K = pair.prefactor if K is None else K
    weight = weight or pair.target_weight
    big, layout = pair.big, pair.layout
    groups = frozenset(pair.source_groups(conj=True))
    truncate = (groups, degree)
    x = layout.matrix()
    ybar = layout.matrix(conj=True, names=pair.source_names)
    h = generic_norm_h(big, x, ybar)
    series = h_power_series(h, weight, degree, groups)
    pulled = _pullback(pair, K, quasi_inverse(big, x, ybar, degree, groups=groups), truncate)
    result = ParamSeries(degree, groups)
    for label, coeff, poly in series.terms:
        result.add(label, coeff, poly.mul(pulled, truncate))
    return result


def _project_sources(pair, G, point=None):
    """sum over source HKS components of G_m / (weight)_{m,d}, factor by factor."""
    parts = [(G, ParamScalar.one())]
    for factor in pair.factors:
        group = conj_tag(factor.name)
        following = []
        for poly, scalar in parts:
            for m, component in hks_components(factor.dom, poly, group).items():
                poch = factor.weight.pochhammer(m, factor.dom.d)
                following.append((component, scalar * poch))
        parts = following
    result = MultiPoly.zero()
    for poly, scalar in parts:
        inverse = scalar.inverse()
        result = result + poly.scale(inverse.value(point) if point else inverse.value())
    return result


def coefficient_oracle(pair, degree, K=None, point=None):
    """F(x2; w1) from the defining pairing, through conjugate degree `degree`.

    G(x2; y1) = h(x2, y1)^{-lam} K((x2)^{Q(y1)x2}) is expanded in conj y1 and
    projected onto the source HKS components, each divided by its Pochhammer
    symbol. With `point` the parameters are specialised to rationals.
    """
    _require_holographic(pair)
    K = pair.prefactor if K is None else K
    big, layout = pair.big, pair.layout
    groups = frozenset(pair.source_groups(conj=True))
    truncate = (groups, degree)
    x2 = layout.matrix(names=pair.complement)
    ybar = layout.matrix(conj=True, names=pair.source_names)
    h = generic_norm_h(big, x2, ybar)
    series = h_power_series(h, pair.target_weight, degree, groups)
    twisted = quad(big, ybar, x2)
    pulled = _pullback(pair, K, quasi_inverse(big, x2, twisted, degree, groups=groups), truncate)
    G = MultiPoly.zero()
    for _, coeff, poly in series.terms:
        value = coeff.value(point) if point else coeff.value()
        G = G + poly.mul(pulled, truncate).scale(value)
    logger.debug('Oracle for %s through degree %s: %s terms', pair.key, degree, len(G))
    return _project_sources(pair, G, point)


def closed_form_symbol(pair, degree, point=None):
    """sum_m K(x2) S_m(x2; D1) / (w)_{m,d} through conjugate degree `degree`."""
    _require_holographic(pair)
    groups = pair.source_groups(conj=True)
    total = MultiPoly.zero()
    for m in pair.symbol_partitions(degree):
        coeff = pair.symbol_coefficient(m)
        value = coeff.value(point) if point else coeff.value()
        total = total + pair.prefactor.mul(pair.symbol(m)).scale(value)
    return total.truncate(degree, groups)


def oracle_agreement(pair, degree, point=None):
    """Report comparing the oracle with the closed-form symbol."""
    oracle = coefficient_oracle(pair, degree, point=point)
    closed = closed_form_symbol(pair, degree, point)
    difference = oracle - closed
    ok = not difference
    if not ok:
        logger.warning('Oracle disagreement for %s: %s', pair.key, difference)
    return {
        'check': 'oracle',
        'pair': pair.key,
        'sizes': list(pair.sizes),
        'k': pair.k,
        'l': pair.l,
        'degree': degree,
        'ok': ok,
        'failures': [] if ok else [str(difference)],
    }


_ROTATION = ((Fraction(3, 5), Fraction(-4, 5)), (Fraction(4, 5), Fraction(3, 5)))


def _transform(pair, A, B, matrix):
    out = A.matmul(matrix)
    if pair.big.kind == QUADRIC:
        return out
    return out.matmul(B.T)


def _preserves_slots(pair, A, B):
    for slot in pair.layout.slots:
        for e in slot.dom.basis():
            image = _transform(pair, A, B, slot.embed(e))
            for other in pair.layout.slots:
                if other.name != slot.name and any(other.extract(image).entries()):
                    return False
    return True


def _candidates(pair):
    big = pair.big
    rows, cols = big.shape
    candidates = []

    def elementary(n):
        mats = []
        for i in range(n):
            mats.append((f'diag{i + 1}', PolyMatrix.build(n, n, lambda a, b: Fraction(2 if a == b == i else int(a == b)))))
        for i in range(n):
            for j in range(n):
                if i != j:
                    mats.append((f'shear{i + 1}{j + 1}', PolyMatrix.build(
                        n, n, lambda a, b: Fraction(int(a == b) + int(a == i and b == j)))))
        return mats

    if big.kind == QUADRIC:
        for i in range(rows):
            for j in range(i + 1, rows):
                def rotation(a, b, i=i, j=j):
                    index = {i: 0, j: 1}
                    if a in index and b in index:
                        return _ROTATION[index[a]][index[b]]
                    return Fraction(int(a == b))
                candidates.append((f'rot{i + 1}{j + 1}', PolyMatrix.build(rows, rows, rotation), None))
        candidates.append(('scale', PolyMatrix.identity(rows).scale(2), None))
        return candidates
    candidates.append(('scale', PolyMatrix.identity(rows).scale(2), PolyMatrix.identity(cols)))
    for label, A in elementary(rows):
        if big.kind in (SYM, SKEW) or rows == cols:
            candidates.append((f'{label}-both', A, A))
        if big.kind not in (SYM, SKEW):
            candidates.append((f'{label}-left', A, PolyMatrix.identity(cols)))
    if big.kind not in (SYM, SKEW):
        for label, B in elementary(cols):
            candidates.append((f'{label}-right', PolyMatrix.identity(rows), B))
    return candidates


def k1_generators(pair):
    """Linear elements (label, A, B) of K1 acting by x -> A x B^T, filtered by slot preservation."""
    return [(label, A, B) for label, A, B in _candidates(pair) if _preserves_slots(pair, A, B)]


def _inverse_transpose(A):
    return PolyMatrix(inverse_rational([list(row) for row in A.rows])).T


def _substitution(pair, A, B):
    """Variable images of x -> A x B^T and ybar -> A^{-T} ybar B^{-1}."""
    layout = pair.layout
    mapping = {}
    image = _transform(pair, A, B, layout.matrix())
    for slot in layout.slots:
        block = slot.extract(image)
        for v in slot.coords():
            mapping[v] = block[v.row - 1, v.col - 1]
    Ainv = _inverse_transpose(A)
    Binv = _inverse_transpose(B) if B is not None else None
    dual = _transform(pair, Ainv, Binv, layout.matrix(conj=True, names=pair.source_names))
    for name in pair.source_names:
        slot = layout.slot(name)
        block = slot.extract(dual)
        for v in slot.coords(conj=True):
            mapping[v] = block[v.row - 1, v.col - 1]
    return {v: (p if isinstance(p, MultiPoly) else MultiPoly.constant(p)) for v, p in mapping.items()}


def _multiplier(before, after):
    if not before:
        return Fraction(1) if not after else None
    mono, c = next(iter(before.terms.items()))
    ratio = after.coefficient(mono) / c
    return ratio if after == before.scale(ratio) else None


def check_hat_kernel_equivariance(pair, degree, point=None):
    """K^(kx; k^{*-1}y1) = chi(k) K^(x; y1) for linear generators k of K1."""
    _require_holographic(pair)
    point = point or {'lam': parse_rational(settings.JSBO_DEFAULT_LAMBDA)}
    kernel = build_hat_kernel(pair, degree).at(point)
    failures = []
    generators = k1_generators(pair)
    for label, A, B in generators:
        mapping = _substitution(pair, A, B)
        chi = _multiplier(pair.prefactor, substitute(pair.prefactor, mapping))
        if chi is None:
            failures.append({'generator': label, 'reason': 'K is not semi-invariant'})
            continue
        moved = substitute(kernel, mapping)
        if moved != kernel.scale(chi):
            logger.warning('Hat kernel of %s fails equivariance under %s', pair.key, label)
            failures.append({'generator': label, 'reason': 'kernel not equivariant'})
    return {
        'check': 'equivariance',
        'pair': pair.key,
        'degree': degree,
        'generators': [label for label, _, _ in generators],
        'ok': not failures,
        'failures': failures,
    }


def generic_norm_square_check(pair):
    """h(Q(x12)(y11+y22), y11+y22) = h22(Q(x12)y11, y22)^2 on a diagonal block splitting."""
    if pair.key not in ('sp-spsp', 'sost-sostsost'):
        raise Unsupported(f'{pair.key} is not a diagonal block splitting.')
    big, layout = pair.big, pair.layout
    x12 = layout.matrix(names=('x12',))
    y11 = layout.matrix(conj=True, names=('x11',))
    ybar = layout.matrix(conj=True, names=('x11', 'x22'))
    lhs = generic_norm_h(big, quad(big, x12, ybar), ybar)
    inner = layout.slot('x22')
    h22 = generic_norm_h(inner.dom, inner.extract(quad(big, x12, y11)), inner.matrix(conj=True))
    return lhs == h22 * h22


