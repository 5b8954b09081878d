"""
Fischer inner product, Fischer-dual differentiation, reproducing kernels K_m
and the Hua-Kostant-Schmid projection onto the components P_m(p+).
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .domains import QUADRIC, SKEW
from .exceptions import InvalidArgument, Singular
from .linalg import solve_rational
from .partitions import Partition, partitions
from .polynomials import MultiPoly, conj_tag, is_conj, mono_diff, mono_factorial
from .scalars import Weight, is_field_element, lift
from .symmetric import phi_tilde_on_matrix

logger = logging.getLogger(__name__)

KERNEL_GROUP = '_k'


def _mono_weight(dom, mono):
    weight = Fraction(1)
    for v, e in mono:
        weight *= dom.weight(v) ** e
    return weight


def fischer_norm_monomial(dom, mono):
    """<x^a, x^a>_F = a! / w^a."""
    return Fraction(mono_factorial(mono)) / _mono_weight(dom, mono)


def fischer_inner(dom, f, g):
    """Fischer pairing of two polynomials in the coordinates of `dom`."""
    a, b = f._aligned(g)
    small, large = (a, b) if len(a.terms) <= len(b.terms) else (b, a)
    total = lift(0) if a.is_symbolic else Fraction(0)
    for mono, c in small.terms.items():
        other = large.terms.get(mono)
        if other:
            weight = fischer_norm_monomial(dom, mono)
            total = total + c * other * (lift(weight) if is_field_element(c) else weight)
    return total


def fischer_apply(dom, p, g):
    """p(dbar) g: each conjugate monomial ybar^a acts as prod (w^{-1} d/dx)^a."""
    result = MultiPoly.zero()
    for mono, c in p.terms.items():
        derivative = tuple((v.conj() if is_conj(v.group) else v, e) for v, e in mono)
        term = mono_diff(g, derivative)
        if term:
            factor = 1 / _mono_weight(dom, derivative)
            result = result + term.scale(c * factor if not is_field_element(c) else c * lift(factor))
    return result


def _quadric_columns(dom, degree):
    """kappa[j][b] with K_(N-j, j) = sum_b kappa[j][b] beta_b."""
    n, d = dom.params[0], Fraction(dom.d)
    top = degree // 2
    samples = [Fraction(n + i) + Fraction(1, 3) for i in range(top + 1)]

    def rising(a, k):
        value = Fraction(1)
        for t in range(k):
            value *= a + t
        return value

    matrix = [[rising(lam, degree - j) * rising(lam - d / 2, j) for j in range(top + 1)] for lam in samples]
    columns = [
        [rising(lam, degree - b) / factorial(degree - b) * comb(degree - b, b) for lam in samples]
        for b in range(top + 1)
    ]
    solutions = solve_rational(matrix, columns)
    return [[solutions[b][j] for b in range(top + 1)] for j in range(top + 1)]


def _quadric_kernel(dom, m, xgroup, ygroup):
    m = Partition(m)
    degree = m.size
    j = m.part(2)
    if len(m) > 2:
        raise InvalidArgument(f'Partition {m} is longer than the rank 2.')
    x, ybar = dom.matrix(xgroup), dom.matrix(ygroup)
    qxy = MultiPoly.zero()
    qxx = MultiPoly.zero()
    qyy = MultiPoly.zero()
    for i in range(dom.params[0]):
        qxy = qxy + x[i, 0] * ybar[i, 0]
        qxx = qxx + x[i, 0] * x[i, 0]
        qyy = qyy + ybar[i, 0] * ybar[i, 0]
    kappa = _quadric_columns(dom, degree)
    result = MultiPoly.zero()
    for b, coefficient in enumerate(kappa[j]):
        if coefficient:
            beta = (qxy * 2) ** (degree - 2 * b) * (-(qxx * qyy)) ** b
            result = result + beta.scale(coefficient)
    return result


def repkernel_K(dom, m, xgroup='x', ygroup=None):
    """K_m(x, y), the reproducing kernel of P_m(p+), in x and the conjugate group."""
    m = Partition(m)
    ygroup = ygroup or conj_tag(xgroup)
    if len(m) > dom.r:
        return MultiPoly.zero()
    if not m:
        return MultiPoly.one()
    if dom.kind == QUADRIC:
        return _quadric_kernel(dom, m, xgroup, ygroup)
    x, ybar = dom.matrix(xgroup), dom.matrix(ygroup)
    q, s = dom.shape
    product = x.matmul(ybar.T) if q <= s else ybar.T.matmul(x)
    divisor = 2 if dom.kind == SKEW else 1
    value = phi_tilde_on_matrix(dom.d, m, product, divisor)
    return value if isinstance(value, MultiPoly) else MultiPoly.constant(value)


@lru_cache(maxsize=None)
def _kernel_table(dom, m):
    kernel = repkernel_K(dom, m, KERNEL_GROUP, conj_tag(KERNEL_GROUP))
    return kernel.split({KERNEL_GROUP})


def hks_project(dom, f, m, group='x'):
    """The P_m(p+) component of f in the variables of `group`."""
    m = Partition(m)
    if len(m) > dom.r:
        return MultiPoly.zero()
    if dom.r == 1 or not m:
        return f.homogeneous(m.size, {group})
    table = _kernel_table(dom, m)
    result = MultiPoly.zero()
    for mono, rest in f.split({group}).items():
        if sum(e for _, e in mono) != m.size:
            continue
        key = tuple((v.renamed(KERNEL_GROUP), e) for v, e in mono)
        cofactor = table.get(key)
        if cofactor is None:
            continue
        image = cofactor.rename({conj_tag(KERNEL_GROUP): group})
        result = result + rest.mul(image).scale(fischer_norm_monomial(dom, mono))
    return result


def hks_components(dom, f, group='x'):
    """{m: f_m} over the partitions that occur in f."""
    components = {}
    degrees = sorted({sum(e for v, e in mono if v.group == group) for mono in f.terms})
    for degree in degrees:
        for m in partitions(degree, dom.r):
            part = hks_project(dom, f, m, group)
            if part:
                components[m] = part
    return components


def _add(a, b):
    if is_field_element(a) or is_field_element(b):
        return lift(a) + lift(b)
    return a + b


def weighted_inner(dom, f, g, weight=None):
    """sum_m <f_m, g_m>_F / (weight)_{m,d}; weight None gives the Fischer pairing."""
    if weight is not None and not isinstance(weight, Weight):
        weight = Weight.constant(weight)
    total = Fraction(0)
    for m, part in hks_components(dom, f).items():
        pairing = fischer_inner(dom, part, g)
        if not pairing:
            continue
        if weight is None:
            total = _add(total, pairing)
            continue
        poch = weight.pochhammer(m, dom.d)
        if poch.is_zero:
            raise Singular(f'({weight})_{m} vanishes on {dom}.')
        if weight.is_constant and not is_field_element(pairing):
            total = _add(total, pairing / poch.constant)
        else:
            total = _add(total, lift(pairing) / poch.value())
    return total


def exponential_series(dom, degree, xgroup='x', ygroup=None):
    """sum_{k <= degree} (x|y)^k / k! in x and the conjugate group."""
    ygroup = ygroup or conj_tag(xgroup)
    pairing = MultiPoly.zero()
    for v in dom.coords(xgroup):
        pairing = pairing + MultiPoly.variable(v) * MultiPoly.variable(v.renamed(ygroup)) * dom.weight(v)
    total = MultiPoly.one()
    power = MultiPoly.one()
    for k in range(1, degree + 1):
        power = power * pairing
        total = total + power.scale(Fraction(1, factorial(k)))
    return total


def kernel_sum(dom, degree, xgroup='x', ygroup=None):
    total = MultiPoly.zero()
    for m in (p for k in range(degree + 1) for p in partitions(k, dom.r)):
        total = total + repkernel_K(dom, m, xgroup, ygroup)
    return total

