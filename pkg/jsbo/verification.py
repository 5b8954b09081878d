"""
Verification suites: Jordan identities at seeded rational points, kernel
expansions, symmetric-function identities and the rank-one tensor formula.

Every suite returns a report dict with 'check', 'ok' and 'failures'; cases are
fanned out over a thread pool and reported in the order they were given.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import comb, factorial

import numpy as np
from django.conf import settings

from .domains import (
    DomainSpec, bergman_B, generic_norm_h, jordan_determinant, quad, quasi_inverse,
)
from .exceptions import Singular, Unsupported
from .fischer import exponential_series, kernel_sum, repkernel_K
from .kernels import expand_h_power, generic_norm_square_check
from .linalg import inverse_rational
from .operators import rc_tensor
from .pairs import splittings
from .partitions import Partition, partitions
from .polynomials import MultiPoly, PolyMatrix
from .scalars import Weight
from .symmetric import TraceCoordinatePoly, jack_phi_tilde, phi_tilde_on_matrix, phi_tilde_table, schur_closed_form

logger = logging.getLogger(__name__)

JORDAN_IDENTITIES = (
    'det_bergman', 'bergman_left', 'bergman_right', 'quasiinv_add', 'quasiinv_twice',
    'projlemma', 'projprop', 'bergman_decomp', 'generic_norm_square',
)

_ATTEMPTS = 50


def _report(check, failures, **extra):
    report = {'check': check}
    report.update(extra)
    report['ok'] = not failures
    report['failures'] = failures
    return report


class PointSampler:
    """Small rational points from a seeded numpy generator."""

    def __init__(self, seed):
        self.seed = seed
        self.rng = np.random.default_rng(seed)

    def values(self, count):
        numerators = self.rng.integers(-2, 3, size=count)
        denominators = self.rng.integers(3, 7, size=count)
        return [Fraction(int(a), int(b)) for a, b in zip(numerators, denominators)]

    def point(self, dom):
        return dom.point(self.values(dom.n))


def _apply(dom, matrix, point):
    """Apply an n x n coordinate matrix to a point."""
    coords = dom.coordinates(point)
    image = [sum((row[j] * coords[j] for j in range(len(coords))), Fraction(0)) for row in matrix]
    return dom.fill({(v.row, v.col): a for v, a in zip(dom.coords(), image)})


def _inverse(matrix):
    return inverse_rational([[a.constant_term() if isinstance(a, MultiPoly) else a for a in row] for row in matrix.rows])


def _h(dom, x, y):
    return generic_norm_h(dom, x, y).constant_term()


def _jordan_point(dom, x, y, z):
    """{identity: holds} for the single-domain identities at (x, y, z)."""
    B = bergman_B
    xy = quasi_inverse(dom, x, y)
    yx = quasi_inverse(dom, y, x)
    results = {
        'det_bergman': jordan_determinant(dom, x, y) == _h(dom, x, y) ** dom.p,
        'bergman_left': B(dom, x, y).matmul(B(dom, xy, z)) == B(dom, x, y + z),
        'bergman_right': B(dom, z, xy).matmul(B(dom, y, x)) == B(dom, y + z, x),
        'quasiinv_add': quasi_inverse(dom, x, y + z) == quasi_inverse(dom, xy, z),
    }
    twisted = _apply(dom, _inverse(B(dom, x, y)), quasi_inverse(dom, z, yx))
    results['quasiinv_twice'] = quasi_inverse(dom, x + z, y) == xy + twisted
    qxy, qyx = quad(dom, x, y), quad(dom, y, x)
    product = B(dom, -x, y).matmul(B(dom, x, y))
    split = quasi_inverse(dom, qxy, y) + quasi_inverse(dom, x, qyx)
    results['projlemma'] = product == B(dom, qxy, y) and product == B(dom, x, qyx) and xy == split
    return results


def _pair_point(pair, sampler):
    """{identity: holds} for the splitting identities of one pair."""
    big, layout = pair.big, pair.layout
    x2 = layout.assemble({name: sampler.point(layout.slot(name).dom) for name in pair.complement})
    y1 = layout.assemble({name: sampler.point(layout.slot(name).dom) for name in pair.source_names})
    twisted = quad(big, y1, x2)
    projected = layout.assemble(layout.split(quasi_inverse(big, x2, y1), pair.complement))
    results = {
        'projprop': projected == quasi_inverse(big, x2, twisted)
        and _h(big, x2, y1) ** 2 == _h(big, x2, twisted),
    }
    if pair.orthogonal:
        xs = {name: layout.assemble({name: sampler.point(layout.slot(name).dom)}) for name in pair.orthogonal}
        ys = {name: layout.assemble({name: sampler.point(layout.slot(name).dom)}) for name in pair.orthogonal}
        x = sum((xs[name] for name in pair.orthogonal[1:]), xs[pair.orthogonal[0]])
        y = sum((ys[name] for name in pair.orthogonal[1:]), ys[pair.orthogonal[0]])
        product = PolyMatrix.identity(big.n)
        for name in pair.orthogonal:
            product = product.matmul(bergman_B(big, xs[name], ys[name]))
        results['bergman_decomp'] = bergman_B(big, x, y) == product
    return results


def _sampled(fn, sampler, label):
    for _ in range(_ATTEMPTS):
        try:
            return fn()
        except Singular:
            logger.debug('Singular sample for %s, resampling', label)
    raise Singular(f'No regular sample for {label} after {_ATTEMPTS} attempts.')


def jordan_suite(dom, seed=None, points=100):
    """Jordan triple identities at seeded rational points, plus the splittings of `dom`."""
    dom = DomainSpec.parse(dom) if isinstance(dom, str) else dom
    seed = settings.JSBO_SEED if seed is None else seed
    sampler = PointSampler(seed)
    counts = {name: 0 for name in JORDAN_IDENTITIES}
    failures = []

    if dom.n <= 4:
        x, ybar = dom.matrix('x'), dom.matrix('x~')
        counts['det_bergman'] += 1
        if jordan_determinant(dom, x, ybar) != generic_norm_h(dom, x, ybar) ** dom.p:
            failures.append({'identity': 'det_bergman', 'point': 'symbolic'})

    def one_point():
        x, y, z = sampler.point(dom), sampler.point(dom), sampler.point(dom)
        return (x, y, z), _jordan_point(dom, x, y, z)

    for index in range(points):
        (x, y, z), results = _sampled(one_point, sampler, str(dom))
        logger.debug('Jordan point %s on %s: x=%s y=%s z=%s', index, dom, x, y, z)
        for name, holds in results.items():
            if name == 'det_bergman' and dom.n <= 4:
                continue
            counts[name] += 1
            if not holds:
                logger.warning('Identity %s fails on %s at x=%s y=%s z=%s', name, dom, x, y, z)
                failures.append({'identity': name, 'point': [str(x), str(y), str(z)]})

    pairs = splittings(dom)
    for pair in pairs:
        label = f'{pair.key}{list(pair.sizes)}'
        for index in range(points):
            results = _sampled(lambda: _pair_point(pair, sampler), sampler, label)
            for name, holds in results.items():
                counts[name] += 1
                if not holds:
                    logger.warning('Identity %s fails for %s', name, label)
                    failures.append({'identity': name, 'pair': label, 'sample': index})
        if pair.key in ('sp-spsp', 'sost-sostsost'):
            counts['generic_norm_square'] += 1
            if not generic_norm_square_check(pair):
                failures.append({'identity': 'generic_norm_square', 'pair': label})

    logger.info('Jordan suite on %s (seed %s): %s failures', dom, seed, len(failures))
    return _report('jordan', failures, domain=str(dom), seed=seed, points=points,
                   counts={name: count for name, count in counts.items() if count})


def expansion_suite(dom, degree=6):
    """h^{-lam} direct against structured, sum K_m = exp((x|y)), and K_m(x, e) = Phi~_m(x)."""
    dom = DomainSpec.parse(dom) if isinstance(dom, str) else dom
    failures = []
    direct, structured = expand_h_power(dom, degree)
    if direct.total() != structured.total():
        failures.append({'identity': 'h_expansion', 'difference': str(direct.total() - structured.total())})
    if kernel_sum(dom, degree) != exponential_series(dom, degree):
        failures.append({'identity': 'exponential'})
    if dom.kind == 'sym' or (dom.kind == 'mat' and dom.is_tube):
        unit = dom.unit()
        values = {v.conj(): unit[v.row - 1, v.col - 1] for v in dom.coords('x')}
        for size in range(degree + 1):
            for m in partitions(size, dom.r):
                kernel = repkernel_K(dom, m, 'x', 'x~').evaluate(values)
                if kernel != phi_tilde_on_matrix(dom.d, m, dom.matrix('x')):
                    failures.append({'identity': 'kernel_at_unit', 'm': str(m)})
    for failure in failures:
        logger.warning('Expansion identity %s fails on %s', failure['identity'], dom)
    logger.info('Expansion suite on %s to degree %s: %s failures', dom, degree, len(failures))
    return _report('expansion', failures, domain=str(dom), degree=degree)


def symmetric_suite(max_degree=5, max_rank=3, exponential_degree=6):
    """Schur closed form and stability in r to `max_degree`; sum Phi~_m = exp(p_1) to `exponential_degree`."""
    failures = []
    samples = [Fraction(1, 2), Fraction(-2, 3), Fraction(3, 5), Fraction(1, 7)]
    for size in range(max_degree + 1):
        for m in partitions(size, max_rank):
            for r in range(len(m), max_rank + 1):
                if r and jack_phi_tilde(2, m) != schur_closed_form(m, r):
                    failures.append({'identity': 'schur', 'm': str(m), 'r': r})
            for d in (1, 2, 4):
                poly = jack_phi_tilde(d, m)
                for r in range(max(len(m), 1), max_rank + 1):
                    values = samples[:r - 1]
                    reduced = poly.evaluate_eigenvalues(values) if len(m) <= r - 1 else Fraction(0)
                    if poly.evaluate_eigenvalues(values + [Fraction(0)]) != reduced:
                        failures.append({'identity': 'stability', 'm': str(m), 'd': d, 'r': r})
    for size in range(exponential_degree + 1):
        for d in (1, 2, 4):
            total = sum(phi_tilde_table(d, size).values(), TraceCoordinatePoly())
            if total != TraceCoordinatePoly({Partition((1,) * size): Fraction(1, factorial(size))}):
                failures.append({'identity': 'exponential', 'degree': size, 'd': d})
    for failure in failures:
        logger.warning('Symmetric identity %s fails: %s', failure['identity'], failure)
    return _report('symmetric', failures, max_degree=max_degree, max_rank=max_rank,
                   exponential_degree=exponential_degree)


def tensor_formula_check(dom, k):
    """Rank-one coefficients against (-k)_m / (m! (lam)_{k-m} (mu)_m)."""
    dom = DomainSpec.parse(dom) if isinstance(dom, str) else dom
    if dom.r != 1 or not dom.is_tube or dom.n != 1:
        raise Unsupported(f'The closed rank-one formula needs a one-dimensional tube domain, got {dom}.')
    F = rc_tensor(dom, k)
    lam, mu = Weight.param('lam'), Weight.param('mu')
    failures = []
    found = set()
    for term in F.terms:
        m = sum(e for v, e in term.diff if v.group == 'xR')
        found.add(m)
        expected = (lam.pochhammer(Partition((k - m,)), 1) * mu.pochhammer(Partition((m,)), 1)).inverse()
        expected = expected * Fraction((-1) ** m * comb(k, m))
        if term.coeff.value() != expected.value():
            failures.append({'m': m, 'coeff': str(term.coeff), 'expected': str(expected)})
    if found != set(range(k + 1)):
        failures.append({'missing': sorted(set(range(k + 1)) - found)})
    return _report('tensor_formula', failures, domain=str(dom), k=k)


def run_cases(cases):
    """Run (fn, kwargs) cases on at most JSBO_THREADS threads; reports keep the input order."""
    with ThreadPoolExecutor(max_workers=settings.JSBO_THREADS) as executor:
        futures = [executor.submit(fn, **kwargs) for fn, kwargs in cases]
        reports = [future.result() for future in futures]
    logger.info('Ran %s cases, %s failed', len(reports), sum(1 for r in reports if not r['ok']))
    return reports
