"""
Renormalized Jack polynomials in power-sum coordinates.

Phi~_m^(d) is the Jack polynomial P_m with alpha = 2/d, scaled so that
sum_m Phi~_m(t) = exp(t_1 + ... + t_r). Jack polynomials come from the
Laplace-Beltrami eigen-recurrence on monomial symmetric functions; the
normalization is the triangular solve of the exponential identity.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from threading import Lock

from sympy.utilities.iterables import multiset_permutations

from .exceptions import InvalidArgument, Unsupported
from .linalg import solve_rational
from .partitions import Partition, partitions, z_factor
from .polynomials import MultiPoly, PolyMatrix

logger = logging.getLogger(__name__)


def _merge(a, b):
    return Partition(sorted(tuple(a) + tuple(b), reverse=True))


class TraceCoordinatePoly:
    """A polynomial sum_lambda c_lambda p_lambda in the power sums p_j."""

    __slots__ = ('terms',)

    def __init__(self, terms=None):
        self.terms = {Partition(k): Fraction(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def constant(cls, value):
        return cls({Partition(): value})

    @classmethod
    def power_sum(cls, j):
        return cls({Partition((j,)): 1})

    def _coerce(self, other):
        if isinstance(other, TraceCoordinatePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return TraceCoordinatePoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return TraceCoordinatePoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return TraceCoordinatePoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TraceCoordinatePoly({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, TraceCoordinatePoly):
            return NotImplemented
        terms = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                key = _merge(ka, kb)
                terms[key] = terms.get(key, 0) + ca * cb
        return TraceCoordinatePoly(terms)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    @property
    def degree(self):
        return max((k.size for k in self.terms), default=0)

    def evaluate(self, traces, truncate=None):
        """Substitute p_j -> traces[j]; traces may hold rationals or MultiPolys."""
        total = Fraction(0)
        cache = {Partition(): Fraction(1)}
        for key in sorted(self.terms, key=lambda k: (len(k), k)):
            if key not in cache:
                rest = cache.get(Partition(key[1:]))
                if rest is None:
                    rest = Fraction(1)
                    for j in key[1:]:
                        rest = _times(rest, traces[j], truncate)
                cache[key] = _times(rest, traces[key[0]], truncate)
            total = total + _times(cache[key], self.terms[key], truncate)
        return total

    def evaluate_eigenvalues(self, values):
        values = [Fraction(a) for a in values]
        traces = {j: sum((a ** j for a in values), Fraction(0)) for j in range(1, self.degree + 1)}
        return self.evaluate(traces)

    def items(self):
        return sorted(self.terms.items(), key=lambda item: (item[0].size, tuple(item[0])), reverse=True)

    def to_json(self):
        return {
            'powersum_terms': [
                {'coeff': f'{c.numerator}/{c.denominator}', 'powers': list(k)}
                for k, c in self.items()
            ]
        }

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for k, c in self.items():
            monomial = '*'.join(f'p{j}' for j in k)
            parts.append(f'{c}' if not k else f'{c}*{monomial}')
        return ' + '.join(parts)

    __repr__ = __str__


def _times(a, b, truncate=None):
    if truncate is not None and isinstance(a, MultiPoly) and isinstance(b, MultiPoly):
        return a.mul(b, truncate)
    if isinstance(b, MultiPoly) and not isinstance(a, MultiPoly):
        return b * a
    return a * b


def _diagonal_eigenvalue(kappa, alpha, n):
    padded = kappa.padded(n)
    value = alpha / 2 * sum(k * (k - 1) for k in padded)
    value += sum((n - i) * k for i, k in enumerate(padded, start=1))
    return value


def _laplace_table(alpha, n):
    """a[kappa][nu]: coefficient of m_nu in D(alpha) m_kappa, in n variables."""
    table = {}
    for kappa in partitions(n):
        row = {kappa: _diagonal_eigenvalue(kappa, alpha, n)}
        for a in multiset_permutations(list(kappa.padded(n))):
            for i in range(n):
                for j in range(i + 1, n):
                    p, q = a[i], a[j]
                    if p - q < 2:
                        continue
                    for s in range(1, p - q):
                        b = list(a)
                        b[i], b[j] = p - s, q + s
                        if all(b[t] >= b[t + 1] for t in range(n - 1)):
                            nu = Partition(b)
                            row[nu] = row.get(nu, 0) + (p - q)
        table[kappa] = row
    return table


def _jack_monomial(mu, ordered, table):
    """Coefficients of P_mu (monic) in the monomial basis."""
    coeffs = {mu: Fraction(1)}
    eigen = table[mu][mu]
    start = ordered.index(mu)
    for nu in ordered[start + 1:]:
        rhs = -sum((c * table[kappa].get(nu, 0) for kappa, c in coeffs.items()), Fraction(0))
        gap = table[nu][nu] - eigen
        if rhs == 0:
            continue
        if gap == 0:
            raise Unsupported(f'Degenerate Laplace-Beltrami spectrum at {mu}, {nu}.')
        coeffs[nu] = rhs / gap
    return coeffs


def _powersum_in_monomials(lam, kappa):
    """Coefficient of t^kappa in p_lambda."""
    parts = tuple(lam)

    @lru_cache(maxsize=None)
    def count(index, remaining):
        if index == len(parts):
            return int(not any(remaining))
        total = 0
        for pos, value in enumerate(remaining):
            if value >= parts[index]:
                total += count(index + 1, remaining[:pos] + (value - parts[index],) + remaining[pos + 1:])
        return total

    return count(0, tuple(kappa))


_TABLES = {}
_TABLE_LOCK = Lock()


def _alpha(d):
    d = Fraction(d)
    if d <= 0:
        raise Unsupported(f'Jack polynomials need a positive multiplicity, got d = {d}.')
    return 2 / d


def phi_tilde_table(d, degree):
    """{m: Phi~_m^(d)} for all partitions m of `degree`, in power sums."""
    alpha = _alpha(d)
    key = (alpha, degree)
    with _TABLE_LOCK:
        if key in _TABLES:
            return _TABLES[key]
        ordered = list(partitions(degree))
        if degree == 0:
            result = {Partition(): TraceCoordinatePoly.constant(1)}
        else:
            logger.debug('Building Jack table for alpha=%s, degree=%s', alpha, degree)
            table = _laplace_table(alpha, degree)
            jack = {mu: _jack_monomial(mu, ordered, table) for mu in ordered}
            scale = {}
            for mu in ordered:
                target = Fraction(1, mu.factorial_product())
                above = sum((scale[k] * jack[k].get(mu, 0) for k in scale), Fraction(0))
                scale[mu] = target - above
            transition = [[_powersum_in_monomials(lam, kappa) for lam in ordered] for kappa in ordered]
            columns = [[scale[mu] * jack[mu].get(kappa, 0) for kappa in ordered] for mu in ordered]
            solutions = solve_rational(transition, columns)
            result = {
                mu: TraceCoordinatePoly(dict(zip(ordered, solution)))
                for mu, solution in zip(ordered, solutions)
            }
        _TABLES[key] = result
        return result


def _multiplicity(dom_or_d):
    return Fraction(getattr(dom_or_d, 'd', dom_or_d))


def jack_phi_tilde(dom_or_d, m):
    """Phi~_m^(d) as a TraceCoordinatePoly."""
    m = Partition(m)
    rank = getattr(dom_or_d, 'r', None)
    if rank is not None and len(m) > rank:
        raise InvalidArgument(f'Partition {m} is longer than the rank {rank}.')
    return phi_tilde_table(_multiplicity(dom_or_d), m.size)[m]


def complete_homogeneous(k):
    if k < 0:
        return TraceCoordinatePoly()
    return TraceCoordinatePoly({lam: Fraction(1, z_factor(lam)) for lam in partitions(k)})


def schur_powersum(m):
    """Schur polynomial s_m through the Jacobi-Trudi determinant."""
    m = Partition(m)
    if not m:
        return TraceCoordinatePoly.constant(1)
    size = len(m)
    matrix = PolyMatrix.build(size, size, lambda i, j: complete_homogeneous(m[i] - i + j))
    return matrix.det()


def schur_closed_form(m, r):
    """Phi~_m^(2) from the determinant quotient formula in r variables."""
    m = Partition(m)
    padded = m.padded(r)
    numerator = 1
    for i in range(r):
        for j in range(i + 1, r):
            numerator *= padded[i] - padded[j] - i + j
    denominator = 1
    for i in range(r):
        denominator *= factorial(padded[i] + r - i - 1)
    return schur_powersum(m) * Fraction(numerator, denominator)


def trace_powers(matrix, count, divisor=1, step=1, truncate=None):
    """{j: Tr(A^(step*j)) / divisor for j = 1..count}."""
    traces = {}
    if count <= 0:
        return traces
    base = matrix
    for _ in range(step - 1):
        base = base.matmul(matrix, truncate)
    power = base
    for j in range(1, count + 1):
        if j > 1:
            power = power.matmul(base, truncate)
        trace = power.trace()
        traces[j] = trace * Fraction(1, divisor) if divisor != 1 else trace
    return traces


def phi_tilde_on_matrix(d, m, matrix, divisor=1, truncate=None):
    """Phi~_m^(d) at the eigenvalues of `matrix`, each counted `divisor` times."""
    m = Partition(m)
    poly = jack_phi_tilde(d, m)
    return poly.evaluate(trace_powers(matrix, m.size, divisor, truncate=truncate), truncate)


def schur_prime(m, matrix, truncate=None):
    """Phi~'_m(A) = Phi~_m^(2)(t_1^2, ..., t_r^2) for A with eigenvalues +-t_j."""
    m = Partition(m)
    poly = jack_phi_tilde(2, m)
    return poly.evaluate(trace_powers(matrix, m.size, 2, step=2, truncate=truncate), truncate)
