"""
The four classical Jordan triple systems and their structure maps.

A point of p+ is a PolyMatrix in the kind's shape (square symmetric, free
rectangular, square skew, or an n x 1 column for the quadric). A conjugate
argument y always enters through its conjugate matrix ybar, the matrix of the
symbols of the conjugate group; for real rational points ybar is y itself.
Entries may be rationals or MultiPolys, so every map works both on concrete
points and on symbolic ones.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exceptions import InvalidArgument, ShapeMismatch, Singular, SqrtFailure, Unsupported
from .linalg import det_rational, solve_rational
from .polynomials import MultiPoly, PolyMatrix, Var, conj_tag, substitute

logger = logging.getLogger(__name__)

SYM = 'sym'
MAT = 'mat'
SKEW = 'skew'
QUADRIC = 'quadric'

KIND_CHOICES = [
    (SYM, 'Symmetric matrices'),
    (MAT, 'Rectangular matrices'),
    (SKEW, 'Skew-symmetric matrices'),
    (QUADRIC, 'Lie ball'),
]


@dataclass(frozen=True)
class DomainSpec:
    """A classical Jordan triple system with its structure constants."""

    kind: str
    params: tuple

    def __post_init__(self):
        if self.kind not in dict(KIND_CHOICES):
            raise InvalidArgument(f'Unknown domain kind {self.kind!r}.')
        expected = 2 if self.kind == MAT else 1
        if len(self.params) != expected or any(int(p) < 1 for p in self.params):
            raise InvalidArgument(f'Invalid sizes {self.params} for kind {self.kind}.')
        if self.kind == SKEW and self.params[0] < 2:
            raise InvalidArgument('Skew-symmetric domains need size at least 2.')

    @classmethod
    def sym(cls, r):
        return cls(SYM, (int(r),))

    @classmethod
    def mat(cls, q, s):
        return cls(MAT, (int(q), int(s)))

    @classmethod
    def skew(cls, s):
        return cls(SKEW, (int(s),))

    @classmethod
    def quadric(cls, n):
        return cls(QUADRIC, (int(n),))

    @classmethod
    def parse(cls, text):
        """Parse descriptors such as 'sym:2', 'mat:2x3', 'skew:4', 'quadric:3'."""
        try:
            kind, _, sizes = str(text).strip().lower().partition(':')
            params = tuple(int(p) for p in sizes.split('x'))
        except ValueError:
            raise InvalidArgument(f'Cannot parse domain descriptor {text!r}.')
        return cls(kind, params).standalone()

    def standalone(self):
        """Self, if it is a domain in its own right; quadrics of dimension 1 and 2 only occur as blocks."""
        if self.kind == QUADRIC and self.params[0] < 3:
            raise InvalidArgument(f'{self} is not a domain on its own; quadric domains need n >= 3.')
        return self

    def __str__(self):
        return f'{self.kind}:' + 'x'.join(str(p) for p in self.params)

    @property
    def shape(self):
        if self.kind == MAT:
            return self.params
        if self.kind == QUADRIC:
            return (self.params[0], 1)
        return (self.params[0], self.params[0])

    @property
    def r(self):
        if self.kind == SYM:
            return self.params[0]
        if self.kind == MAT:
            return min(self.params)
        if self.kind == SKEW:
            return self.params[0] // 2
        return 2

    @property
    def d(self):
        return {SYM: 1, MAT: 2, SKEW: 4}.get(self.kind, self.params[0] - 2)

    @property
    def b(self):
        if self.kind == MAT:
            return abs(self.params[1] - self.params[0])
        if self.kind == SKEW:
            return 2 if self.params[0] % 2 else 0
        return 0

    @property
    def n(self):
        return len(self.coords())

    @property
    def p(self):
        if self.kind == SYM:
            return self.params[0] + 1
        if self.kind == MAT:
            return sum(self.params)
        if self.kind == SKEW:
            return 2 * (self.params[0] - 1)
        return self.params[0]

    @property
    def epsilon(self):
        return 2 if self.kind == SKEW else 1

    @property
    def is_tube(self):
        if self.kind == MAT:
            return self.params[0] == self.params[1]
        if self.kind == SKEW:
            return self.params[0] % 2 == 0
        return True

    def coords(self, group='x'):
        """Independent coordinates of the kind, in canonical order."""
        rows, cols = self.shape
        if self.kind == SYM:
            return [Var(group, i, j) for i in range(1, rows + 1) for j in range(i, cols + 1)]
        if self.kind == SKEW:
            return [Var(group, i, j) for i in range(1, rows + 1) for j in range(i + 1, cols + 1)]
        return [Var(group, i, j) for i in range(1, rows + 1) for j in range(1, cols + 1)]

    def weight(self, var):
        """Fischer weight w with (x|y) = sum w x ybar over coordinates."""
        if self.kind == SYM:
            return Fraction(1 if var.row == var.col else 2)
        if self.kind == QUADRIC:
            return Fraction(2)
        return Fraction(1)

    def weights(self, group='x'):
        return {v: self.weight(v) for v in self.coords(group)}

    def fill(self, values):
        """Matrix of the kind from a map (row, col) -> entry on canonical coordinates."""
        rows, cols = self.shape
        out = [[Fraction(0)] * cols for _ in range(rows)]
        for (i, j), value in values.items():
            out[i - 1][j - 1] = value
            if self.kind == SYM:
                out[j - 1][i - 1] = value
            elif self.kind == SKEW:
                out[j - 1][i - 1] = -value
        return PolyMatrix(out)

    def matrix(self, group='x'):
        """The matrix of formal coordinates of a variable group."""
        return self.fill({(v.row, v.col): MultiPoly.variable(v) for v in self.coords(group)})

    def point(self, values):
        """A concrete point from its coordinate list."""
        coords = self.coords()
        if len(values) != len(coords):
            raise ShapeMismatch(f'{self} has {len(coords)} coordinates, got {len(values)}.')
        return self.fill({(v.row, v.col): Fraction(a) for v, a in zip(coords, values)})

    def coordinates(self, matrix):
        if matrix.shape != self.shape:
            raise ShapeMismatch(f'Expected shape {self.shape}, got {matrix.shape}.')
        return [matrix[v.row - 1, v.col - 1] for v in self.coords()]

    def basis(self):
        """Basis points E_beta dual to the canonical coordinates."""
        return [self.fill({(v.row, v.col): Fraction(1)}) for v in self.coords()]

    def zero(self):
        rows, cols = self.shape
        return PolyMatrix.zeros(rows, cols)

    def frame(self):
        """Tripotents e_1, ..., e_r as concrete points."""
        if self.kind == QUADRIC:
            raise Unsupported('The quadric frame is complex and only used through the diagonal rule.')
        if self.kind == SKEW:
            return [self.fill({(2 * j - 1, 2 * j): Fraction(1)}) for j in range(1, self.r + 1)]
        return [self.fill({(j, j): Fraction(1)}) for j in range(1, self.r + 1)]

    def unit(self):
        total = self.zero()
        for e in self.frame():
            total = total + e
        return total

    def to_json(self):
        return {'kind': self.kind, 'params': list(self.params)}

    def describe(self):
        return {
            'domain': str(self),
            'kind': self.kind,
            'params': list(self.params),
            'r': self.r,
            'n': self.n,
            'd': self.d,
            'b': self.b,
            'p': self.p,
            'epsilon': self.epsilon,
            'tube': self.is_tube,
        }


def _check(dom, *matrices):
    for matrix in matrices:
        if matrix.shape != dom.shape:
            raise ShapeMismatch(f'{dom} expects shape {dom.shape}, got {matrix.shape}.')


def _column_q(a, b):
    total = Fraction(0)
    for i in range(a.shape[0]):
        if a[i, 0] and b[i, 0]:
            total = total + a[i, 0] * b[i, 0]
    return total


def quad(dom, a, w):
    """Q(a)w with w given in conjugate form."""
    if dom.kind == QUADRIC:
        return a.scale(2 * _column_q(a, w)) - w.scale(_column_q(a, a))
    return a.matmul(w.T).matmul(a)


def quad_polar(dom, a, c, w):
    """Q(a, c)w = Q(a + c)w - Q(a)w - Q(c)w."""
    if dom.kind == QUADRIC:
        return c.scale(2 * _column_q(a, w)) + a.scale(2 * _column_q(c, w)) - w.scale(2 * _column_q(a, c))
    return a.matmul(w.T).matmul(c) + c.matmul(w.T).matmul(a)


def quadratic_Q(dom, x, ybar):
    _check(dom, x, ybar)
    return quad(dom, x, ybar)


def triple_D(dom, x, ybar, z):
    """D(x, y)z = Q(x, z)y."""
    _check(dom, x, ybar, z)
    return quad_polar(dom, x, z, ybar)


def bergman_apply(dom, x, ybar, z):
    """B(x, y)z = z - D(x, y)z + Q(x)Q(y)z."""
    _check(dom, x, ybar, z)
    return z - quad_polar(dom, x, z, ybar) + quad(dom, x, quad(dom, ybar, z))


def bergman_B(dom, x, ybar):
    """B(x, y) as an n x n matrix over the canonical coordinates."""
    columns = [dom.coordinates(bergman_apply(dom, x, ybar, e)) for e in dom.basis()]
    n = len(columns)
    return PolyMatrix([[columns[j][i] for j in range(n)] for i in range(n)])


def inner_product(dom, x, ybar):
    """(x|y) normalized so that (e_1|e_1) = 1."""
    _check(dom, x, ybar)
    total = Fraction(0)
    for v in dom.coords():
        a, b = x[v.row - 1, v.col - 1], ybar[v.row - 1, v.col - 1]
        if a and b:
            total = total + a * b * dom.weight(v)
    return total


def _groups(matrix):
    found = set()
    for entry in matrix.entries():
        if isinstance(entry, MultiPoly):
            found.update(entry.groups())
    return found


def is_concrete(matrix):
    return not any(isinstance(a, MultiPoly) and not a.is_constant for a in matrix.entries())


def _as_rational(value):
    if isinstance(value, MultiPoly):
        return value.constant_term()
    return Fraction(value)


def quasi_inverse(dom, x, ybar, degree=None, groups=None):
    """x^y = B(x, y)^{-1}(x - Q(x)y).

    Concrete arguments give an exact rational point. Symbolic ones need a
    truncation `degree` in the variables of ybar (or of `groups` when ybar
    mixes in other variables) and give the formal series.
    """
    _check(dom, x, ybar)
    if is_concrete(x) and is_concrete(ybar):
        x = x.map(_as_rational)
        ybar = ybar.map(_as_rational)
        bergman = bergman_B(dom, x, ybar)
        rhs = dom.coordinates(x - quad(dom, x, ybar))
        try:
            values = solve_rational([[_as_rational(a) for a in row] for row in bergman.rows], rhs)
        except Singular:
            raise Singular(f'B(x, y) is singular on {dom}.')
        return dom.fill({(v.row, v.col): a for v, a in zip(dom.coords(), values)})
    if degree is None:
        raise InvalidArgument('A truncation degree is needed for symbolic quasi-inverses.')
    truncate = (frozenset(groups or _groups(ybar)), degree)
    if dom.kind == QUADRIC:
        u = 2 * _column_q(x, ybar) - _column_q(x, x) * _column_q(ybar, ybar)
        u = u if isinstance(u, MultiPoly) else MultiPoly.constant(u)
        series = MultiPoly.one()
        power = MultiPoly.one()
        for _ in range(degree):
            power = power.mul(u, truncate)
            if not power:
                break
            series = series + power
        numerator = x - ybar.scale(_column_q(x, x))
        return numerator.map(lambda a: series.mul(a, truncate) if isinstance(a, MultiPoly) else series.scale(a))
    result = x
    term = x
    step = ybar.T
    for _ in range(degree):
        term = term.matmul(step, truncate).matmul(x, truncate)
        if all(not a for a in term.entries()):
            break
        result = result + term
    return result.map(lambda a: a.truncate(degree, truncate[0]) if isinstance(a, MultiPoly) else a)


def poly_sqrt(f, limit):
    """Square root of a polynomial with constant term 1, verified by squaring."""
    if f.constant_term() != 1:
        raise SqrtFailure('Square root needs constant term 1.')
    groups = frozenset(f.groups())
    truncate = (groups, limit)
    u = f - 1
    result = MultiPoly.one()
    power = MultiPoly.one()
    coefficient = Fraction(1)
    for k in range(1, limit + 1):
        coefficient = coefficient * (Fraction(1, 2) - (k - 1)) / k
        power = power.mul(u, truncate)
        if not power:
            break
        result = result + power.scale(coefficient)
    if result * result != f:
        raise SqrtFailure('Polynomial is not a perfect square.')
    return result


def _matrix_norm(dom, x, ybar):
    q, s = dom.shape
    if q <= s:
        product = PolyMatrix.identity(q) - x.matmul(ybar.T)
    else:
        product = PolyMatrix.identity(s) - ybar.T.matmul(x)
    return product.det()


@lru_cache(maxsize=None)
def _skew_norm_template(dom):
    x, ybar = dom.matrix('_hx'), dom.matrix('_hx~')
    determinant = _matrix_norm(dom, x, ybar)
    logger.debug('Taking the square root of the skew determinant on %s', dom)
    return poly_sqrt(determinant, 2 * dom.r)


def _as_poly(value):
    return value if isinstance(value, MultiPoly) else MultiPoly.constant(value)


def generic_norm_h(dom, x, ybar):
    """The generic norm h(x, y) as a MultiPoly."""
    _check(dom, x, ybar)
    if dom.kind == QUADRIC:
        value = 1 - 2 * _column_q(x, ybar) + _column_q(x, x) * _column_q(ybar, ybar)
        return _as_poly(value)
    if dom.kind in (SYM, MAT):
        return _as_poly(_matrix_norm(dom, x, ybar))
    template = _skew_norm_template(dom)
    mapping = {}
    for v in dom.coords('_hx'):
        mapping[v] = _as_poly(x[v.row - 1, v.col - 1])
        mapping[Var(conj_tag('_hx'), v.row, v.col)] = _as_poly(ybar[v.row - 1, v.col - 1])
    return substitute(template, mapping)


def det_poly(dom, x):
    """Determinant polynomial Delta with Delta(e) = 1."""
    _check(dom, x)
    if dom.kind == SYM or (dom.kind == MAT and dom.is_tube):
        return _as_poly(x.det())
    if dom.kind == SKEW and dom.is_tube:
        return _as_poly(x.pfaffian())
    raise Unsupported(f'{dom} has no determinant polynomial.')


def _minor(matrix, skip_rows, skip_cols):
    n, m = matrix.shape
    return matrix.submatrix([i for i in range(n) if i not in skip_rows], [j for j in range(m) if j not in skip_cols])


def adjugate(dom, x):
    """x^# with x x^# = Delta(x) I."""
    _check(dom, x)
    n = dom.shape[0]
    if dom.kind == SYM or (dom.kind == MAT and dom.is_tube):
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                cofactor = _minor(x, {i}, {j}).det() if n > 1 else Fraction(1)
                rows[j][i] = cofactor if (i + j) % 2 == 0 else -cofactor
        return PolyMatrix(rows)
    if dom.kind == SKEW and dom.is_tube:
        rows = [[Fraction(0)] * n for _ in range(n)]
        for k in range(n):
            for l in range(k + 1, n):
                value = _minor(x, {k, l}, {k, l}).pfaffian()
                value = value if (k + l) % 2 == 0 else -value
                rows[k][l] = value
                rows[l][k] = -value
        return PolyMatrix(rows)
    raise Unsupported(f'{dom} has no adjugate.')


def diagonal_norm(a, b):
    """h(sum a_j e_j, sum b_j e_j) = prod (1 - a_j b_j)."""
    result = Fraction(1)
    for aj, bj in zip(a, b):
        result *= 1 - Fraction(aj) * Fraction(bj)
    return result


def spectral_norm_numeric(dom, x):
    """Largest spectral value of a concrete real point, tolerance 1e-12."""
    _check(dom, x)
    values = np.array([[float(_as_rational(a)) for a in row] for row in x.rows])
    if dom.kind == QUADRIC:
        # a_max^2 = |x|^2 + sqrt(|x|^4 - |q(x)|^2)
        length = float(np.sum(np.abs(values) ** 2))
        q = abs(float(np.sum(values ** 2)))
        return float(np.sqrt(length + np.sqrt(max(length ** 2 - q ** 2, 0.0))))
    return float(np.linalg.norm(values, 2))


def jordan_determinant(dom, x, ybar):
    """Det of the symbolic or concrete Bergman operator."""
    bergman = bergman_B(dom, x, ybar)
    if is_concrete(x) and is_concrete(ybar):
        return det_rational([[_as_rational(a) for a in row] for row in bergman.rows])
    return bergman.det()


DESK_DOMAINS = (
    DomainSpec.sym(2),
    DomainSpec.mat(2, 2),
    DomainSpec.skew(4),
    DomainSpec.quadric(3),
)
