"""Exact linear algebra over QQ on top of sympy's DomainMatrix."""
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .exceptions import Singular
from .scalars import from_qq


def to_domain_matrix(rows):
    return DomainMatrix.from_list([[(Fraction(a).numerator, Fraction(a).denominator) for a in row] for row in rows], QQ)


def from_domain_matrix(matrix):
    return [[from_qq(a) for a in row] for row in matrix.to_list()]


def det_rational(rows):
    if not rows:
        return Fraction(1)
    return from_qq(to_domain_matrix(rows).det())


def solve_rational(rows, rhs):
    """Solve A v = rhs for a square non-singular A; rhs is a list or a list of columns."""
    matrix = to_domain_matrix(rows)
    if matrix.det() == 0:
        raise Singular('Linear system is singular.')
    columns = rhs if rhs and isinstance(rhs[0], (list, tuple)) else [rhs]
    right = to_domain_matrix([list(values) for values in zip(*columns)])
    solution = from_domain_matrix(matrix.lu_solve(right))
    if columns is rhs:
        return [[row[j] for row in solution] for j in range(len(columns))]
    return [row[0] for row in solution]


def rank_rational(rows):
    if not rows or not rows[0]:
        return 0
    return to_domain_matrix(rows).rank()


def inverse_rational(rows):
    matrix = to_domain_matrix(rows)
    if matrix.det() == 0:
        raise Singular('Matrix is singular.')
    return from_domain_matrix(matrix.inv())
