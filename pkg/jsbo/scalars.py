"""
Exact scalars in the formal weight parameters.

Coefficients of every operator are kept as ``c * prod (param + shift)**mult``
so that pole orders stay visible. Expanded values live in the rational
function field ``QQ(lam, mu)`` provided by sympy.
"""
import logging
from fractions import Fraction

import sympy
from sympy import QQ
from sympy.polys.fields import field
from sympy.polys.polyerrors import CoercionFailed

from .exceptions import InvalidArgument, LimitDiverges, LimitVanishes, Singular, Unsupported

logger = logging.getLogger(__name__)

FIELD, LAM, MU = field('lam,mu', QQ)

PARAM_NAMES = ('lam', 'mu')
PARAM_GENS = {'lam': LAM, 'mu': MU}
PARAM_LATEX = {'lam': r'\lambda', 'mu': r'\mu'}


def parse_rational(value):
    """Parse '7/3', '-1/2', 3 or a Fraction into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidArgument(f'Cannot parse rational number from {value!r}.')


def format_rational(value):
    value = Fraction(value)
    return f'{value.numerator}/{value.denominator}'


def is_field_element(value):
    return getattr(value, 'field', None) is FIELD


def to_qq(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value):
    return Fraction(int(value.numerator), int(value.denominator))


def lift(value):
    """Embed an int, Fraction or field element into QQ(lam, mu)."""
    if is_field_element(value):
        return value
    if isinstance(value, ParamScalar):
        return value.value()
    return FIELD.ground_new(to_qq(value))


def _poly_value(poly, at):
    total = Fraction(0)
    gens = poly.ring.symbols
    for monom, coeff in poly.terms():
        term = from_qq(coeff)
        for sym, exp in zip(gens, monom):
            if exp:
                name = str(sym)
                if name not in at:
                    raise InvalidArgument(f'No value supplied for parameter {name}.')
                term *= Fraction(at[name]) ** exp
        total += term
    return total


def field_value(element, at):
    """Evaluate a field element at rational parameter values."""
    if not is_field_element(element):
        return Fraction(element)
    denom = _poly_value(element.denom, at)
    if denom == 0:
        raise Singular(f'Rational function {element} has a pole at {at}.')
    return _poly_value(element.numer, at) / denom


def coeff_str(value):
    if is_field_element(value):
        return str(value)
    return format_rational(value)


def parse_coeff(text):
    """Inverse of coeff_str: a Fraction, or an element of QQ(lam, mu) for symbolic text."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        pass
    try:
        expr = sympy.sympify(str(text), locals={name: sympy.Symbol(name) for name in PARAM_NAMES})
        if not expr.free_symbols <= {sympy.Symbol(name) for name in PARAM_NAMES}:
            raise ValueError(f'unknown symbols {sorted(map(str, expr.free_symbols))}')
        return FIELD.from_expr(expr)
    except (sympy.SympifyError, CoercionFailed, AttributeError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise InvalidArgument(f'Cannot parse coefficient {text!r}: {exc}')


def coeff_latex(value):
    if is_field_element(value):
        expr = value.as_expr()
        return sympy.latex(expr.subs({sympy.Symbol('lam'): sympy.Symbol('lambda')}))
    value = Fraction(value)
    return sympy.latex(sympy.Rational(value.numerator, value.denominator))


class ParamScalar:
    """A rational constant times integer powers of linear factors (param + shift)."""

    __slots__ = ('constant', 'factors')

    def __init__(self, constant=1, factors=()):
        constant = Fraction(constant)
        merged = {}
        if constant != 0:
            for param, shift, mult in factors:
                if param not in PARAM_GENS:
                    raise InvalidArgument(f'Unknown parameter {param!r}.')
                key = (param, Fraction(shift))
                merged[key] = merged.get(key, 0) + int(mult)
        self.constant = constant
        self.factors = tuple(sorted((param, shift, mult) for (param, shift), mult in merged.items() if mult))

    @classmethod
    def const(cls, value):
        return cls(value)

    @classmethod
    def zero(cls):
        return cls(0)

    @classmethod
    def one(cls):
        return cls(1)

    @classmethod
    def linear(cls, shift=0, param='lam'):
        """The factor (param + shift)."""
        return cls(1, ((param, shift, 1),))

    @property
    def is_zero(self):
        return self.constant == 0

    def params(self):
        return sorted({param for param, _, _ in self.factors})

    def __mul__(self, other):
        if isinstance(other, ParamScalar):
            return ParamScalar(self.constant * other.constant, self.factors + other.factors)
        if isinstance(other, (int, Fraction)):
            return ParamScalar(self.constant * other, self.factors)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError('The zero scalar has no inverse.')
        return ParamScalar(1 / self.constant, tuple((p, s, -m) for p, s, m in self.factors))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamScalar(other)
        if not isinstance(other, ParamScalar):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return ParamScalar(other) * self.inverse()
        return NotImplemented

    def __neg__(self):
        return ParamScalar(-self.constant, self.factors)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return ParamScalar(self.constant ** n, tuple((p, s, m * n) for p, s, m in self.factors))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamScalar(other)
        if not isinstance(other, ParamScalar):
            return NotImplemented
        return self.constant == other.constant and self.factors == other.factors

    def __hash__(self):
        return hash((self.constant, self.factors))

    def degree(self, param='lam'):
        return sum(m for p, _, m in self.factors if p == param)

    def order_at(self, point, param='lam'):
        """Multiplicity of the zero (positive) or pole (negative) at param = point."""
        point = Fraction(point)
        return sum(m for p, s, m in self.factors if p == param and s == -point)

    def value(self, at=None):
        """Expand into QQ(lam, mu), or evaluate when `at` maps parameters to rationals."""
        if at is None:
            result = lift(self.constant)
            for param, shift, mult in self.factors:
                result *= (PARAM_GENS[param] + lift(shift)) ** mult
            return result
        result = self.constant
        for param, shift, mult in self.factors:
            if param not in at:
                raise InvalidArgument(f'No value supplied for parameter {param}.')
            base = Fraction(at[param]) + shift
            if base == 0 and mult < 0:
                raise Singular(f'Scalar {self} has a pole at {param} = {at[param]}.')
            result *= base ** mult
        return result

    def to_json(self):
        return {
            'c': format_rational(self.constant),
            'factors': [
                {'shift': format_rational(shift), 'mult': mult, **({} if param == 'lam' else {'param': param})}
                for param, shift, mult in self.factors
            ],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            parse_rational(data['c']),
            tuple((item.get('param', 'lam'), parse_rational(item['shift']), int(item['mult']))
                  for item in data.get('factors', [])),
        )

    def _sympy(self):
        expr = sympy.Rational(self.constant.numerator, self.constant.denominator)
        for param, shift, mult in self.factors:
            symbol = sympy.Symbol('lambda' if param == 'lam' else param)
            expr *= (symbol + sympy.Rational(shift.numerator, shift.denominator)) ** mult
        return expr

    def latex(self):
        return sympy.latex(self._sympy())

    def __str__(self):
        parts = [format_rational(self.constant)]
        for param, shift, mult in self.factors:
            if shift == 0:
                base = param
            elif shift > 0:
                base = f'({param}+{shift})'
            else:
                base = f'({param}{shift})'
            parts.append(base if mult == 1 else f'{base}^{mult}')
        return '*'.join(parts)

    __repr__ = __str__


class Weight:
    """An affine weight such as 2*lam + 4*k or lam + mu + 2*k."""

    __slots__ = ('coeffs', 'offset')

    def __init__(self, coeffs=None, offset=0):
        self.coeffs = tuple(sorted((p, Fraction(c)) for p, c in (coeffs or {}).items() if c))
        self.offset = Fraction(offset)

    @classmethod
    def param(cls, name='lam', scale=1, offset=0):
        return cls({name: scale}, offset)

    @classmethod
    def constant(cls, value):
        return cls({}, value)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return Weight(dict(self.coeffs), self.offset + other)
        merged = dict(self.coeffs)
        for p, c in other.coeffs:
            merged[p] = merged.get(p, 0) + c
        return Weight(merged, self.offset + other.offset)

    def shifted(self, delta):
        return Weight(dict(self.coeffs), self.offset + Fraction(delta))

    def __eq__(self, other):
        return isinstance(other, Weight) and self.coeffs == other.coeffs and self.offset == other.offset

    def __hash__(self):
        return hash((self.coeffs, self.offset))

    @property
    def is_constant(self):
        return not self.coeffs

    def value(self, at=None):
        if at is None:
            result = lift(self.offset)
            for p, c in self.coeffs:
                result += lift(c) * PARAM_GENS[p]
            return result
        result = self.offset
        for p, c in self.coeffs:
            if p not in at:
                raise InvalidArgument(f'No value supplied for parameter {p}.')
            result += c * Fraction(at[p])
        return result

    def at(self, point):
        """Substitute rational parameter values, keeping the rest symbolic."""
        kept = {p: c for p, c in self.coeffs if p not in point}
        offset = self.offset + sum((c * Fraction(point[p]) for p, c in self.coeffs if p in point), Fraction(0))
        return Weight(kept, offset)

    def single(self):
        """(param, scale, offset) for a weight in at most one parameter."""
        if len(self.coeffs) > 1:
            raise Unsupported(f'Weight {self} involves more than one parameter.')
        if not self.coeffs:
            return None, Fraction(1), self.offset
        param, scale = self.coeffs[0]
        return param, scale, self.offset

    def pochhammer(self, m, d):
        """(w)_{m,d} as a ParamScalar in the weight's parameter."""
        param, scale, offset = self.single()
        if param is None:
            value = Fraction(1)
            for j, part in enumerate(m, start=1):
                for t in range(part):
                    value *= offset - Fraction(d) * (j - 1) / 2 + t
            return ParamScalar(value)
        factors = []
        for j, part in enumerate(m, start=1):
            for t in range(part):
                factors.append((param, (offset - Fraction(d) * (j - 1) / 2 + t) / scale, 1))
        return ParamScalar(scale ** sum(m), factors)

    def __str__(self):
        parts = []
        for p, c in self.coeffs:
            parts.append(p if c == 1 else f'{c}*{p}')
        if self.offset or not parts:
            parts.append(str(self.offset))
        return '+'.join(parts).replace('+-', '-')

    __repr__ = __str__


def pochhammer(shifts, m, d, param='lam'):
    """Generalized Pochhammer symbol prod_j (param + s_j - (d/2)(j-1))_{m_j}."""
    shifts = tuple(Fraction(s) for s in shifts)
    d = Fraction(d)
    if len(shifts) < len(m):
        shifts = shifts + (Fraction(0),) * (len(m) - len(shifts))
    factors = []
    for j, part in enumerate(m, start=1):
        base = shifts[j - 1] - d * (j - 1) / 2
        for t in range(part):
            factors.append((param, base + t, 1))
    return ParamScalar(1, factors)


def param_limit(p, point, order, param='lam'):
    """lim_{param -> point} (param - point)**order * p, computed by cancelling factors."""
    if order < 0:
        raise InvalidArgument('The limit order must be non-negative.')
    if p.is_zero:
        return Fraction(0)
    others = [q for q in p.params() if q != param]
    if others:
        raise Unsupported(f'Scalar {p} depends on parameters {others} besides {param}.')
    point = Fraction(point)
    remaining = p.order_at(point, param) + order
    if remaining < 0:
        raise LimitDiverges(f'Scalar {p} keeps a pole of order {-remaining} at {param} = {point}.')
    if remaining > 0:
        raise LimitVanishes(f'Scalar {p} vanishes to order {remaining} at {param} = {point}.')
    value = p.constant
    for _, shift, mult in p.factors:
        if shift != -point:
            value *= (point + shift) ** mult
    return value


def limit_or_zero(p, point, order, param='lam'):
    """param_limit with the vanishing signal mapped to zero."""
    try:
        return param_limit(p, point, order, param)
    except LimitVanishes:
        return Fraction(0)
