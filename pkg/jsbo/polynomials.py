"""
Sparse multivariate polynomials over QQ or QQ(lam, mu).

Variables are tagged matrix entries ``group[i,j]``. A conjugate group carries
the suffix ``~`` and is an independent set of symbols. A monomial is a sorted
tuple of ``(Var, exponent)`` pairs; a polynomial maps monomials to non-zero
coefficients, all of one type: ``Fraction`` (rational mode) or an element of
the parameter field (symbolic mode).
"""
import logging
import re
from fractions import Fraction
from math import factorial
from typing import NamedTuple

from .exceptions import InvalidArgument, ShapeMismatch
from .scalars import ParamScalar, coeff_latex, coeff_str, field_value, is_field_element, lift, parse_coeff

logger = logging.getLogger(__name__)

_VAR_RE = re.compile(r'^\s*([A-Za-z_][\w~]*)\[(\d+),(\d+)\]\s*$')


def conj_tag(group):
    return group[:-1] if group.endswith('~') else group + '~'


def is_conj(group):
    return group.endswith('~')


class Var(NamedTuple):
    group: str
    row: int
    col: int

    def __str__(self):
        return f'{self.group}[{self.row},{self.col}]'

    def conj(self):
        return Var(conj_tag(self.group), self.row, self.col)

    def renamed(self, group):
        return Var(group, self.row, self.col)

    @classmethod
    def parse(cls, text):
        match = _VAR_RE.match(text)
        if not match:
            raise InvalidArgument(f'Cannot parse variable from {text!r}.')
        return cls(match.group(1), int(match.group(2)), int(match.group(3)))


ONE_MONO = ()


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_degree(mono, groups=None):
    if groups is None:
        return sum(e for _, e in mono)
    return sum(e for v, e in mono if v.group in groups)


def mono_canonical(mono):
    merged = {}
    for v, e in mono:
        if e < 0:
            raise InvalidArgument(f'Negative exponent for {v}.')
        if e:
            merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items()))


def mono_str(mono):
    if not mono:
        return '1'
    return '*'.join(str(v) if e == 1 else f'{v}^{e}' for v, e in mono)


def mono_latex(mono):
    parts = []
    for v, e in mono:
        base = v.group.rstrip('~')
        name = rf'\bar{{{base}}}' if is_conj(v.group) else base
        symbol = f'{name}_{{{v.row}{v.col}}}'
        parts.append(symbol if e == 1 else f'{symbol}^{{{e}}}')
    return ' '.join(parts)


def mono_sort_key(mono):
    return (mono_degree(mono), tuple((v.group, v.row, v.col, e) for v, e in mono))


def mono_factorial(mono):
    result = 1
    for _, e in mono:
        result *= factorial(e)
    return result


def _is_scalar(value):
    return isinstance(value, (int, Fraction, ParamScalar)) or is_field_element(value)


class MultiPoly:
    """Immutable sparse polynomial in tagged matrix-entry variables."""

    __slots__ = ('terms',)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            symbolic = any(is_field_element(c) or isinstance(c, ParamScalar) for c in terms.values())
            for mono, c in terms.items():
                c = lift(c) if symbolic else Fraction(c)
                if c:
                    key = mono_canonical(mono)
                    clean[key] = clean[key] + c if key in clean else c
        self.terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def _raw(cls, terms):
        poly = object.__new__(cls)
        poly.terms = terms
        return poly

    @classmethod
    def constant(cls, value):
        if isinstance(value, ParamScalar):
            value = value.value()
        if is_field_element(value):
            return cls._raw({ONE_MONO: value} if value else {})
        value = Fraction(value)
        return cls._raw({ONE_MONO: value} if value else {})

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({ONE_MONO: Fraction(1)})

    @classmethod
    def variable(cls, group, row=1, col=1):
        var = group if isinstance(group, Var) else Var(group, row, col)
        return cls._raw({((var, 1),): Fraction(1)})

    @classmethod
    def monomial(cls, mono, coeff=1):
        return cls({mono: coeff})

    @property
    def is_symbolic(self):
        for c in self.terms.values():
            return is_field_element(c)
        return False

    def lifted(self):
        if self.is_symbolic or not self.terms:
            return self
        return MultiPoly._raw({m: lift(c) for m, c in self.terms.items()})

    def _aligned(self, other):
        if self.is_symbolic == other.is_symbolic:
            return self, other
        return self.lifted(), other.lifted()

    def _coerce(self, value):
        if isinstance(value, MultiPoly):
            return value
        if _is_scalar(value):
            return MultiPoly.constant(value)
        return None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._aligned(other)
        if len(a.terms) < len(b.terms):
            a, b = b, a
        result = dict(a.terms)
        for m, c in b.terms.items():
            if m in result:
                total = result[m] + c
                if total:
                    result[m] = total
                else:
                    del result[m]
            else:
                result[m] = c
        return MultiPoly._raw(result)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, value):
        if isinstance(value, ParamScalar):
            value = value.value()
        if is_field_element(value):
            if not value:
                return MultiPoly.zero()
            return MultiPoly._raw({m: c * value for m, c in self.lifted().terms.items()})
        value = Fraction(value)
        if not value:
            return MultiPoly.zero()
        if self.is_symbolic:
            value = lift(value)
        return MultiPoly._raw({m: c * value for m, c in self.terms.items()})

    def mul(self, other, truncate=None):
        """Product, optionally dropping terms of degree > limit in `groups` (truncate=(groups, limit))."""
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        a, b = self._aligned(other)
        if not a.terms or not b.terms:
            return MultiPoly.zero()
        result = {}
        if truncate is None:
            for ma, ca in a.terms.items():
                for mb, cb in b.terms.items():
                    m = mono_mul(ma, mb)
                    c = ca * cb
                    if m in result:
                        result[m] += c
                    else:
                        result[m] = c
        else:
            groups, limit = truncate
            da = [(ma, ca, mono_degree(ma, groups)) for ma, ca in a.terms.items()]
            db = [(mb, cb, mono_degree(mb, groups)) for mb, cb in b.terms.items()]
            for ma, ca, ea in da:
                if ea > limit:
                    continue
                for mb, cb, eb in db:
                    if ea + eb > limit:
                        continue
                    m = mono_mul(ma, mb)
                    c = ca * cb
                    if m in result:
                        result[m] += c
                    else:
                        result[m] = c
        return MultiPoly._raw({m: c for m, c in result.items() if c})

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            return self.mul(other)
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ParamScalar):
            return self.scale(other.inverse())
        if is_field_element(other):
            return self.scale(1 / other)
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def power(self, n, truncate=None):
        if n < 0:
            raise InvalidArgument('Polynomial powers must be non-negative.')
        result = MultiPoly.one()
        base = self
        while n:
            if n & 1:
                result = result.mul(base, truncate)
            n >>= 1
            if n:
                base = base.mul(base, truncate)
        return result

    def __pow__(self, n):
        return self.power(n)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    __hash__ = None

    def degree(self, groups=None):
        """Maximal degree in `groups` (all variables when None); 0 for the zero polynomial."""
        return max((mono_degree(m, groups) for m in self.terms), default=0)

    def min_degree(self, groups=None):
        return min((mono_degree(m, groups) for m in self.terms), default=0)

    def homogeneous(self, k, groups=None):
        return MultiPoly._raw({m: c for m, c in self.terms.items() if mono_degree(m, groups) == k})

    def truncate(self, limit, groups=None):
        return MultiPoly._raw({m: c for m, c in self.terms.items() if mono_degree(m, groups) <= limit})

    def filter_groups(self, groups):
        """Terms whose variables all lie in `groups`."""
        return MultiPoly._raw({m: c for m, c in self.terms.items() if all(v.group in groups for v, _ in m)})

    def split(self, groups):
        """Map from the monomial part in `groups` to the polynomial cofactor in the remaining variables."""
        parts = {}
        for m, c in self.terms.items():
            inside = tuple(p for p in m if p[0].group in groups)
            outside = tuple(p for p in m if p[0].group not in groups)
            parts.setdefault(inside, {})[outside] = c
        return {key: MultiPoly._raw(value) for key, value in parts.items()}

    def rename(self, mapping):
        """Rename variable groups, e.g. {'x': 'y'}."""
        result = {}
        for m, c in self.terms.items():
            key = mono_canonical((v.renamed(mapping.get(v.group, v.group)), e) for v, e in m)
            result[key] = result[key] + c if key in result else c
        return MultiPoly._raw({m: c for m, c in result.items() if c})

    def variables(self):
        return sorted({v for m in self.terms for v, _ in m})

    def groups(self):
        return sorted({v.group for m in self.terms for v, _ in m})

    def coefficient(self, mono):
        mono = mono_canonical(mono)
        if mono in self.terms:
            return self.terms[mono]
        return lift(0) if self.is_symbolic else Fraction(0)

    def constant_term(self):
        return self.coefficient(ONE_MONO)

    @property
    def is_constant(self):
        return all(not m for m in self.terms)

    def map_coefficients(self, fn):
        return MultiPoly({m: fn(c) for m, c in self.terms.items()})

    def at_params(self, at):
        """Evaluate parameter-field coefficients at rational parameter values."""
        if not self.is_symbolic:
            return self
        return MultiPoly({m: field_value(c, at) for m, c in self.terms.items()})

    def evaluate(self, values):
        """Substitute scalar values for some variables."""
        if not values:
            return self
        symbolic = self.is_symbolic or any(is_field_element(v) for v in values.values())
        result = {}
        for m, c in self.terms.items():
            kept = []
            for v, e in m:
                if v in values:
                    c = c * values[v] ** e if not symbolic else lift(c) * lift(values[v]) ** e
                    if not c:
                        break
                else:
                    kept.append((v, e))
            else:
                key = tuple(kept)
                result[key] = result[key] + c if key in result else c
        return MultiPoly({m: c for m, c in result.items() if c})

    def items(self):
        return sorted(self.terms.items(), key=lambda item: mono_sort_key(item[0]))

    def to_json(self):
        variables = self.variables()
        index = {v: i for i, v in enumerate(variables)}
        terms = []
        for m, c in self.items():
            exps = [0] * len(variables)
            for v, e in m:
                exps[index[v]] = e
            terms.append({'coeff': coeff_str(c), 'exps': exps})
        return {'vars': [str(v) for v in variables], 'terms': terms}

    @classmethod
    def from_json(cls, data):
        variables = [Var.parse(text) for text in data.get('vars', [])]
        terms = {}
        for term in data.get('terms', []):
            mono = tuple((v, e) for v, e in zip(variables, term['exps']) if e)
            terms[mono] = parse_coeff(term['coeff'])
        return cls(terms)

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for m, c in self.items():
            coefficient = coeff_str(c)
            if is_field_element(c):
                coefficient = f'({coefficient})'
            parts.append(coefficient if not m else f'{coefficient}*{mono_str(m)}')
        return ' + '.join(parts)

    __repr__ = __str__

    def latex(self):
        if not self.terms:
            return '0'
        parts = []
        for m, c in self.items():
            coefficient = coeff_latex(c)
            if is_field_element(c):
                coefficient = rf'\left({coefficient}\right)'
            parts.append(coefficient if not m else f'{coefficient} {mono_latex(m)}')
        return ' + '.join(parts).replace('+ -', '- ')


def poly_diff(f, v, k=1):
    """k-th partial derivative of f with respect to the variable v."""
    if k < 0:
        raise InvalidArgument('Derivative order must be non-negative.')
    if k == 0:
        return f
    result = {}
    for m, c in f.terms.items():
        exps = dict(m)
        e = exps.get(v, 0)
        if e < k:
            continue
        falling = 1
        for t in range(k):
            falling *= e - t
        if e == k:
            del exps[v]
        else:
            exps[v] = e - k
        key = tuple(sorted(exps.items()))
        value = c * falling
        result[key] = result[key] + value if key in result else value
    return MultiPoly._raw({m: c for m, c in result.items() if c})


def mono_diff(f, mono):
    """Apply the mixed partial derivative prod d^e/dv^e for (v, e) in mono."""
    for v, e in mono:
        f = poly_diff(f, v, e)
        if not f:
            break
    return f


def substitute(f, mapping, truncate=None):
    """Replace variables by polynomials; variables absent from the mapping are kept."""
    powers = {}

    def power(v, e):
        key = (v, e)
        if key not in powers:
            powers[key] = mapping[v] if e == 1 else power(v, e - 1).mul(mapping[v], truncate)
        return powers[key]

    result = MultiPoly.zero()
    for m, c in f.terms.items():
        term = MultiPoly._raw({ONE_MONO: c})
        kept = []
        for v, e in m:
            if v in mapping:
                term = term.mul(power(v, e), truncate)
                if not term:
                    break
            else:
                kept.append((v, e))
        if term and kept:
            term = term.mul(MultiPoly._raw({tuple(kept): Fraction(1)}), truncate)
        result = result + term
    return result


def poly_compose_linear(f, substitution):
    """Exact substitution of polynomials of degree at most one."""
    for v, image in substitution.items():
        if image.degree() > 1:
            raise InvalidArgument(f'Substitution for {v} is not linear.')
    return substitute(f, substitution)


def _zero_like(value):
    return not value


class PolyMatrix:
    """Dense matrix whose entries are Fractions or MultiPolys."""

    __slots__ = ('rows', 'shape')

    def __init__(self, rows):
        rows = [list(row) for row in rows]
        width = len(rows[0]) if rows else 0
        if any(len(row) != width for row in rows):
            raise ShapeMismatch('Matrix rows have different lengths.')
        self.rows = rows
        self.shape = (len(rows), width)

    @classmethod
    def zeros(cls, n, m):
        return cls([[Fraction(0)] * m for _ in range(n)])

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def build(cls, n, m, fn):
        return cls([[fn(i, j) for j in range(m)] for i in range(n)])

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    @property
    def T(self):
        n, m = self.shape
        return PolyMatrix([[self.rows[i][j] for i in range(n)] for j in range(m)])

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ShapeMismatch(f'Shapes {self.shape} and {other.shape} differ.')

    def __add__(self, other):
        self._check_same(other)
        return PolyMatrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check_same(other)
        return PolyMatrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return PolyMatrix([[-a for a in row] for row in self.rows])

    def scale(self, value):
        return PolyMatrix([[a * value if a else a for a in row] for row in self.rows])

    def map(self, fn):
        return PolyMatrix([[fn(a) for a in row] for row in self.rows])

    def matmul(self, other, truncate=None):
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ShapeMismatch(f'Cannot multiply {self.shape} by {other.shape}.')
        columns = [[other.rows[t][j] for t in range(k)] for j in range(m)]
        out = []
        for i in range(n):
            row = self.rows[i]
            out_row = []
            for j in range(m):
                total = Fraction(0)
                for a, b in zip(row, columns[j]):
                    if _zero_like(a) or _zero_like(b):
                        continue
                    if truncate is not None and isinstance(a, MultiPoly) and isinstance(b, MultiPoly):
                        total = total + a.mul(b, truncate)
                    else:
                        total = total + a * b
                out_row.append(total)
            out.append(out_row)
        return PolyMatrix(out)

    def __matmul__(self, other):
        return self.matmul(other)

    def trace(self):
        total = Fraction(0)
        for i in range(min(self.shape)):
            total = total + self.rows[i][i]
        return total

    def submatrix(self, rows, cols):
        return PolyMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def entries(self):
        for row in self.rows:
            yield from row

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix) or self.shape != other.shape:
            return False
        return all(_entry_eq(a, b) for a, b in zip(self.entries(), other.entries()))

    __hash__ = None

    def det(self):
        """Determinant by dynamic programming over column subsets."""
        n, m = self.shape
        if n != m:
            raise ShapeMismatch('Determinant of a non-square matrix.')
        states = {0: Fraction(1)}
        for i in range(n):
            row = self.rows[i]
            nxt = {}
            for mask, value in states.items():
                for j in range(n):
                    if mask >> j & 1:
                        continue
                    a = row[j]
                    if _zero_like(a):
                        continue
                    term = value * a
                    if bin(mask >> (j + 1)).count('1') % 2:
                        term = -term
                    key = mask | 1 << j
                    nxt[key] = nxt[key] + term if key in nxt else term
            states = {k: v for k, v in nxt.items() if not _zero_like(v)}
        return states.get((1 << n) - 1, Fraction(0))

    def pfaffian(self):
        n, m = self.shape
        if n != m:
            raise ShapeMismatch('Pfaffian of a non-square matrix.')
        if n % 2:
            return Fraction(0)
        memo = {}

        def pf(indices):
            if not indices:
                return Fraction(1)
            if indices in memo:
                return memo[indices]
            first = indices[0]
            total = Fraction(0)
            for pos in range(1, len(indices)):
                a = self.rows[first][indices[pos]]
                if _zero_like(a):
                    continue
                rest = indices[1:pos] + indices[pos + 1:]
                term = a * pf(rest)
                total = total + (term if pos % 2 else -term)
            memo[indices] = total
            return total

        return pf(tuple(range(n)))

    def __str__(self):
        return '\n'.join('[' + ', '.join(str(a) for a in row) + ']' for row in self.rows)


def _entry_eq(a, b):
    if isinstance(a, MultiPoly):
        return a == b
    if isinstance(b, MultiPoly):
        return b == a
    return a == b
