from math import factorial

from .exceptions import InvalidArgument


class Partition(tuple):
    """Weakly decreasing tuple of non-negative integers, trailing zeros dropped."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise InvalidArgument(f'Partition parts must be non-negative: {parts}.')
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidArgument(f'Partition parts must be weakly decreasing: {parts}.')
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text):
        """Parse '2,1' (or '' / '0' for the empty partition)."""
        text = str(text).strip().strip('()')
        if not text:
            return cls()
        try:
            return cls(int(p) for p in text.split(','))
        except ValueError:
            raise InvalidArgument(f'Cannot parse partition from {text!r}.')

    @property
    def size(self):
        return sum(self)

    def part(self, i):
        """1-based part, zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, r):
        if len(self) > r:
            raise InvalidArgument(f'Partition {self} has more than {r} parts.')
        return tuple(self) + (0,) * (r - len(self))

    def conjugate(self):
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def dominates(self, other):
        total_self = total_other = 0
        for i in range(max(len(self), len(other))):
            total_self += self.part(i + 1)
            total_other += other.part(i + 1)
            if total_self < total_other:
                return False
        return True

    def complement(self, k, r):
        """(k - m_r, ..., k - m_1) for a partition with m_1 <= k."""
        padded = self.padded(r)
        if padded and padded[0] > k:
            raise InvalidArgument(f'Partition {self} does not fit in a {r}x{k} box.')
        return Partition(k - p for p in reversed(padded))

    def doubled(self):
        """(m_1, m_1, m_2, m_2, ...)."""
        return Partition(p for p in self for _ in range(2))

    def factorial_product(self):
        result = 1
        for p in self:
            result *= factorial(p)
        return result

    def multiplicities(self):
        counts = {}
        for p in self:
            counts[p] = counts.get(p, 0) + 1
        return counts

    def __str__(self):
        return '(' + ','.join(str(p) for p in self) + ')'

    def __repr__(self):
        return f'Partition{tuple(self)!r}'


def partitions(n, max_length=None, max_part=None):
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    if max_length is not None and max_length <= 0:
        return
    for first in range(min(n, max_part), 0, -1):
        rest_length = None if max_length is None else max_length - 1
        for rest in partitions(n - first, rest_length, first):
            yield Partition((first,) + tuple(rest))


def partitions_up_to(degree, max_length=None):
    for n in range(degree + 1):
        yield from partitions(n, max_length)


def z_factor(mu):
    """z_mu = prod_i i^{a_i} a_i!, the centralizer order of cycle type mu."""
    result = 1
    for part, count in Partition(mu).multiplicities().items():
        result *= part ** count * factorial(count)
    return result
