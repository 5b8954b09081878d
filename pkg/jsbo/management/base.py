"""Shared plumbing for the workbench management commands."""
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from ..domains import DomainSpec
from ..exceptions import InvalidArgument
from ..lie import DEFAULT_MU, default_point
from ..operators import holographic, mult_operator, normal_operator, parse_mono, rc_tensor
from ..pairs import NORMAL, PAIR_CHOICES, TENSOR, build_pair
from ..partitions import Partition
from ..polynomials import MultiPoly
from ..scalars import parse_rational
from ..serializers import render_json

USAGE = 2
FAILED = 1


class UsageError(CommandError):
    def __init__(self, message):
        super().__init__(message, returncode=USAGE)


class VerificationFailed(CommandError):
    """Raised after the report is written when a check did not pass."""

    def __init__(self, message):
        super().__init__(message, returncode=FAILED)


class JsboCommand(BaseCommand):
    """Base command: --format/--json/--out and the common descriptors."""

    formats = ('json', 'text')
    requires_system_checks = []
    requires_migrations_checks = False

    def add_arguments(self, parser):
        parser.add_argument('--format', choices=self.formats, default=self.formats[0])
        parser.add_argument('--json', dest='format', action='store_const', const='json',
                            help='Shorthand for --format json.')
        parser.add_argument('--out', help='Write the output to this file instead of stdout.')

    def add_pair_arguments(self, parser):
        parser.add_argument('--pair', choices=PAIR_CHOICES)
        parser.add_argument('--sizes', default='', help='Block sizes such as 1,1 or 1,1,1,1.')
        parser.add_argument('--k', type=int, default=0)
        parser.add_argument('--l', type=int, default=0)

    def add_weight_arguments(self, parser, default):
        parser.add_argument('--lambda', dest='lam', default=default,
                            help="A rational such as 37/5, or 'symbolic'.")
        parser.add_argument('--mu', default=None, help='Second weight of tensor pairs.')

    def emit(self, text, options):
        if options.get('out'):
            Path(options['out']).write_text(text + '\n', encoding='utf-8')
        else:
            self.stdout.write(text)

    def emit_json(self, data, options):
        self.emit(render_json(data), options)

    def domain(self, text, required=True):
        if not text:
            if required:
                raise UsageError('--domain is required.')
            return None
        return DomainSpec.parse(text)

    def pair(self, options, domain=None):
        if not options.get('pair'):
            raise UsageError('--pair is required.')
        domain = options.get('domain') if domain is None else domain
        return build_pair(options['pair'], options['sizes'], options['k'], options['l'],
                          domain=self.domain(domain, required=False))

    def partition(self, text):
        if text is None:
            raise UsageError('--m is required.')
        return Partition.parse(text)

    def point(self, options):
        """None in symbolic mode, otherwise {'lam': .., 'mu': ..}."""
        lam = options.get('lam')
        if lam is None or str(lam).lower() == 'symbolic':
            return None
        point = default_point() if str(lam).lower() == 'default' else {'lam': parse_rational(lam), 'mu': DEFAULT_MU}
        if options.get('mu') is not None:
            point['mu'] = parse_rational(options['mu'])
        return point

    def add_operator_arguments(self, parser):
        parser.add_argument('--m', default=None, help='Partition of a normal-derivative operator.')
        parser.add_argument('--K', dest='multiplier', default=None,
                            help="Monomial on the complement for a multiplication embedding, e.g. 'x2[1,1]^2'.")

    def operator(self, pair, options, degree):
        """The operator the options describe for `pair`, finite on inputs of degree <= `degree`."""
        if options.get('multiplier'):
            return mult_operator(pair, MultiPoly.monomial(parse_mono(options['multiplier'])))
        if pair.kind == TENSOR:
            return rc_tensor(pair.big, pair.k)
        if pair.kind == NORMAL:
            return normal_operator(pair, self.partition(options.get('m')))
        return holographic(pair, degree)

    def integer(self, value, name, minimum=0):
        if value < minimum:
            raise InvalidArgument(f'--{name} must be at least {minimum}.')
        return value
