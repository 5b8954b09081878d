from ...scalars import parse_rational
from ...serializers import TraceCoordinatePolySerializer
from ...symmetric import jack_phi_tilde, schur_closed_form
from ..base import JsboCommand, UsageError


class Command(JsboCommand):
    help = 'Phi~_m^(d) in power sums; with --r and d = 2 also compares the closed Schur form.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--d', required=True, help='Multiplicity d, e.g. 1, 2 or 4.')
        parser.add_argument('--m', required=True, help='Partition such as 2,1.')
        parser.add_argument('--r', type=int, default=None)

    def handle(self, *args, **options):
        d = parse_rational(options['d'])
        m = self.partition(options['m'])
        poly = jack_phi_tilde(d, m)
        if options['format'] == 'text':
            self.emit(str(poly), options)
            return
        data = TraceCoordinatePolySerializer(poly).data
        if options['r'] is not None:
            if d != 2:
                raise UsageError('The closed Schur form exists for d = 2 only.')
            if len(m) > options['r']:
                raise UsageError(f'Partition {m} is longer than r = {options["r"]}.')
            data['closed_form_agrees'] = poly == schur_closed_form(m, options['r'])
        self.emit_json(data, options)
