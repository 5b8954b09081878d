from ...exceptions import InvalidArgument
from ...fischer import repkernel_K
from ...polynomials import conj_tag
from ...serializers import MultiPolySerializer
from ..base import JsboCommand


class Command(JsboCommand):
    help = 'The reproducing kernel K_m(x, y) of P_m on a domain.'
    formats = ('json', 'latex', 'text')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--domain', required=True)
        parser.add_argument('--m', required=True)
        parser.add_argument('--group', default='x', help='Variable group of x; y uses its conjugate.')

    def handle(self, *args, **options):
        dom = self.domain(options['domain'])
        m = self.partition(options['m'])
        if len(m) > dom.r:
            raise InvalidArgument(f'Partition {m} is longer than the rank of {dom}.')
        kernel = repkernel_K(dom, m, options['group'], conj_tag(options['group']))
        if options['format'] == 'latex':
            self.emit(kernel.latex(), options)
        elif options['format'] == 'text':
            self.emit(str(kernel), options)
        else:
            self.emit_json(MultiPolySerializer(kernel).data, options)
