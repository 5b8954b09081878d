from ...operators import operator_latex
from ...serializers import PolyOperatorSerializer
from ..base import JsboCommand


class Command(JsboCommand):
    help = 'Emit the symmetry breaking or holographic operator of a pair as JSON or LaTeX.'
    formats = ('json', 'latex', 'text')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('action', choices=['emit'])
        self.add_pair_arguments(parser)
        parser.add_argument('--domain', default=None, help='G0 of a tensor pair, e.g. sym:2.')
        parser.add_argument('--degree', type=int, default=4,
                            help='Largest input degree the emitted operator must handle.')
        self.add_operator_arguments(parser)
        self.add_weight_arguments(parser, default='symbolic')

    def handle(self, *args, **options):
        pair = self.pair(options)
        F = self.operator(pair, options, self.integer(options['degree'], 'degree'))
        point = self.point(options)
        if point is not None:
            F = F.at(point)
        if options['format'] == 'latex':
            self.emit(operator_latex(F), options)
        elif options['format'] == 'text':
            self.emit(f'{F.label} = {F}', options)
        else:
            self.emit_json(PolyOperatorSerializer(F).data, options)
