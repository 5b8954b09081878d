from ...kernels import expand_h_power
from ...serializers import MultiPolySerializer, ParamSeriesSerializer
from ..base import JsboCommand


class Command(JsboCommand):
    help = 'Expand h(x, y)^(-lambda) directly and as sum_m (lambda)_m K_m(x, y).'
    formats = ('json', 'latex', 'text')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--domain', required=True)
        parser.add_argument('--degree', type=int, default=4)
        self.add_weight_arguments(parser, default='symbolic')

    def handle(self, *args, **options):
        dom = self.domain(options['domain'])
        degree = self.integer(options['degree'], 'degree')
        point = self.point(options)
        direct, structured = expand_h_power(dom, degree)
        if point is None:
            total, other = direct.total(), structured.total()
        else:
            total, other = direct.at(point), structured.at(point)
        if options['format'] == 'latex':
            self.emit(total.latex(), options)
            return
        if options['format'] == 'text':
            self.emit(str(total), options)
            return
        self.emit_json({
            'domain': str(dom),
            'degree': degree,
            'lambda': 'symbolic' if point is None else f"{point['lam']}",
            'agree': total == other,
            'series': MultiPolySerializer(total).data,
            'structured': ParamSeriesSerializer(structured).data,
        }, options)
