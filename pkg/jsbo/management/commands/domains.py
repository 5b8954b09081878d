from ...domains import DESK_DOMAINS, DomainSpec
from ...serializers import DomainTableSerializer
from ..base import JsboCommand

COLUMNS = ('domain', 'r', 'n', 'd', 'b', 'p', 'epsilon', 'tube')


class Command(JsboCommand):
    help = 'List the structure constants (r, n, d, b, p, epsilon) of classical domains.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('action', choices=['list'])
        parser.add_argument('--domain', action='append', default=[],
                            help='Descriptor such as mat:2x3; repeatable. Defaults to one domain of each kind.')

    def handle(self, *args, **options):
        doms = [DomainSpec.parse(text) for text in options['domain']] or list(DESK_DOMAINS)
        rows = DomainTableSerializer(doms, many=True).data
        if options['format'] == 'json':
            self.emit_json(rows, options)
            return
        widths = {c: max(len(c), *(len(str(row[c])) for row in rows)) for c in COLUMNS}
        lines = ['  '.join(c.ljust(widths[c]) for c in COLUMNS)]
        for row in rows:
            lines.append('  '.join(str(row[c]).ljust(widths[c]) for c in COLUMNS))
        self.emit('\n'.join(line.rstrip() for line in lines), options)
