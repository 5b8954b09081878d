from ...operators import operator_latex
from ...residues import residue_operator, residue_profile, residue_property_check, structural_pole_order
from ...serializers import ResidueResultSerializer, render_json
from ..base import JsboCommand, VerificationFailed


class Command(JsboCommand):
    help = 'Residue operator of a holographic family at the pole lambda0 = mu - offset.'
    formats = ('json', 'latex')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_pair_arguments(parser)
        parser.add_argument('--mu', required=True, help='Integer or half-integer mu.')
        parser.add_argument('--order', type=int, required=True)
        parser.add_argument('--degree', type=int, default=4)
        parser.add_argument('--check', action='store_true',
                            help='Also check vanishing and restricted intertwining.')
        parser.add_argument('--max-degree', type=int, default=3)

    def handle(self, *args, **options):
        pair = self.pair(options)
        mu, order = options['mu'], options['order']
        F = residue_operator(pair, mu, order, self.integer(options['degree'], 'degree'))
        result = {
            'profile': residue_profile(pair, mu),
            'order': order,
            'structural_order': structural_pole_order(pair, mu),
            'operator': F,
        }
        if options['check']:
            result['report'] = residue_property_check(pair, mu, order, self.integer(options['max_degree'], 'max-degree'))
        if options['format'] == 'latex':
            self.emit(operator_latex(F), options)
        else:
            self.emit(render_json(ResidueResultSerializer(result).data), options)
        if options['check'] and not result['report']['ok']:
            raise VerificationFailed(f'Residue {F.label} failed its checks.')
