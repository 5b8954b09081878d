from ...domains import DESK_DOMAINS, DomainSpec
from ...exceptions import CalibrationAmbiguous, CalibrationFailure
from ...kernels import check_hat_kernel_equivariance, oracle_agreement
from ...lie import calibrate, intertwine_check
from ...operators import identity_operator
from ...residues import filtration_check
from ...scalars import parse_rational
from ...serializers import ReportSerializer
from ...verification import expansion_suite, jordan_suite, run_cases, symmetric_suite, tensor_formula_check
from ..base import JsboCommand, UsageError, VerificationFailed

CHECKS = ('intertwine', 'jordan', 'expansion', 'symmetric', 'oracle', 'equivariance',
          'tensor-formula', 'filtration', 'calibrate')


def calibration_report(dom):
    try:
        conv = calibrate(dom)
    except (CalibrationFailure, CalibrationAmbiguous) as exc:
        return {'check': 'calibrate', 'domain': str(dom), 'ok': False, 'failures': [exc.payload]}
    return {'check': 'calibrate', 'domain': str(dom), 'convention': conv.to_json(), 'ok': True, 'failures': []}


class Command(JsboCommand):
    help = 'Run verification suites; exits 1 when any check fails.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('check', choices=CHECKS)
        self.add_pair_arguments(parser)
        parser.add_argument('--domain', action='append', default=[],
                            help='Domain descriptor; repeatable. Suites default to one domain of each kind.')
        parser.add_argument('--degree', type=int, default=None)
        parser.add_argument('--max-degree', type=int, default=3)
        parser.add_argument('--seed', type=int, default=None)
        parser.add_argument('--points', type=int, default=100)
        parser.add_argument('--weight', default='0', help='Weight of the filtration check.')
        self.add_operator_arguments(parser)
        self.add_weight_arguments(parser, default='default')

    def domains(self, options, default=DESK_DOMAINS):
        return [DomainSpec.parse(text) for text in options['domain']] or list(default)

    def cases(self, check, options):
        degree = options['degree']
        max_degree = self.integer(options['max_degree'], 'max-degree')
        point = self.point(options)
        if check == 'jordan':
            return [(jordan_suite, {'dom': dom, 'seed': options['seed'], 'points': options['points']})
                    for dom in self.domains(options)]
        if check == 'expansion':
            return [(expansion_suite, {'dom': dom, 'degree': 6 if degree is None else degree})
                    for dom in self.domains(options)]
        if check == 'symmetric':
            return [(symmetric_suite, {'max_degree': 5 if degree is None else degree})]
        if check == 'tensor-formula':
            doms = self.domains(options, default=[DomainSpec.sym(1)])
            return [(tensor_formula_check, {'dom': dom, 'k': options['k']}) for dom in doms]
        if check == 'filtration':
            weight = parse_rational(options['weight'])
            return [(filtration_check, {'dom': dom, 'weight': weight, 'max_degree': max_degree})
                    for dom in self.domains(options)]
        if check == 'calibrate':
            return [(calibration_report, {'dom': dom}) for dom in self.domains(options)]
        if check == 'intertwine' and not options['pair']:
            if not options['domain']:
                raise UsageError('verify intertwine needs --pair or --domain.')
            return [(intertwine_check, {'pair': None, 'F': identity_operator(dom), 'max_degree': max_degree,
                                        'point': point})
                    for dom in self.domains(options)]
        pair = self.pair(options, domain=options['domain'][0] if options['domain'] else None)
        if check == 'intertwine':
            F = self.operator(pair, options, max_degree + 1)
            return [(intertwine_check, {'pair': pair, 'F': F, 'max_degree': max_degree, 'point': point})]
        if check == 'oracle':
            return [(oracle_agreement, {'pair': pair, 'degree': 4 if degree is None else degree, 'point': point})]
        return [(check_hat_kernel_equivariance, {'pair': pair, 'degree': 3 if degree is None else degree,
                                                 'point': point})]

    def handle(self, *args, **options):
        reports = run_cases(self.cases(options['check'], options))
        ok = all(report['ok'] for report in reports)
        if options['format'] == 'text':
            lines = []
            for report in reports:
                status = 'ok' if report['ok'] else f"FAILED ({len(report['failures'])})"
                parts = [report['check'], report.get('domain') or report.get('pair'), status]
                lines.append(' '.join(part for part in parts if part))
            self.emit('\n'.join(lines), options)
        else:
            self.emit_json({'ok': ok, 'reports': ReportSerializer(reports, many=True).data}, options)
        if not ok:
            raise VerificationFailed(f"verify {options['check']} found failures.")
