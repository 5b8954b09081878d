from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from .domains import KIND_CHOICES as DOMAIN_KIND_CHOICES, DomainSpec
from .exceptions import JsboError
from .kernels import ParamSeries
from .operators import KIND_CHOICES as OPERATOR_KIND_CHOICES, OperatorTerm, PolyOperator, parse_mono
from .polynomials import MultiPoly, mono_str
from .scalars import PARAM_NAMES, ParamScalar, format_rational, parse_rational
from .symmetric import TraceCoordinatePoly


def render_json(data):
    """Compact JSON text, keys in declared order."""
    return JSONRenderer().render(data).decode('utf-8')


class RationalField(serializers.Field):
    """A Fraction written as 'p/q'."""

    default_error_messages = {'invalid': 'Expected a rational number such as 7/3.'}

    def to_representation(self, value):
        return format_rational(value)

    def to_internal_value(self, data):
        try:
            return parse_rational(data)
        except JsboError:
            self.fail('invalid')


class MonomialField(serializers.Field):
    """A monomial written as '1' or 'x[1,2]^2*v[1,1]'."""

    default_error_messages = {'invalid': 'Cannot parse monomial {value!r}.'}

    def to_representation(self, value):
        return mono_str(value)

    def to_internal_value(self, data):
        try:
            return parse_mono(str(data))
        except (JsboError, ValueError, IndexError):
            self.fail('invalid', value=data)


class DomainSpecSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=DOMAIN_KIND_CHOICES)
    params = serializers.ListField(child=serializers.IntegerField(min_value=1))

    def validate(self, attrs):
        try:
            DomainSpec(attrs['kind'], tuple(attrs['params'])).standalone()
        except JsboError as exc:
            raise serializers.ValidationError(str(exc.detail))
        return attrs

    def create(self, validated_data):
        return DomainSpec(validated_data['kind'], tuple(validated_data['params']))


class DomainTableSerializer(serializers.Serializer):
    """One row of `domains list`."""

    domain = serializers.CharField(source='__str__')
    kind = serializers.CharField()
    params = serializers.ListField(child=serializers.IntegerField())
    r = serializers.IntegerField()
    n = serializers.IntegerField()
    d = serializers.IntegerField()
    b = serializers.IntegerField()
    p = serializers.IntegerField()
    epsilon = serializers.IntegerField()
    tube = serializers.BooleanField(source='is_tube')


class ParamFactorSerializer(serializers.Serializer):
    """{'shift', 'mult'}; 'param' appears only for factors in mu."""

    param = serializers.ChoiceField(choices=PARAM_NAMES, default='lam')
    shift = RationalField()
    mult = serializers.IntegerField()

    def to_representation(self, instance):
        if isinstance(instance, tuple):
            param, shift, mult = instance
            instance = {'param': param, 'shift': shift, 'mult': mult}
        data = super().to_representation(instance)
        if data['param'] == 'lam':
            del data['param']
        return data


class ParamScalarSerializer(serializers.Serializer):
    c = RationalField(source='constant')
    factors = ParamFactorSerializer(many=True, required=False)

    def create(self, validated_data):
        factors = tuple((f['param'], f['shift'], f['mult']) for f in validated_data.get('factors', []))
        return ParamScalar(validated_data['constant'], factors)


class MonomialTermSerializer(serializers.Serializer):
    coeff = serializers.CharField()
    exps = serializers.ListField(child=serializers.IntegerField(min_value=0))


class MultiPolySerializer(serializers.Serializer):
    vars = serializers.ListField(child=serializers.CharField())
    terms = MonomialTermSerializer(many=True)

    def to_representation(self, instance):
        if isinstance(instance, MultiPoly):
            instance = instance.to_json()
        return super().to_representation(instance)

    def validate(self, attrs):
        width = len(attrs['vars'])
        if any(len(term['exps']) != width for term in attrs['terms']):
            raise serializers.ValidationError('Every exponent vector needs one entry per variable.')
        return attrs

    def create(self, validated_data):
        try:
            return MultiPoly.from_json(validated_data)
        except (JsboError, ValueError, ZeroDivisionError) as exc:
            raise serializers.ValidationError(str(exc))


class PowerSumTermSerializer(serializers.Serializer):
    coeff = serializers.CharField()
    powers = serializers.ListField(child=serializers.IntegerField(min_value=1))


class TraceCoordinatePolySerializer(serializers.Serializer):
    powersum_terms = PowerSumTermSerializer(many=True)

    def to_representation(self, instance):
        if isinstance(instance, TraceCoordinatePoly):
            instance = instance.to_json()
        return super().to_representation(instance)


class OperatorTermSerializer(serializers.Serializer):
    coeff = ParamScalarSerializer()
    mult = MonomialField()
    diff = MonomialField()

    def to_representation(self, instance):
        if isinstance(instance, OperatorTerm):
            instance = instance._asdict()
        return super().to_representation(instance)


class PolyOperatorSerializer(serializers.Serializer):
    label = serializers.CharField(allow_blank=True)
    kind = serializers.ChoiceField(choices=OPERATOR_KIND_CHOICES)
    order = serializers.IntegerField(read_only=True)
    terms = OperatorTermSerializer(many=True)

    def create(self, validated_data):
        """Needs `diff_domains` (and optionally `restrict`) in the serializer context."""
        terms = [
            OperatorTerm(ParamScalarSerializer().create(item['coeff']), item['mult'], item['diff'])
            for item in validated_data['terms']
        ]
        return PolyOperator(terms, self.context.get('diff_domains'), self.context.get('restrict'),
                            validated_data['label'], validated_data['kind'])


class ParamSeriesTermSerializer(serializers.Serializer):
    label = serializers.CharField()
    coeff = ParamScalarSerializer()
    poly = MultiPolySerializer()

    def to_representation(self, instance):
        if isinstance(instance, tuple):
            label, coeff, poly = instance
            instance = {'label': str(label), 'coeff': coeff, 'poly': poly}
        return super().to_representation(instance)


class ParamSeriesSerializer(serializers.Serializer):
    degree = serializers.IntegerField()
    groups = serializers.SerializerMethodField()
    terms = ParamSeriesTermSerializer(many=True)

    def get_groups(self, obj):
        groups = obj.groups if isinstance(obj, ParamSeries) else obj['groups']
        return sorted(groups)


class ReportSerializer(serializers.Serializer):
    """Check report: the declared keys frame whatever details the check adds."""

    check = serializers.CharField()
    ok = serializers.BooleanField()
    failures = serializers.ListField(child=serializers.JSONField())

    def to_representation(self, instance):
        data = super().to_representation(instance)
        details = {key: value for key, value in instance.items() if key not in data}
        return {'check': data['check'], **details, 'ok': data['ok'], 'failures': data['failures']}


class ResidueProfileSerializer(serializers.Serializer):
    pair = serializers.CharField()
    mu = RationalField()
    lambda0 = RationalField(source='lam0')
    base = serializers.IntegerField()
    top = serializers.IntegerField()
    expected_count = serializers.IntegerField()
    in_range = serializers.BooleanField()


class ResidueResultSerializer(serializers.Serializer):
    """Output of the `residue` command."""

    profile = ResidueProfileSerializer()
    order = serializers.IntegerField()
    structural_order = serializers.IntegerField()
    operator = PolyOperatorSerializer()
    report = ReportSerializer(required=False)
