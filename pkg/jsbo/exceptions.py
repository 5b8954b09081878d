from rest_framework import status
from rest_framework.exceptions import APIException


class JsboError(APIException):
    """Base class for every condition signalled by the workbench."""

    status_code = status.HTTP_400_BAD_REQUEST
    default_detail = 'Computation failed.'
    default_code = 'jsbo_error'

    def __init__(self, detail=None, code=None):
        super().__init__(detail=detail, code=code or self.default_code)
        self.code = code or self.default_code

    @property
    def payload(self):
        return {'error': str(self.detail), 'code': self.code}


class InvalidArgument(JsboError):
    default_detail = 'Invalid argument.'
    default_code = 'invalid_argument'


class ShapeMismatch(JsboError):
    default_detail = 'Operands have incompatible shapes.'
    default_code = 'shape_mismatch'


class Singular(JsboError):
    """Raised when a Bergman operator is not invertible at a concrete point."""

    default_detail = 'Bergman operator is singular at this point.'
    default_code = 'singular'


class SqrtFailure(JsboError):
    """The skew determinant was not a perfect square."""

    default_detail = 'Polynomial square root failed.'
    default_code = 'sqrt_failure'


class Unsupported(JsboError):
    default_detail = 'Unsupported domain, pair or parameters.'
    default_code = 'unsupported'


class Uncalibrated(JsboError):
    default_detail = 'The Lie algebra action has not been calibrated for this domain.'
    default_code = 'uncalibrated'


class CalibrationAmbiguous(JsboError):
    default_detail = 'More than one action convention satisfies the bracket relations.'
    default_code = 'calibration_ambiguous'


class CalibrationFailure(JsboError):
    default_detail = 'No action convention satisfies the bracket relations.'
    default_code = 'calibration_failure'


class LimitVanishes(JsboError):
    default_detail = 'The limit is zero with positive remaining order.'
    default_code = 'limit_vanishes'


class LimitDiverges(JsboError):
    default_detail = 'The limit has a remaining pole.'
    default_code = 'limit_diverges'


class OrderTooSmall(JsboError):
    default_detail = 'A retained term diverges at this residue order.'
    default_code = 'order_too_small'


def error_payload(exc):
    """Machine-readable diagnostic for any exception."""
    if isinstance(exc, JsboError):
        return exc.payload
    return {'error': str(exc), 'code': type(exc).__name__.lower()}
