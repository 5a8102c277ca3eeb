from abc import abstractmethod

from lognormal_laplace.utils.logger import LogArgs


class UserMistakes:
    exit_code = 2
    error_owner = 'user'


class NumericMistakes:
    exit_code = 3
    error_owner = 'numerics'


class BaseLaplaceError(Exception):
    """common error for transform evaluations"""

    @property
    @abstractmethod
    def msg_to_log(self):
        ...

    @property
    @abstractmethod
    def exit_code(self):
        ...

    @property
    @abstractmethod
    def error_owner(self):
        ...

    def __init__(self, source: str, message: str = None, **kwargs):
        self.source = source
        self.message = message
        self.kwargs = kwargs

    def __str__(self):
        if self.message:
            return f'{self.msg_to_log}: {self.message}. Source: {self.source}'
        return f'{self.msg_to_log}. Source: {self.source}'

    def __repr__(self):
        return f'{self.__class__.__name__}({self.source}, {self.message}, {self.kwargs})'

    def to_dict(self):
        return {
            'source': self.source,
            'reason': self.message,
            'error_owner': self.error_owner,
            **self.kwargs,
        }

    def to_log_args(self):
        return (
            f'{self.msg_to_log.lower()}. Source: %({LogArgs.source})s',
            {LogArgs.source: self.source},
        )

    def with_context(self, **kwargs) -> 'BaseLaplaceError':
        self.kwargs.update(kwargs)
        return self


class ValidationFailedError(UserMistakes, BaseLaplaceError):
    """Arguments fail validation before any computation starts"""

    msg_to_log = 'Validation failed'


class BranchCutError(UserMistakes, BaseLaplaceError):
    """Interior point placed on (-inf, 0]"""

    msg_to_log = 'z on branch cut or at origin'


class PoleError(UserMistakes, BaseLaplaceError):
    """Gamma evaluated at a nonpositive integer"""

    msg_to_log = 'Argument at a pole of gamma'


class DegreeError(UserMistakes, BaseLaplaceError):
    """Polynomial degree or coefficient table beyond its guard"""

    msg_to_log = 'Degree beyond supported range'


class ContourError(UserMistakes, BaseLaplaceError):
    """Vertical contour left of the gamma poles or badly resolved"""

    msg_to_log = 'Invalid integration contour'


class MeshError(UserMistakes, BaseLaplaceError):
    """Boundary mesh with too few nodes"""

    msg_to_log = 'Invalid mesh'


class NonConvergence(NumericMistakes, BaseLaplaceError):
    """Series did not meet its tail bound within the term budget"""

    msg_to_log = 'Series did not converge'


class ErfcOverflowError(NumericMistakes, BaseLaplaceError, OverflowError):
    """erfc overflows; the scaled erfcx in log-domain is required"""

    msg_to_log = 'erfc overflow'


class NonFiniteError(NumericMistakes, BaseLaplaceError):
    """A special function produced NaN or infinity"""

    msg_to_log = 'Non-finite value'


class QuadratureFailure(NumericMistakes, BaseLaplaceError):
    """Adaptive quadrature cannot meet its tolerance within budget"""

    msg_to_log = 'Quadrature failed'


class MeshTooNarrow(NumericMistakes, BaseLaplaceError):
    """Filon mesh truncates a non-negligible part of the integrand"""

    msg_to_log = 'Mesh too narrow'


class TruncationError(NumericMistakes, BaseLaplaceError):
    """Contour truncation unreachable within the node budget"""

    msg_to_log = 'Contour truncation not reachable'


class TermOverflow(NumericMistakes, BaseLaplaceError):
    """Series term out of double range even in log-domain"""

    msg_to_log = 'Series term overflow'


class TailError(NumericMistakes, BaseLaplaceError):
    """Boundary mesh stops before the inversion integrand is negligible"""

    msg_to_log = 'Boundary mesh tail not negligible'


class DivisionError(NumericMistakes, BaseLaplaceError):
    """Logarithmic derivative of a vanishing transform"""

    msg_to_log = 'Transform too small to divide by'


exit_codes = {
    UserMistakes.exit_code: {
        'description': 'invalid input, one of: %s'
        % ', '.join(
            err.msg_to_log
            for err in (
                ValidationFailedError,
                BranchCutError,
                PoleError,
                DegreeError,
                ContourError,
                MeshError,
            )
        )
    },
    NumericMistakes.exit_code: {
        'description': 'numeric failure, one of: %s'
        % ', '.join(
            err.msg_to_log
            for err in (
                NonConvergence,
                ErfcOverflowError,
                NonFiniteError,
                QuadratureFailure,
                MeshTooNarrow,
                TruncationError,
                TermOverflow,
                TailError,
                DivisionError,
            )
        )
    },
}
