class LieSditError(ValueError):
    """
    Base class of every error raised by lie_sdit.
    """
    code = 'error'


class InvalidField(LieSditError):
    """
    Raised when a field name or characteristic is not Q or GF(p)
    with p prime.
    """
    code = 'invalid-field'


class FieldMismatch(LieSditError):
    """
    Raised when operands live over different scalar fields.
    """
    code = 'field-mismatch'


class ShapeMismatch(LieSditError):
    """
    Raised when matrix or vector shapes are incompatible.
    """
    code = 'shape-mismatch'


class AmbientMismatch(LieSditError):
    """
    Raised when subspaces or spaces do not share an ambient dimension.
    """
    code = 'ambient-mismatch'


class SubspaceGuardExceeded(LieSditError):
    """
    Raised when an exhaustive enumeration would exceed its guard.
    """
    code = 'guard-exceeded'


class InvalidMatrixSpace(LieSditError):
    """
    Raised when a matrix space cannot be built from the given basis.
    """
    code = 'invalid-space'


class NotALieAlgebra(LieSditError):
    """
    Raised when a matrix space is not closed under the commutator.
    The first failing basis pair (0-based) is kept in ``pair``.
    """
    code = 'not-closed'

    def __init__(self, message, pair=None):
        super(NotALieAlgebra, self).__init__(message)
        self.pair = pair


class NotASubalgebra(LieSditError):
    """
    Raised when a coefficient subspace is not closed under the bracket.
    """
    code = 'not-subalgebra'


class DescentStalled(RuntimeError):
    """
    Raised when the Cartan descent finds no smaller Fitting null component
    after every allowed enlargement of the trial values.
    """
    code = 'descent-stalled'


class NotSemisimple(LieSditError):
    """
    Raised when an operation needs a semisimple algebra and the Killing
    form is degenerate.
    """
    code = 'not-semisimple'


class NonCommutingCartan(LieSditError):
    """
    Raised when the matrices given as a Cartan basis do not commute.
    """
    code = 'non-commuting'


class UnsupportedSpectrum(LieSditError):
    """
    Raised when a characteristic polynomial has an irreducible factor of
    degree above one over the rationals. The factor is kept in ``factor``.
    """
    code = 'unsupported-spectrum'

    def __init__(self, message, factor=None):
        super(UnsupportedSpectrum, self).__init__(message)
        self.factor = factor


class UnsupportedField(LieSditError):
    """
    Raised when an operation is only defined over the rationals or only
    over a prime field.
    """
    code = 'unsupported-field'


class ChainNotInvariant(LieSditError):
    """
    Raised when a flag of subspaces is not increasing or not invariant
    under the space.
    """
    code = 'chain-not-invariant'


class IdenticallyZeroCertificate(LieSditError):
    """
    Raised when a kernel certificate has only zero coefficients.
    """
    code = 'zero-certificate'


class NotAlternating(LieSditError):
    """
    Raised when a matrix expected to be alternating is not.
    """
    code = 'not-alternating'


class DegreeGuardExceeded(LieSditError):
    """
    Raised when a certificate search asks for a degree above the cap.
    """
    code = 'degree-guard'


class InvalidExampleSpec(LieSditError):
    """
    Raised when an example family or its parameters are invalid.
    """
    code = 'invalid-example'


class InvalidConfiguration(LieSditError):
    """
    Raised when solver configuration values are invalid.
    """
    code = 'invalid-config'


class SpaceFileError(LieSditError):
    """
    Raised when a space file cannot be parsed. ``location`` names the
    offending line/column or JSON field path.
    """
    code = 'bad-space-file'

    def __init__(self, message, location=None):
        if location is not None:
            message = '{0}: {1}'.format(location, message)
        super(SpaceFileError, self).__init__(message)
        self.location = location
