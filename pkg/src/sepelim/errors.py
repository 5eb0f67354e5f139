"""Exception hierarchy shared across the package.

Mathematical refusals (a tuple is not separating, a matrix is not
unimodular, ...) are distinct from usage errors; the CLI maps the former
to exit code 2 and the latter to exit code 1.
"""


class SepelimError(Exception):
    """Base class for all package errors."""


class PolyParseError(SepelimError):
    """Syntax error while parsing a polynomial or a problem file."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ProblemFileError(SepelimError):
    """Structurally invalid problem file."""


class ZeroPolynomialError(SepelimError):
    """The zero polynomial has no degree / leading term."""


class NotHomogeneousError(SepelimError):
    """A weighted-homogeneous polynomial was required."""


class ConstantTermError(SepelimError):
    """A generator with nonzero constant term where membership in the
    irrelevant maximal ideal is required."""


class MembershipError(SepelimError):
    """A vector is not a member of the given module (refusal: "not a member")."""


class SeparatingError(SepelimError):
    """Mathematical refusal of a tuple search; the message is the exact
    refusal string the algorithms prescribe."""


class UMPError(SepelimError):
    """Base class for unimodular-matrix-pipeline refusals."""

    code = "UMP_ERROR"


class NotUnimodularError(UMPError):
    code = "NOT_UNIMODULAR"


class QSIncompleteError(UMPError):
    """The restricted Quillen-Suslin strategies could not assemble a free
    syzygy basis with unit determinant."""

    code = "QS_INCOMPLETE"


class RowspaceError(UMPError):
    """No free basis of a row space could be certified."""

    code = "ROWSPACE_NOT_FREE-BASIS"
