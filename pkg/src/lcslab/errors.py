"""Exception hierarchy.

Every error raised on bad *mathematical* input derives from
:class:`LcsLabError`; the CLI maps those to the "input data" exit code.
"""


class LcsLabError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(LcsLabError, ValueError):
    pass


class NotSquare(LcsLabError, ValueError):
    pass


class NotSkewSymmetric(LcsLabError, ValueError):
    pass


class ZeroPolynomial(LcsLabError, ValueError):
    pass


class SingularMatrix(LcsLabError, ValueError):
    pass


class JacobiViolation(LcsLabError):
    """Jacobi fails; ``violations`` lists ``((i, j, k), defect_vector)``."""

    def __init__(self, violations, offset=1):
        self.violations = list(violations)
        triples = ", ".join(
            "(%d,%d,%d)" % tuple(t + offset for t in ijk) for ijk, _ in self.violations
        )
        super().__init__("Jacobi identity fails on basis triples " + triples)


class ThetaNotClosed(LcsLabError):
    def __init__(self, dtheta=None):
        self.dtheta = dtheta
        super().__init__("the 1-form theta is not closed (d theta = %s)" % (dtheta,))


class ThetaZero(LcsLabError):
    def __init__(self):
        super().__init__("theta must be nonzero")


class NotClosed(LcsLabError):
    """The form handed to a potential solver is not d_theta-closed."""

    def __init__(self, defect=None):
        self.defect = defect
        super().__init__("form is not d_theta-closed (defect %s)" % (defect,))


class NotLcs(LcsLabError):
    def __init__(self, defect):
        self.defect = defect
        super().__init__("d omega != theta ^ omega; defect d omega - theta ^ omega = %s" % (defect,))


class Degenerate(LcsLabError):
    def __init__(self, kernel=()):
        self.kernel = list(kernel)
        super().__init__("2-form is degenerate (Pfaffian 0)")


class NotTransversal(LcsLabError):
    def __init__(self, value):
        self.value = value
        super().__init__("theta(A) = %s, expected 1" % (value,))


class EvenDimension(LcsLabError):
    def __init__(self, n):
        super().__init__("contact structures need odd dimension, got %d" % n)


class NotContact(LcsLabError):
    def __init__(self, eta=None):
        self.eta = eta
        super().__init__("eta ^ (d eta)^n vanishes: %s is not a contact form" % (eta,))


class NotADerivation(LcsLabError):
    """``defects`` lists ``((i, j), defect_vector)`` for failing basis pairs."""

    def __init__(self, defects, offset=1):
        self.defects = list(defects)
        pairs = ", ".join("(%d,%d)" % (i + offset, j + offset) for (i, j), _ in self.defects)
        super().__init__("matrix is not a derivation; fails on pairs " + pairs)


class EtaDNotZero(LcsLabError):
    def __init__(self, row):
        self.row = row
        super().__init__("eta o D must vanish, got %s" % (row,))


class NotFirstKind(LcsLabError):
    pass


class NotSymplectic(LcsLabError):
    pass


class NotSymplecticDerivation(LcsLabError):
    pass


class UnsupportedAngle(LcsLabError):
    pass


class NonCommutingDecomposition(LcsLabError):
    pass


class UnsupportedT0(LcsLabError):
    pass


class UnknownName(LcsLabError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class MissingParam(LcsLabError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class ParseError(LcsLabError, ValueError):
    """Syntax error in a Salamon string, form literal or matrix literal."""

    def __init__(self, msg, text="", pos=None):
        self.text = text
        self.pos = pos
        where = "" if pos is None else " at position %d" % pos
        super().__init__("%s%s in %r" % (msg, where, text))


class IndexOutOfRange(LcsLabError, ValueError):
    pass
