"""Exception hierarchy shared by all shearlab modules."""


class ShearLabError(Exception):
    """Base class for all shearlab errors."""


class NotSpd(ShearLabError, ValueError):
    """A tensor expected to be symmetric positive definite is not."""


class Singular(ShearLabError, ValueError):
    """A deformation gradient has non-positive (or vanishing) determinant."""


class NotPureShear(ShearLabError, ValueError):
    """A tensor does not match the pure shear pattern s*(e1 x e2 + e2 x e1)."""

    def __init__(self, message, residual=float("nan")):
        super().__init__(message)
        self.residual = residual


class NotCommuting(ShearLabError, ValueError):
    """A symmetric tensor is not of the form [[p, q, 0], [q, p, 0], [0, 0, r]]."""

    def __init__(self, message, residual=float("nan")):
        super().__init__(message)
        self.residual = residual


class DegenerateForm(ShearLabError, ValueError):
    """A commuting form violates p > |q|, r > 0."""


class InvalidStretch(ShearLabError, ValueError):
    """A principal stretch is not strictly positive."""


class InvalidParameter(ShearLabError, ValueError):
    """A constitutive parameter is out of range or unknown."""


class UnsupportedParameterization(ShearLabError, TypeError):
    """The model does not expose the energy/stress parameterization required."""


class NonFinite(ShearLabError, ArithmeticError):
    """A function evaluation returned a non-finite value."""


class NonConvergence(ShearLabError, RuntimeError):
    """An iterative solve did not reach its tolerance.

    ``result`` carries the best iterate found.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result
