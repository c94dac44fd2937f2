"""Exception hierarchy shared by the whole package."""


class TensorDiracError(Exception):
    """Base class for all errors raised by tensordirac."""


class RankError(TensorDiracError, ValueError):
    """Tensor ranks are incompatible with the requested operation."""


class OrientationError(TensorDiracError, ValueError):
    """Binary field operation on fields expressed in differently oriented frames."""


class PreconditionError(TensorDiracError, ValueError):
    """An input violates a documented precondition (reality, k_3 = 0, A_3 = 0, ...)."""


class ChargeUndefinedError(TensorDiracError):
    """The charge witness is not a constant scalar."""


class ChargeDegenerateError(TensorDiracError):
    """The charge witness vanishes identically."""


class ScenarioError(TensorDiracError, ValueError):
    """A scenario file could not be parsed or failed validation."""
