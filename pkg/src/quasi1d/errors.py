"""Exception types shared across the solver suite."""


class QuadratureError(Exception):
    """Radial quadrature failed a build-time exactness check."""


class ConvergenceError(Exception):
    """An iterative solve stopped without reaching its tolerance.

    Carries the trailing residual history when available.
    """

    def __init__(self, message, history=None):
        super().__init__(message)
        self.history = list(history) if history is not None else []


class ConstraintViolation(Exception):
    """The gradient flow left the admissible region (should not happen
    for trapped negative-energy states)."""


class BlowUpError(Exception):
    """Time propagation produced non-finite values; blow-up suspected.

    Attributes
    ----------
    last_valid_time : float
        Last save time with finite data.
    trajectory : Trajectory or None
        The partial trajectory up to ``last_valid_time``.
    """

    def __init__(self, message, last_valid_time=0.0, trajectory=None):
        super().__init__(message)
        self.last_valid_time = last_valid_time
        self.trajectory = trajectory


class StateFormatError(Exception):
    """A state file is malformed or has an unsupported format version."""
