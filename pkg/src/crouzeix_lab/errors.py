"""Exception hierarchy shared by all modules.

ValueError subclasses signal bad inputs (rejected before any computation),
RuntimeError subclasses signal failures discovered during computation.
"""


class InputError(ValueError):
    """Input data is malformed (non-finite entries, bad file contents)."""


class ParameterError(ValueError):
    """A parameter is outside its documented range."""


class SizeError(ParameterError):
    """Problem size exceeds what the method can enumerate."""


class DomainError(ValueError):
    """Inputs are valid but the operation is undefined for them."""


class PreconditionError(ValueError):
    """A documented operation precondition does not hold."""


class NumericalError(RuntimeError):
    """An iteration diverged or a linear-algebra backend failed.

    Carries optional diagnostics (iteration traces, worst offenders).
    """

    def __init__(self, msg, diagnostics=None):
        super().__init__(msg)
        self.diagnostics = diagnostics


class InvariantError(RuntimeError):
    """A data-structure invariant was found violated at use time."""


class InconsistencyError(RuntimeError):
    """Measured quantities contradict a hypothesis the caller asserted."""
