"""Exception taxonomy shared across the package."""


class IsotropyError(Exception):
    """Base class for package-specific failures."""


class DegenerateFormError(IsotropyError):
    """A form with a zero coefficient (or no coefficients at all)."""


class AnisotropicFormError(IsotropyError):
    """The form has no nontrivial zero; carries one witnessing place."""

    def __init__(self, message, place=None):
        super().__init__(message)
        self.place = place


class UnsolvableEquationError(IsotropyError):
    """A subsolver received input violating its solvability precondition."""

    def __init__(self, message, place=None):
        super().__init__(message)
        self.place = place


class ResourceLimitError(IsotropyError):
    """A configured desk-scale cap was exceeded."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class FactorizationLimitError(ResourceLimitError):
    """Composite cofactor larger than the configured digit bound."""


class InternalSolverError(IsotropyError):
    """An invariant the algorithms guarantee was violated; indicates a bug."""
