"""Exception types shared across the package."""


class StructuralError(ValueError):
    """Malformed geometric data: rank mismatch, empty polyhedron, bad JSON shape."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class StabilizationError(RuntimeError):
    """An enumeration did not stabilize within its box cap."""

    def __init__(self, cap, detail=""):
        self.cap = cap
        self.detail = detail
        message = f"enumeration did not stabilize within box cap {cap}"
        if detail:
            message += f": {detail}"
        super().__init__(message)
