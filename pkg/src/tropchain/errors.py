class ShapeMismatchError(ValueError):
    """Tableau shape, path length and genus do not fit together."""


class NonGenericGraphError(ValueError):
    """A rank statement was requested on a graph that is not generic."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; this indicates a bug or an input
    outside the documented domain (for example a divisor that is not in the
    image of the tableau map)."""
