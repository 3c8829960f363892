"""Exception types shared across the package.

Each class marks a distinct failure category so the command line layer can
map them to stable exit codes.
"""


class ParameterError(ValueError):
    """A scalar argument is out of its valid range (angle, axis, sigma, ...)."""


class DataShapeError(ValueError):
    """A matrix or vector has an incompatible shape for the operation."""


class ConstantColumnError(ValueError):
    """One or more columns have zero sample variance and cannot be z-scored."""

    def __init__(self, columns, names=None):
        self.columns = list(columns)
        self.names = list(names) if names is not None else None
        shown = self.names if self.names is not None else self.columns
        super().__init__(
            "constant column(s) with zero variance: %s" % ", ".join(str(c) for c in shown)
        )


class DataFormatError(ValueError):
    """A delimited input file could not be parsed into a numeric matrix."""


class AttackSetupError(ValueError):
    """An evaluation attack cannot be set up (e.g. too few known rows)."""
