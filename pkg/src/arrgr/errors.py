"""Exception types shared across the toolkit."""


class InputError(ValueError):
    """Invalid user-supplied data: bad forms, indices, files or sizes."""


class DuplicateFormError(InputError):
    """Two forms describe the same hyperplane (up to a scalar)."""


class NotASymmetryError(InputError):
    """An affine map does not permute the arrangement's hyperplanes."""


class NotACharacterError(InputError):
    """A class function has a negative or non-integer irreducible multiplicity."""


class ResourceBoundError(RuntimeError):
    """A computation exceeds the configured size bound."""


class ConsistencyError(RuntimeError):
    """Internal invariant violated; indicates a bug, not bad input."""
