"""Exception hierarchy shared by every module."""


class PermcheckError(Exception):
    """Base class for all engine errors."""


class InputError(PermcheckError, ValueError):
    """Malformed user input: bad cycle strings, group names, files."""


class DegreeMismatch(PermcheckError, ValueError):
    pass


class CapExceeded(PermcheckError):
    """A group or lattice is larger than the configured exhaustive-search cap."""

    def __init__(self, what: str, limit: int):
        super().__init__(f"{what} exceeds cap of {limit}")
        self.what = what
        self.limit = limit


class NotASubgroup(PermcheckError, ValueError):
    pass


class NotNormal(PermcheckError, ValueError):
    pass


class ImplicationViolated(PermcheckError, AssertionError):
    """A mathematically forced implication between class flags failed."""
