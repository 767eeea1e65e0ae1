"""Exception types shared across the package."""


class UsageError(ValueError):
    """A caller-supplied argument violates a documented precondition."""


class OutOfRangeError(ValueError):
    """A queried value lies outside the sieved range of a prime table."""
