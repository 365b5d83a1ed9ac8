"""Exception types shared across modules."""


class CapacityError(RuntimeError):
    """An enumeration was asked to exceed its configured capacity bound."""
