"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Raised when a parameter set or config file violates a documented bound.

    The message names the offending parameter and the violated constraint so
    experiment definitions fail loudly instead of running with silent typos.
    """
