"""Exception hierarchy shared by all satdelay modules."""


class SatDelayError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(SatDelayError, ValueError):
    """Invalid configuration value or argument."""


class RoutingError(SatDelayError):
    """Greedy route search got stuck before reaching the destination satellite.

    Attributes:
        stuck_at: the satellite id whose crosslink neighbors were all visited.
    """

    def __init__(self, message: str, stuck_at=None):
        super().__init__(message)
        self.stuck_at = stuck_at


class ScenarioError(ConfigError):
    """Malformed simulation scenario file or parameters."""
