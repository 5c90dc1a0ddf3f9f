class ConfigError(ValueError):
    """Invalid configuration value or file (CLI exit code 1)."""


class TrialSkipped(Exception):
    """A trial could not be measured; carries the reason for the skip."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason
