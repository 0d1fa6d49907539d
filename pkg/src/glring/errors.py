"""Exception types shared across the package."""


class InvalidArgument(ValueError):
    """An argument is outside the domain of the operation."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed its configured size budget."""


class PaperParseError(ValueError):
    """Malformed text in the paper's table notation."""

    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
