"""Exception types shared across the package."""


class DomainError(Exception):
    """A mathematically meaningful input lies outside an operation's domain.

    Examples: a monomial ideal of infinite colength where a finite one is
    required, an inadmissible Hilbert function, a stratum bound outside its
    valid range. The CLI maps these to exit code 1.
    """


class ParseError(ValueError):
    """A syntax error in textual input, carrying the offending position."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos
