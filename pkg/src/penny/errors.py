"""Exception types shared across the package.

Two broad classes, matching the CLI exit-code contract: bad input that
could not even be interpreted (exit 2) versus a well-formed input that
fails a domain check (exit 1).
"""


class InputError(ValueError):
    """Unparseable or malformed input: bad file, unknown name, bad flag."""


class DomainError(ValueError):
    """Well-formed input violating a domain precondition or validation."""
