from __future__ import annotations


class ProofNetError(Exception):
    """Base class for every error raised by this package."""


class ParseError(ProofNetError):
    def __init__(self, message: str, line: int, column: int, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(expected))
        text = f"{line}:{column}: {message}"
        if self.expected:
            text += " (expected one of: " + ", ".join(self.expected) + ")"
        super().__init__(text)


class CompositionError(ProofNetError):
    """Two factors of a composition do not meet in the same formula."""

    def __init__(self, path: tuple[str, ...], upper_source, lower_target):
        self.path = path
        self.upper_source = upper_source
        self.lower_target = lower_target
        where = "/".join(path) if path else "<root>"
        super().__init__(
            f"composition mismatch at {where}: "
            f"{lower_target} ≠ {upper_source} "
            f"(target of the right factor vs source of the left factor)"
        )


class TheoryError(ProofNetError):
    pass


class SubstitutionError(ProofNetError):
    pass
