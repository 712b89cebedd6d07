"""Exception hierarchy shared by the kernel and the command-line front end."""

from __future__ import annotations


class MeadowError(Exception):
    """Base class for every error raised by this package."""


class UnsupportedSymbol(MeadowError):
    """A function symbol is outside the capability set of the model."""


class UnboundVariable(MeadowError):
    def __init__(self, name: str):
        super().__init__(f"unbound variable {name!r}")
        self.name = name


class InvalidPath(MeadowError):
    pass


class NotAPolynomial(MeadowError):
    def __init__(self, message: str, path: tuple[int, ...] = ()):
        super().__init__(message)
        self.path = path


class NotSigmaM(MeadowError):
    """Raised when a term uses sign, floor or ceiling where only the plain
    meadow signature is allowed."""

    def __init__(self, message: str, path: tuple[int, ...] = ()):
        super().__init__(message)
        self.path = path


class Multivariate(MeadowError):
    pass


class ZeroPolynomial(MeadowError):
    pass


class SizeBudgetExceeded(MeadowError):
    pass


class MeadowSyntaxError(MeadowError):
    def __init__(self, message: str, line: int, column: int, expected: frozenset[str] = frozenset()):
        where = f"line {line}, column {column}"
        if expected:
            message = f"{message} (expected one of: {', '.join(sorted(expected))})"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column
        self.expected = expected


class ProofError(MeadowError):
    pass


class RedexMismatch(ProofError):
    def __init__(self, expected: str, found: str):
        super().__init__(f"redex mismatch: expected {expected}, found {found}")
        self.expected = expected
        self.found = found


class UnknownRule(ProofError):
    pass


class ProofFormatError(ProofError):
    def __init__(self, message: str, source: str = "<string>", line: int = 0):
        super().__init__(f"{source}:{line}: {message}")
        self.source = source
        self.line = line
