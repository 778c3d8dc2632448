"""Exception types shared across the package."""

from __future__ import annotations


class NafabaError(Exception):
    """Base class for every error raised by this package."""


class DomainError(NafabaError, ValueError):
    """An interpretation or assumption set mentions symbols outside its owner."""


class EnumerationLimitError(NafabaError):
    def __init__(self, size: int, bound: int):
        super().__init__(
            f"enumeration bound exceeded: {size} symbols > bound {bound} "
            f"(raise it with --bound or NAFABA_BOUND)"
        )
        self.size = size
        self.bound = bound


class FragmentError(NafabaError):
    """Input lies outside the fragment an operation is defined for.

    ``clause`` names the violated condition, e.g. ``"(2)"`` for a
    non-injective contrary map in the LP-ABA fragment.
    """

    def __init__(self, message: str, clause: str | None = None):
        super().__init__(f"{message} [clause {clause}]" if clause else message)
        self.clause = clause


class RestrictionError(FragmentError):
    """A sentence is neither an atom nor a naf-negated atom."""


class ParseError(NafabaError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column

    @property
    def location(self) -> tuple[int, int]:
        return (self.line, self.column)
