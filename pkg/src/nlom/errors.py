"""Exception types raised while reading, building and realizing NLML models."""

from __future__ import annotations


class NlomError(Exception):
    """Base class for every domain error raised by this package."""

    code = "NlomError"


class MarkupError(NlomError):
    """Malformed NLML text. ``offset`` is the UTF-8 byte offset of the problem."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class UnbalancedTag(MarkupError):
    code = "UnbalancedTag"


class UnterminatedTag(MarkupError):
    code = "UnterminatedTag"


class IllegalTagName(MarkupError):
    code = "IllegalTagName"


class SchemaError(NlomError):
    code = "SchemaError"

    def __init__(self, message: str, issues: list | None = None) -> None:
        super().__init__(message)
        self.issues = list(issues or [])


class UnsupportedComplexity(NlomError):
    code = "UnsupportedComplexity"


class EmptyVerbPhrases(NlomError):
    code = "EmptyVerbPhrases"


class UnknownClauseType(NlomError):
    code = "UnknownClauseType"


class MissingParent(NlomError):
    code = "MissingParent"


class AlreadySet(NlomError):
    code = "AlreadySet"


class MissingModifiedNP(NlomError):
    code = "MissingModifiedNP"


class UnrealizableMood(NlomError):
    code = "UnrealizableMood"


class MissingObject(NlomError):
    code = "MissingObject"


class MissingPredicateAdjective(NlomError):
    code = "MissingPredicateAdjective"
