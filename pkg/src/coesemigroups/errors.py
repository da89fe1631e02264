"""Exception hierarchy.

Every domain failure derives from :class:`SemigroupError`, so callers (and the
CLI) can catch one type. Each subclass is also a ``ValueError``.
"""

from __future__ import annotations


class SemigroupError(ValueError):
    """Base class for domain errors."""


class GcdNotOne(SemigroupError):
    """The generators have gcd > 1, so they do not span a numerical semigroup."""


class EmptyGenerators(SemigroupError):
    pass


class NotAnElement(SemigroupError):
    pass


class NotMinimalGenerator(SemigroupError):
    pass


class PairNotMinimal(SemigroupError):
    pass


class AlreadyFull(SemigroupError):
    """Raised when an operation needs a gap but the semigroup is N."""


class BadArguments(SemigroupError):
    pass


class NotCoe(SemigroupError):
    pass


class IsFullSemigroup(SemigroupError):
    pass


class KNotMember(SemigroupError):
    pass


class FrobExceeded(SemigroupError):
    pass


class GenusExceeded(SemigroupError):
    pass


class UnboundedInfiniteFamily(SemigroupError):
    """Traversal of an infinite tree was requested without any bound."""


class NotMed(SemigroupError):
    pass


class PairNotInS(SemigroupError):
    pass


class NotUniqueOddGenerator(SemigroupError):
    pass


class NotEd3Coe(SemigroupError):
    pass


class BoundTooLarge(SemigroupError):
    pass
