"""Exception hierarchy.

Every error carries a short ``code`` string naming the violated invariant;
the CLI prints that code so scripts can match on it.
"""


class BnmatchError(ValueError):
    """Base class for all input / invariant violations."""

    code = "Error"

    def __init__(self, message: str = ""):
        super().__init__(f"{self.code}: {message}" if message else self.code)


class OddCountError(BnmatchError):
    code = "OddCount"


class TooFewError(BnmatchError):
    code = "TooFew"


class NotStrictlyConvexError(BnmatchError):
    code = "NotStrictlyConvex"


class DuplicatePointError(BnmatchError):
    code = "DuplicatePoint"


class NotCcwError(BnmatchError):
    code = "NotCcw"


class NonFiniteError(BnmatchError):
    code = "NonFinite"


class BadIndexError(BnmatchError):
    code = "BadIndex"


class SharedEndpointError(BnmatchError):
    code = "SharedEndpoint"


class DegenerateSegmentError(BnmatchError):
    code = "DegenerateSegment"


class BadDomainError(BnmatchError):
    code = "BadDomain"


class TooLargeError(BnmatchError):
    code = "TooLarge"


class InvalidMatchingError(BnmatchError):
    code = "InvalidMatching"
