"""Exception hierarchy shared by the parsers and the invariant code."""


class ChordIndexError(Exception):
    """Base class for every error raised by this package."""


class DiagramFormatError(ChordIndexError, ValueError):
    """Input text or event data does not describe a valid diagram."""


class MissingGenusHeader(DiagramFormatError):
    pass


class MalformedToken(DiagramFormatError):
    pass


class DuplicatePassage(DiagramFormatError):
    pass


class UnpairedPassage(DiagramFormatError):
    """A crossing id has an over-passage but no under-passage, or vice versa."""


class SignMismatch(DiagramFormatError):
    pass


class SideIndexOutOfRange(DiagramFormatError):
    pass


class WrongLength(DiagramFormatError):
    pass


class NonInteger(DiagramFormatError):
    pass


class LengthMismatch(ChordIndexError, ValueError):
    pass


class GenusMismatch(ChordIndexError, ValueError):
    pass


class UnknownCrossing(ChordIndexError, KeyError):
    pass


class UnknownChord(ChordIndexError, KeyError):
    pass


class NotAdmissible(ChordIndexError, ValueError):
    """The class has nonzero algebraic intersection with the knot.

    ``intersection`` carries the offending intersection number.
    """

    def __init__(self, message, intersection=None):
        super().__init__(message)
        self.intersection = intersection


class NotMod2Admissible(NotAdmissible):
    pass


class SiteNotEligible(ChordIndexError, ValueError):
    pass
