"""Exception types shared across the package."""


class DiagrammaError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(DiagrammaError):
    """A text file or word string could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


# -- presentations ----------------------------------------------------------

class DuplicateLetter(DiagrammaError):
    pass


class EmptyWord(DiagrammaError):
    pass


class UnknownLetter(DiagrammaError):
    pass


class TrivialRelation(DiagrammaError):
    pass


class ReversedDuplicateRelation(DiagrammaError):
    pass


class BadArity(DiagrammaError):
    pass


# -- subset families and graphs ---------------------------------------------

class EmptySubset(DiagrammaError):
    pass


class OutOfRange(DiagrammaError):
    pass


class DuplicateSubset(DiagrammaError):
    pass


class RealizationCheckFailed(DiagrammaError):
    """The constructed subset family does not realize the requested graph.

    This signals an internal bug, not bad input.
    """


# -- diagrams ----------------------------------------------------------------

class BadPosition(DiagrammaError):
    pass


class LabelMismatch(DiagrammaError):
    pass


class BadPermutation(DiagrammaError):
    pass


class InterfaceMismatch(DiagrammaError):
    pass


# -- graph products ----------------------------------------------------------

class IdentityElement(DiagrammaError):
    pass


class NoThetaContext(DiagrammaError):
    pass


class NotInImage(DiagrammaError):
    pass


# -- combination --------------------------------------------------------------

class MalformedGadget(DiagrammaError):
    pass


# -- virtual twin words --------------------------------------------------------

class NotPure(DiagrammaError):
    pass


class IndexOrder(DiagrammaError):
    pass


class OracleMismatch(DiagrammaError):
    """The diagram route and the group-word route disagree.

    Either answer may be wrong; this signals an internal bug.
    """
