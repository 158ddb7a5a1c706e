"""Exception hierarchy shared by all modules.

Exceptions signal violated preconditions or malformed data.  Expected
negative outcomes of a *check* (a square failing to be a pullback, a link
failing to be unital, ...) are returned as certificates or reports, not
raised.
"""


class FinlinkError(Exception):
    """Base class for every error raised by this package."""


class BoundaryError(FinlinkError):
    """Domains/codomains of the given maps do not line up."""


class CompositionError(BoundaryError):
    """compose(f, g) with cod(g) != dom(f)."""


class NotCommutative(FinlinkError):
    """A square handed to a certification routine does not commute."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAGroup(FinlinkError):
    """A multiplication table failed a group law."""

    def __init__(self, law, witness=None):
        super().__init__(f"not a group: {law} fails" + (f" at {witness}" if witness else ""))
        self.law = law
        self.witness = witness


class InvalidGroupoid(FinlinkError):
    """Operation requires a groupoid that passes validation."""


class InvalidLink(FinlinkError):
    """Operation requires a link that passes validation."""


class InvalidSystem(FinlinkError):
    """Operation requires a magma system whose structural axioms hold."""


class NotClosed(FinlinkError):
    """Generated multiplication escapes the arrow carrier."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotWellDefined(FinlinkError):
    """A generated involution escapes its carrier."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotActionForm(FinlinkError):
    """The pairing map does not decompose through a translation action."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotLinkMorphism(FinlinkError):
    """Morphism lifting requires an actual link morphism."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ReconstructionError(FinlinkError):
    """The identity-assigning map of a reconstructed groupoid is inconsistent."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InternalInconsistency(FinlinkError):
    """A certified construction produced an invalid result; indicates a bug."""


class SizeLimitExceeded(FinlinkError):
    """Requested exhaustive computation exceeds the configured cap."""


class ParseError(FinlinkError):
    """Malformed document text."""


class ResolveError(ParseError):
    """Document references a set or element that is not declared."""
