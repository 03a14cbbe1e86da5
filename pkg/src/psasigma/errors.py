"""Exception types shared across the package.

Every input problem a caller can trigger derives from DomainError, so the
command line layer can map it to a single exit code.  InternalCheckError is
different: it marks a broken internal guarantee (a constructed family failing
its own recognizer, say) and should never fire on any input.
"""


class DomainError(ValueError):
    """Base class for invalid caller input."""


class GraphFormatError(DomainError):
    """Malformed or non-canonical graph data (parse errors carry a location)."""


class UnknownVertexError(DomainError):
    """A vertex name that is not in the graph."""


class ForeignElementError(DomainError):
    """A partial conjugation that does not belong to the graph in question."""


class SameLetterError(DomainError):
    """Pair classification was asked about two PCs with the same acting letter."""


class MultiplicityError(DomainError):
    """A PC set violates the per-letter multiplicity required by the query."""


class ZeroCharacterError(DomainError):
    """The zero character has no class on the sphere and is rejected."""


class CentralLetterError(DomainError):
    """An inner-automorphism query about a vertex whose star is the whole graph."""


class BudgetExceededError(DomainError):
    """An exhaustive search was asked to exceed its configured budget."""


class InternalCheckError(RuntimeError):
    """A derived object failed a property it is guaranteed to have."""
