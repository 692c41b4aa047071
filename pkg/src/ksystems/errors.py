"""Exception types shared across the package.

The hierarchy mirrors how the command line maps failures to exit codes:
``InvalidInput`` covers malformed or rejected inputs (exit 2),
``ReconstructionError`` covers negative mathematical findings of the
facet reconstruction (exit 1), and ``BudgetError`` covers exhausted
search budgets (exit 3).
"""


class KSystemsError(Exception):
    """Base class for all package errors."""


class InvalidInput(KSystemsError):
    """A document or argument violates a stated precondition."""


class InvalidParams(InvalidInput):
    """Malformed parameters: bad types, ranges, or file schemas."""


class NotRegular(InvalidInput):
    """A graph is not d-regular, or a member set is not k-regular."""


class Disconnected(InvalidInput):
    """The graph is not connected."""


class DuplicateEdge(InvalidInput):
    """The edge list repeats an edge (in either endpoint order)."""


class SelfLoop(InvalidInput):
    """The edge list contains a loop."""


class FingerprintMismatch(InvalidInput):
    """A document is bound to a different graph than the one supplied."""


class KOutOfRange(InvalidInput):
    """The face dimension k lies outside the valid range for the graph."""


class KMismatch(InvalidInput):
    """Two documents that must share the same k do not."""


class EmptySubset(InvalidInput):
    """A vertex subset that must be non-empty is empty."""


class NotAcyclic(InvalidInput):
    """An operation requiring an acyclic orientation got a cyclic one."""


class DimensionTooSmall(InvalidInput):
    """The operation needs a higher-dimensional graph (typically d >= 3)."""


class NotSimple(InvalidInput):
    """Vertex/facet incidences are inconsistent with a simple polytope."""


class NoCoordinates(InvalidInput):
    """The instance carries no coordinates but the operation needs them."""


class DegenerateWeights(InvalidInput):
    """A weight vector gives two vertices the same value; perturb it."""


class DuplicateSet(InvalidInput):
    """A set system repeats a member set."""


class ReconstructionError(KSystemsError):
    """The 2-face input cannot come from a simple polytope (exit 1)."""


class NotCycleSystem(ReconstructionError):
    """The claimed 2-face system fails validation or has non-cycle members."""


class InconsistentTransport(ReconstructionError):
    """Facet reconstruction reached contradictory conclusions."""


class BudgetError(KSystemsError):
    """An exhaustive search exceeds its configured budget (exit 3)."""


class BudgetExceeded(BudgetError):
    """The orientation search space is larger than the budget allows."""


class CandidateCapExceeded(BudgetError):
    """Candidate enumeration produced more sets than the cap allows."""
