"""Exception taxonomy for the destabilization engine.

Validators report failures as data (see ``config.ValidationReport``); the
exceptions below are reserved for contract violations where continuing would
corrupt state or silently produce wrong answers.
"""


class EngineError(Exception):
    """Base class for all engine errors."""


# ---------------------------------------------------------------------------
# Chart kernel errors


class InconsistentSpec(EngineError):
    """A chart description is internally inconsistent (dangling crossing
    reference, non-simple arc, same-family crossing, bad token)."""


class NotASurface(EngineError):
    """The dart structure fails the involution/permutation/outer-face checks."""


class NonOrientableResult(EngineError):
    """A band attachment was requested with a side-matching bit that would
    produce a non-orientable surface."""


class UnknownArc(EngineError):
    """An arc label is not present in the chart."""


class WNotTransverse(EngineError):
    """A band-sum crosser does not meet the summing arc transversally."""


class WMeetsCMultiply(EngineError):
    """The summing arc meets the detour circle in more than one point."""


class CrossingCountNotOne(EngineError):
    """The two arcs of a v-minus-w surgery do not cross exactly once."""


# ---------------------------------------------------------------------------
# Forest errors


class RemoveDistinguishedRoot(EngineError):
    """Attempt to remove vertex 0 from a forest."""


class InactiveIndex(EngineError):
    """An operation referenced an inactive forest index."""


# ---------------------------------------------------------------------------
# Pairing / configuration errors


class OddRawCount(EngineError):
    """Raw crossing count with an overpass pair is odd; the separation
    property cannot hold, so the state is corrupt."""


class SelectedPairNotPeripheral(EngineError):
    """The maximal-index selection rule produced a pair that fails the
    peripherality check; an invariant has been violated upstream."""


class AsymmetricNonzero(EngineError):
    """Exactly one of the two pairing entries at a peripheral pair is zero,
    which contradicts coordination."""


class SeparationViolated(EngineError):
    """A component of an arc relative to an overpass pair has an end pattern
    outside the four permitted types."""


class GlueMismatch(EngineError):
    """Tie-end matching failed while building an overpass; the parallelism
    property was violated."""


class SigmaExceedsOne(EngineError):
    """A crossing-count entry in a hatted disk exceeded one, which signals a
    bigon between hatted arcs."""


# ---------------------------------------------------------------------------
# Reduction / driver errors


class NotPeripheral(EngineError):
    """reduce() was called at a pair that is not peripheral with unit
    pairing entries."""


class NotCrossSide(EngineError):
    """reduce() was called at a pair whose disks lie in the same manifold."""


class HypothesisViolated(EngineError):
    """One of the four disjointness hypotheses of the fundamental
    construction fails.  ``.number`` identifies which."""

    def __init__(self, number: int, message: str = ""):
        self.number = number
        super().__init__(f"hypothesis ({number}) violated{': ' + message if message else ''}")


class PostValidationFailed(EngineError):
    """The configuration produced by a rewrite failed full validation.  The
    engine never repairs; it aborts and dumps state."""


class InvariantLost(EngineError):
    """The asymmetric driver invariant failed after a reduction step."""


class MaxStepsExceeded(EngineError):
    """The driver exceeded its step budget; the monotone decrease invariant
    must have been violated."""


class SpecViolation(EngineError):
    """A seminal instance description violates its invariants."""
