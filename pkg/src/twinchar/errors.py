"""Exception taxonomy shared across the library.

Two bases matter to callers: ``InvalidInput`` (malformed or inconsistent
data, CLI exit code 2) and ``Unsupported`` (well-formed data outside what
the algorithms accept, CLI exit code 3).
"""


class TwiningError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 2


class InvalidInput(TwiningError):
    exit_code = 2


class Unsupported(TwiningError):
    exit_code = 3


class NotGCM(InvalidInput):
    """Matrix violates a generalized Cartan matrix axiom."""


class NotSymmetrizable(InvalidInput):
    """No positive diagonal symmetrizer exists (inconsistent cycle)."""


class NotFiniteType(Unsupported):
    """Operation requires a finite-type Cartan matrix."""


class NotDominant(InvalidInput):
    """Weight has a negative fundamental coordinate."""


class NotDiagramAutomorphism(InvalidInput):
    """Permutation does not preserve the Cartan matrix."""


class LinkingConditionFailed(Unsupported):
    """An orbit row sum is outside {1, 2}; folding is undefined."""


class UnsupportedOrbitShape(Unsupported):
    """An orbit's induced subdiagram is not a union of single nodes and single edges."""


class NotSymmetricWeight(InvalidInput):
    """Weight is not fixed by the diagram automorphism."""


class NotInWTilde(InvalidInput):
    """Weyl element does not commute with the automorphism action."""


class NotReduced(InvalidInput):
    """Word is not a reduced expression where one is required."""


class NotTauStable(InvalidInput):
    """Subspace is not stable under the twining map."""


class NoDescentFound(TwiningError):
    """Descent peeling got stuck; signals inconsistent folding data."""


class TooLarge(Unsupported):
    """Instance exceeds the configured word-count cap."""
