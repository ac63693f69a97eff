"""
Exception hierarchy for bettistack.

Every error derives from both ``BettiStackError`` and ``ValueError`` so callers
can catch either the package-specific base or the builtin. The CLI maps any
``BettiStackError`` to exit code 2.
"""

from __future__ import annotations


class BettiStackError(ValueError):
    """Base class for all bettistack errors."""


class InvalidVertex(BettiStackError):
    """A face or generator references a vertex outside 1..n."""


class InvalidIdeal(BettiStackError):
    """Generators violate the squarefree-ideal invariants (not an antichain, bad width)."""


class LinearGeneratorUnsupported(BettiStackError):
    """
    A singleton is missing from the complex, i.e. the ideal would need a linear generator.

    The face/ideal bijection used throughout excludes linear terms.
    """


class VoidComplexError(BettiStackError):
    """The operation needs at least the empty face."""


class DimensionError(BettiStackError):
    """A homological dimension is outside -1..dim."""


class ComplexTooLarge(BettiStackError):
    """Vertex count exceeds a configured cap."""


class AmbientMismatch(BettiStackError):
    """Two objects that must share the variable count do not."""


class NotAnFVector(BettiStackError):
    """No simplicial complex (with all vertices present) attains the given face counts."""


class NotSameHilbertFunction(BettiStackError):
    """Diagrams were expected to share their diagonal alternating sums."""


class InvalidParameter(BettiStackError):
    """A numeric parameter is out of its documented range."""


class SearchCapExceeded(BettiStackError):
    """Exhaustive enumeration was requested beyond the configured vertex cap."""


class InvariantViolation(BettiStackError):
    """An internal consistency check failed; indicates a bug or corrupted input."""


class SettingsError(BettiStackError):
    """
    Raised when bettistack.yaml cannot be parsed or validated.

    Prefer raising this over raw ValidationError/KeyError so callers can surface
    a clean, user-friendly message.
    """


class InputFormatError(BettiStackError):
    """Malformed JSON or monomial text on an input surface."""
