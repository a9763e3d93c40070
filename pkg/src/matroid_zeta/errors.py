"""Exception types shared across the package.

The command line maps these onto exit codes: parse problems exit with 2,
size-guard refusals with 3, and violated internal invariants with 4.
"""


class MatroidZetaError(Exception):
    """Base class for all package errors."""


class ParseError(MatroidZetaError):
    """Malformed input: bad matroid description, unknown name, invalid axioms."""


class EmptyGroundSet(ParseError):
    """A matroid or minor would have an empty ground set."""


class TooLarge(MatroidZetaError):
    """Input exceeds a size guard; pass force=True (CLI: --force) to override."""


class InternalInvariantError(MatroidZetaError):
    """A relation that must hold by theorem failed; indicates a bug."""


class InexactDivision(InternalInvariantError):
    """A division that should be exact left a remainder."""


class NotComparable(MatroidZetaError):
    """Requested an interval [F1, F2] where F1 is not contained in F2."""


class NotExpandable(MatroidZetaError):
    """A rational function has no power-series expansion at T = 0."""


class PoleAtZero(MatroidZetaError):
    """A rational function in s was evaluated at a pole."""


class TranscriptionError(InternalInvariantError):
    """A built-in matroid failed its frozen self-check at construction."""
