"""Domain errors shared across the package.

Every error carries a stable ``kind`` slug plus an optional integer
``detail`` (a position, index or excess) so front ends can report failures
in the machine-parsable form ``error:<kind>:<detail>``.
"""


class DyckError(Exception):
    """Base class for all domain errors raised by this package."""

    kind = "error"

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail


class InvalidCharacter(DyckError):
    """Input text contains something other than '(', ')' or ASCII whitespace."""

    kind = "invalid-character"

    def __init__(self, position, char):
        super().__init__(f"invalid character {char!r} at index {position}", position)
        self.position = position
        self.char = char


class NegativePrefix(DyckError):
    """Closing parentheses outnumber opening ones in some prefix.

    ``position`` counts parenthesis steps consumed when the balance first
    went negative, i.e. the index of the first path node with negative
    unbalance.
    """

    kind = "negative-prefix"

    def __init__(self, position):
        super().__init__(f"balance goes negative after {position} step(s)", position)
        self.position = position


class Unbalanced(DyckError):
    """The word ended with more opening than closing parentheses."""

    kind = "unbalanced"

    def __init__(self, final_excess):
        super().__init__(f"word ends with {final_excess} unmatched '('", final_excess)
        self.final_excess = final_excess


class MalformedPath(DyckError):
    """A node sequence that is not a valid path: wrong origin, a delta that
    is neither an up-step nor a down-step, or negative unbalance."""

    kind = "malformed-path"

    def __init__(self, index, reason="not a valid path"):
        super().__init__(f"node {index}: {reason}", index)
        self.index = index


class ParityViolation(DyckError):
    """Coordinates i and j must have the same parity."""

    kind = "parity-violation"

    def __init__(self, message="i and j must have equal parity"):
        super().__init__(message)


class NotInLattice(DyckError):
    """Coordinates do not satisfy the lattice constraints."""

    kind = "not-in-lattice"

    def __init__(self, message="point is not a lattice node"):
        super().__init__(message)


class UnboundedRegion(DyckError):
    """The infinite lattice cannot be enumerated."""

    kind = "unbounded-region"

    def __init__(self, message="region has no bound; cannot enumerate"):
        super().__init__(message)


class InconsistentProjection(DyckError):
    """A projected point cannot be lifted: its completion is non-integral or
    a redundant coordinate contradicts the others."""

    kind = "inconsistent-projection"

    def __init__(self, index, reason="point is inconsistent"):
        super().__init__(f"point {index}: {reason}", index)
        self.index = index


class RankOutOfRange(DyckError):
    """Rank must satisfy 0 <= rank < catalan(n)."""

    kind = "rank-out-of-range"

    def __init__(self, message="rank out of range"):
        super().__init__(message)


class WrongArity(DyckError):
    """An axis set of the wrong size for the requested operation."""

    kind = "wrong-arity"

    def __init__(self, message="wrong number of axes"):
        super().__init__(message)
