"""Exception types raised across the package.

Every failure mode gets its own class so callers (and the CLI exit-code
mapping) can branch on outcomes without parsing messages.
"""


class DesignForgeError(Exception):
    """Base class for all package errors."""


class InvalidShiftError(DesignForgeError, ValueError):
    """The coset-defining shift must be a nonzero element of the field."""


class RangeError(DesignForgeError, ValueError):
    """An exponent or block size is outside its supported range."""


class ArgumentError(DesignForgeError, ValueError):
    """Arguments violate a documented precondition."""


class BudgetExceededError(DesignForgeError, RuntimeError):
    """Enumeration hit its node budget before finishing.

    Raised instead of truncating output; carries the bound that was hit.
    """

    def __init__(self, what: str, budget: int):
        super().__init__(
            f"{what}: exceeded the enumeration budget of {budget} nodes"
        )
        self.what = what
        self.budget = budget


class NoRepresentativeError(DesignForgeError):
    """Every element of the block has its shifted partner in the block too,
    so no representative exists."""


class FamilyError(DesignForgeError, ValueError):
    """A block does not satisfy the defining predicate of its family."""


class MapViolationError(DesignForgeError):
    """A block map produced an image outside its declared codomain.

    Carries the offending input block, the computed image, and a reason,
    so callers can fall back to counting arguments instead of crashing.
    """

    def __init__(self, block, image, reason: str):
        super().__init__(f"map violation on {block}: {reason} (image {image})")
        self.block = block
        self.image = image
        self.reason = reason


class ShapeError(DesignForgeError, ValueError):
    """Blocks or groups do not share a uniform size, or a block repeats a point."""


class ContainmentError(DesignForgeError, ValueError):
    """A block or group uses a point outside the declared point set."""


class PartitionError(DesignForgeError, ValueError):
    """A group is malformed (it repeats a point)."""


class StateError(DesignForgeError, RuntimeError):
    """The operation needs a passing report."""


class ConsistencyError(DesignForgeError, ArithmeticError):
    """An exact-arithmetic identity failed.

    The recurrences only ever divide when divisibility is guaranteed, so
    this signals an implementation bug rather than bad input.
    """
