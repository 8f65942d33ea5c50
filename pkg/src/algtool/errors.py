"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` so the CLI can emit
``{code, message}`` payloads without string matching.
"""


class AlgtoolError(Exception):
    code = "error"


class ModulusError(AlgtoolError, ValueError):
    """Modulus is not an odd prime, or two values live over different primes."""

    code = "modulus"


class RingMismatchError(AlgtoolError, ValueError):
    """Operands belong to different polynomial rings or coefficient fields."""

    code = "ring-mismatch"


class ArityError(AlgtoolError, ValueError):
    """Wrong number of coordinates / variables for the requested operation."""

    code = "arity"


class ResourceLimitError(AlgtoolError, RuntimeError):
    """A degreewise computation would exceed the configured cell cap."""

    code = "resource"


class StabilityError(AlgtoolError, ValueError):
    """Relation space is not stable under the requested group action."""

    code = "stability"


class PoleError(AlgtoolError, ArithmeticError):
    """Denominator vanishes while the numerator does not."""

    code = "pole"


class IndeterminateError(AlgtoolError, ArithmeticError):
    """0/0 parameter value; the caller hit a singular parameter."""

    code = "indeterminate"


class ConditioningError(AlgtoolError, RuntimeError):
    """Numeric factorization inconsistent with the stated rank."""

    code = "conditioning"


class SamplingError(AlgtoolError, RuntimeError):
    """Root finding / point sampling failed after the configured retries."""

    code = "sampling"
