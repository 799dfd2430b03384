"""Exception types shared across the package."""


class SgprimesError(Exception):
    """Base class for every error raised by this package."""


class OrderViolation(SgprimesError, ValueError):
    """Generator pair does not satisfy 0 < a < b."""


class NotCoprime(SgprimesError, ValueError):
    """Generator pair has gcd(a, b) != 1."""


class InputTooLarge(SgprimesError, ValueError):
    """a*b >= 2**62; rejected so all derived quantities stay exact in 64-bit."""


class OutOfFormulaRange(SgprimesError, ValueError):
    """Prefix-count formula queried outside its validity range [0, g]."""


class RangeError(SgprimesError, ValueError):
    """Malformed interval or out-of-range argument."""


class RangeTooLarge(SgprimesError, ValueError):
    """Requested range exceeds the configured sieve ceiling."""


class DomainError(SgprimesError, ValueError):
    """Argument outside the mathematical domain of the operation."""


class DegenerateInput(SgprimesError, ValueError):
    """Input too small for the requested report (e.g. Frobenius number < 2)."""


class UndefinedRatio(SgprimesError, ValueError):
    """Conjecture-2 ratio requested where pi(g) = 0."""


class ConfigError(SgprimesError, ValueError):
    """Invalid sweep configuration."""


class CheckpointMismatch(SgprimesError):
    """Checkpoint belongs to a different configuration."""


class SweepIOError(SgprimesError, OSError):
    """Failure writing sweep output or checkpoint files."""
