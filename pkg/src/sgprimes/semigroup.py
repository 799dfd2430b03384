"""Exact arithmetic of two-generator numerical semigroups.

A pair of coprime integers 0 < a < b generates the semigroup of all
non-negative combinations a*x + b*y.  Its Frobenius number (largest
non-member) is g = a*b - a - b; exactly (g+1)/2 non-negative integers
are missing, and membership is decidable in O(1) once the inverse of b
modulo a is known.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    InputTooLarge,
    NotCoprime,
    OrderViolation,
    OutOfFormulaRange,
    RangeError,
)

# All products and prefix sums stay exact in signed 64-bit below this bound.
PRODUCT_LIMIT = 1 << 62

_CHUNK = 1 << 22  # window size for bulk membership scans


@dataclass(frozen=True)
class TwoGenSemigroup:
    """Validated semigroup generated by coprime 0 < a < b.

    Construction computes the Frobenius number g = a*b - a - b and the
    multiplicative inverse of b modulo a (0 when a = 1).  Instances are
    immutable; every method is pure and thread-safe.
    """

    a: int
    b: int
    g: int = field(init=False)
    b_inv_mod_a: int = field(init=False)

    def __post_init__(self):
        a, b = int(self.a), int(self.b)
        if not 0 < a < b:
            raise OrderViolation(f"need 0 < a < b, got ({a}, {b})")
        if math.gcd(a, b) != 1:
            raise NotCoprime(f"gcd({a}, {b}) = {math.gcd(a, b)} != 1")
        if a * b >= PRODUCT_LIMIT:
            raise InputTooLarge(f"a*b = {a * b} >= 2**62; pair too large for exact arithmetic")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "g", a * b - a - b)
        object.__setattr__(self, "b_inv_mod_a", pow(b, -1, a) if a >= 2 else 0)

    def frobenius(self) -> int:
        """Largest integer with no representation a*x + b*y (x, y >= 0)."""
        return self.g

    def contains(self, n: int) -> bool:
        """O(1) membership test.

        n belongs to the semigroup iff b*y0 <= n where y0 = (n * b^-1) mod a:
        y0 is the least feasible coefficient of b in any representation.
        Validated exhaustively against contains_bruteforce.
        """
        if n < 0:
            return False
        y0 = (n % self.a) * self.b_inv_mod_a % self.a
        return self.b * y0 <= n

    def contains_bruteforce(self, n: int) -> bool:
        """Independent membership oracle: scan y in [0, n//b], test a | (n - y*b)."""
        if n < 0:
            return False
        for y in range(n // self.b + 1):
            if (n - y * self.b) % self.a == 0:
                return True
        return False

    def count_prefix(self, k: int) -> int:
        """Number of semigroup elements in [0, k] (0 counts), for 0 <= k <= g.

        Uses the closed form sum_{i=0}^{k//b} ((k - i*b)//a + 1); queries
        beyond g are rejected rather than extrapolated.
        """
        if not 0 <= k <= self.g:
            raise OutOfFormulaRange(f"k = {k} outside [0, g = {self.g}]")
        a, b = self.a, self.b
        return sum((k - i * b) // a + 1 for i in range(k // b + 1))

    def symmetry_holds(self, s: int) -> bool:
        """True iff exactly one of s, g - s is a member (always true for 0 <= s <= g)."""
        if not 0 <= s <= self.g:
            raise RangeError(f"s = {s} outside [0, g = {self.g}]")
        return self.contains(s) != self.contains(self.g - s)

    def gaps(self) -> list[int]:
        """All positive non-members, ascending.  Length is (g+1)/2 when g >= 1."""
        out: list[int] = []
        for lo in range(1, self.g + 1, _CHUNK):
            hi = min(lo + _CHUNK - 1, self.g)
            mask = self.member_mask(lo, hi)
            out.extend((lo + np.flatnonzero(~mask)).tolist())
        return out

    # -- bulk helpers -------------------------------------------------------

    def member_mask(self, lo: int, hi: int) -> np.ndarray:
        """Boolean membership mask over the inclusive window [lo, hi].

        Vectorized form of contains(); all intermediates fit int64 because
        a*b < 2**62.
        """
        if lo < 0 or lo > hi:
            raise RangeError(f"bad window [{lo}, {hi}]")
        n = np.arange(lo, hi + 1, dtype=np.int64)
        y0 = (n % self.a) * self.b_inv_mod_a % self.a
        return self.b * y0 <= n

    def membership_table(self, hi: int) -> np.ndarray:
        """member_mask(0, hi), chunked to bound peak memory."""
        if hi < 0:
            raise RangeError(f"hi = {hi} < 0")
        if hi < _CHUNK:
            return self.member_mask(0, hi)
        parts = [self.member_mask(lo, min(lo + _CHUNK - 1, hi)) for lo in range(0, hi + 1, _CHUNK)]
        return np.concatenate(parts)

    def membership_table_bruteforce(self, hi: int) -> np.ndarray:
        """Membership over [0, hi] by exhaustive generation: mark y*b + x*a for all x, y >= 0."""
        if hi < 0:
            raise RangeError(f"hi = {hi} < 0")
        table = np.zeros(hi + 1, dtype=bool)
        for y in range(hi // self.b + 1):
            table[y * self.b :: self.a] = True
        return table

    def prefix_count_table(self) -> np.ndarray:
        """count_prefix(k) for every k in [0, g] at once (empty when g < 0)."""
        if self.g < 0:
            return np.zeros(0, dtype=np.int64)
        k = np.arange(self.g + 1, dtype=np.int64)
        out = np.zeros(self.g + 1, dtype=np.int64)
        for i in range(self.g // self.b + 1):
            lo = i * self.b
            out[lo:] += (k[lo:] - lo) // self.a + 1
        return out
