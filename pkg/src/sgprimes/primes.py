"""Deterministic prime machinery.

Segmented sieve of Eratosthenes over arbitrary windows, exact prime
counting, primes in arithmetic progressions, Euler's totient and the
offset logarithmic integral.  No probabilistic primality anywhere:
conjecture verification demands certainty.
"""

from __future__ import annotations

import math
import threading
from collections import OrderedDict
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InputTooLarge, RangeError, RangeTooLarge

DEFAULT_SIEVE_CEILING = 10**10
DEFAULT_SEGMENT_WIDTH = 1 << 20  # cache-friendly default window

# Shared base-prime table (primes up to sqrt of the largest window seen).
# Written once per growth step under the lock, read-only afterwards.
_base_lock = threading.Lock()
_base_primes = np.zeros(0, dtype=np.int64)
_base_limit = 1


def small_primes(limit: int) -> np.ndarray:
    """All primes <= limit via a plain full sieve (shared, growing cache).

    The returned array is a read-only view; callers must not mutate it.
    """
    global _base_primes, _base_limit
    if limit > _base_limit:
        with _base_lock:
            if limit > _base_limit:  # re-check under the lock
                new_limit = max(limit, 2 * _base_limit, 1 << 16)
                flags = np.ones(new_limit + 1, dtype=bool)
                flags[:2] = False
                for p in range(2, math.isqrt(new_limit) + 1):
                    if flags[p]:
                        flags[p * p :: p] = False
                primes = np.flatnonzero(flags).astype(np.int64)
                primes.setflags(write=False)
                _base_primes = primes
                _base_limit = new_limit
    primes = _base_primes
    if limit >= _base_limit:
        return primes
    return primes[: np.searchsorted(primes, limit, side="right")]


@dataclass(frozen=True)
class PrimeSegment:
    """Exact primality table for the inclusive interval [lo, hi]."""

    lo: int
    hi: int
    flags: np.ndarray  # flags[i] is True iff lo + i is prime

    def count(self) -> int:
        return int(np.count_nonzero(self.flags))

    def primes(self) -> np.ndarray:
        """Primes in [lo, hi], ascending."""
        return self.lo + np.flatnonzero(self.flags)

    def is_prime(self, n: int) -> bool:
        if not self.lo <= n <= self.hi:
            raise RangeError(f"{n} outside segment [{self.lo}, {self.hi}]")
        return bool(self.flags[n - self.lo])


def sieve_segment(lo: int, hi: int, *, ceiling: int = DEFAULT_SIEVE_CEILING) -> PrimeSegment:
    """Sieve the inclusive window [lo, hi] against base primes <= sqrt(hi)."""
    if lo < 0 or lo > hi:
        raise RangeError(f"bad segment [{lo}, {hi}]")
    if hi > ceiling:
        raise RangeTooLarge(f"hi = {hi} exceeds sieve ceiling {ceiling}")
    flags = np.ones(hi - lo + 1, dtype=bool)
    for n in (0, 1):
        if lo <= n <= hi:
            flags[n - lo] = False
    for p in small_primes(math.isqrt(hi)).tolist():
        start = max(p * p, (lo + p - 1) // p * p)
        if start > hi:
            continue
        flags[start - lo :: p] = False
    return PrimeSegment(lo, hi, flags)


def iter_prime_segments(lo: int, hi: int, *, width: int = DEFAULT_SEGMENT_WIDTH,
                        ceiling: int = DEFAULT_SIEVE_CEILING):
    """Yield consecutive PrimeSegments covering [lo, hi]."""
    for start in range(lo, hi + 1, width):
        yield sieve_segment(start, min(start + width - 1, hi), ceiling=ceiling)


def prime_count(x: int, *, ceiling: int = DEFAULT_SIEVE_CEILING,
                segment_width: int = DEFAULT_SEGMENT_WIDTH) -> int:
    """pi(x): exact number of primes <= x, by streaming segments."""
    if x < 0:
        raise RangeError(f"x = {x} < 0")
    if x > ceiling:
        raise RangeTooLarge(f"x = {x} exceeds sieve ceiling {ceiling}")
    if x < 2:
        return 0
    return sum(seg.count() for seg in iter_prime_segments(0, x, width=segment_width,
                                                          ceiling=ceiling))


@dataclass(frozen=True)
class ApCountQuery:
    """Count primes p in [u, v] with p = residue (mod modulus).

    Non-coprime residues are legal queries (they return 0 or 1: only a
    prime dividing the modulus can land there).
    """

    u: int
    v: int
    modulus: int
    residue: int

    def __post_init__(self):
        if self.u > self.v:
            raise RangeError(f"u = {self.u} > v = {self.v}")
        if self.modulus < 1:
            raise RangeError(f"modulus = {self.modulus} < 1")
        if not 0 <= self.residue < self.modulus:
            raise RangeError(f"residue = {self.residue} outside [0, {self.modulus - 1}]")


def count_primes_in_ap(query: ApCountQuery, *, ceiling: int = DEFAULT_SIEVE_CEILING,
                       segment_width: int = DEFAULT_SEGMENT_WIDTH) -> int:
    """Exact count of primes in the progression described by `query`."""
    if query.v > ceiling:
        raise RangeTooLarge(f"v = {query.v} exceeds sieve ceiling {ceiling}")
    lo = max(query.u, 0)
    if query.v < 2:
        return 0
    total = 0
    for seg in iter_prime_segments(lo, query.v, width=segment_width, ceiling=ceiling):
        primes = seg.primes()
        total += int(np.count_nonzero(primes % query.modulus == query.residue))
    return total


def euler_phi(m: int) -> int:
    """Euler's totient via trial-division factorization."""
    if m < 1:
        raise DomainError(f"m = {m} < 1")
    result = m
    n = m
    for p in range(2, math.isqrt(m) + 1):
        if p * p > n:
            break
        if n % p == 0:
            result -= result // p
            while n % p == 0:
                n //= p
    if n > 1:
        result -= result // n
    return result


def log_integral(lo: float, hi: float, *, rel_tol: float = 1e-9,
                 max_evals: int = 10**7) -> float:
    """Integral of du / log(u) over [lo, hi], lo > 1, by adaptive Simpson.

    Relative accuracy target rel_tol; subdivision stops early if the
    evaluation budget is exhausted (never happens for this integrand at
    sane tolerances).
    """
    if lo <= 1:
        raise DomainError(f"lo = {lo} <= 1 (integrand singular at u = 1)")
    if hi < lo:
        raise DomainError(f"hi = {hi} < lo = {lo}")
    if hi == lo:
        return 0.0

    def f(u: float) -> float:
        return 1.0 / math.log(u)

    budget = [max_evals]

    def simpson(fa: float, fm: float, fb: float, width: float) -> float:
        return width * (fa + 4.0 * fm + fb) / 6.0

    def refine(x0, x2, f0, f1, f2, whole, eps, depth):
        x1 = 0.5 * (x0 + x2)
        xl, xr = 0.5 * (x0 + x1), 0.5 * (x1 + x2)
        fl, fr = f(xl), f(xr)
        budget[0] -= 2
        left = simpson(f0, fl, f1, x1 - x0)
        right = simpson(f1, fr, f2, x2 - x1)
        delta = left + right - whole
        if abs(delta) <= 15.0 * eps or depth >= 60 or budget[0] <= 0:
            return left + right + delta / 15.0
        return (refine(x0, x1, f0, fl, f1, left, 0.5 * eps, depth + 1)
                + refine(x1, x2, f1, fr, f2, right, 0.5 * eps, depth + 1))

    mid = 0.5 * (lo + hi)
    f_lo, f_mid, f_hi = f(lo), f(mid), f(hi)
    rough = simpson(f_lo, f_mid, f_hi, hi - lo)
    eps = rel_tol * max(abs(rough), 1e-300)
    return refine(lo, hi, f_lo, f_mid, f_hi, rough, eps, 0)


class ResidueClassIndex:
    """Primes <= limit bucketed by residue modulo m, queryable in O(log).

    Stored as one flat sorted array of keys (p mod m) * M + p where M is a
    power of two above limit, so counting a class over [lo, hi] is two
    binary searches and queries vectorize across residues.
    """

    def __init__(self, primes: np.ndarray, modulus: int, limit: int):
        if modulus < 1:
            raise RangeError(f"modulus = {modulus} < 1")
        self.modulus = modulus
        self.limit = limit
        self.shift = 1 << int(limit).bit_length()  # strictly greater than limit
        if modulus * self.shift + limit >= 1 << 63:
            raise InputTooLarge(f"modulus {modulus} too large for flat keys at limit {limit}")
        self._keys = np.sort(primes % modulus * self.shift + primes)

    def count_upto(self, residue, hi):
        """Primes p <= hi with p = residue (mod m); scalar or array arguments."""
        base = np.multiply(residue, self.shift, dtype=np.int64)
        right = np.searchsorted(self._keys, base + np.minimum(hi, self.limit), side="right")
        left = np.searchsorted(self._keys, base, side="left")
        return right - left

    def count_between(self, residue, lo, hi):
        """Primes in [lo, hi] of the class; scalar or array arguments."""
        base = np.multiply(residue, self.shift, dtype=np.int64)
        right = np.searchsorted(self._keys, base + np.minimum(hi, self.limit), side="right")
        left = np.searchsorted(self._keys, base + np.maximum(lo, 0), side="left")
        return right - left

    def first_at_least(self, residue, lo):
        """Smallest prime >= lo in each class, or -1 if none <= limit.

        Accepts scalars or equal-length arrays.
        """
        residue = np.asarray(residue, dtype=np.int64)
        base = residue * self.shift
        idx = np.searchsorted(self._keys, base + np.maximum(lo, 0), side="left")
        found = self._keys[np.minimum(idx, len(self._keys) - 1)] if len(self._keys) else base - 1
        ok = (idx < len(self._keys)) & (found // self.shift == residue)
        return np.where(ok, found - base, -1)

    def members(self, residue: int, lo: int, hi: int) -> np.ndarray:
        """Primes in [lo, hi] congruent to residue, ascending."""
        base = residue * self.shift
        left = int(np.searchsorted(self._keys, base + max(lo, 0), side="left"))
        right = int(np.searchsorted(self._keys, base + min(hi, self.limit), side="right"))
        return self._keys[left:right] - base


class PrimeCache:
    """Read-only table of all primes up to a fixed limit.

    Powers the fast paths in analytics and the sweep harness.  Residue
    indexes per modulus are memoized with a small LRU; building them is
    the only internal write and is serialized by a lock, so instances can
    be shared across threads.
    """

    def __init__(self, limit: int, *, max_class_tables: int = 4,
                 segment_width: int = DEFAULT_SEGMENT_WIDTH):
        self.limit = limit
        parts = [seg.primes() for seg in iter_prime_segments(0, max(limit, 2),
                                                             width=segment_width,
                                                             ceiling=max(limit, 2))]
        self.primes = np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)
        self.primes.setflags(write=False)
        self._classes: OrderedDict[int, ResidueClassIndex] = OrderedDict()
        self._max_class_tables = max_class_tables
        self._lock = threading.Lock()

    def prime_count(self, x: int) -> int:
        """pi(x) for x <= limit, by binary search."""
        if x > self.limit:
            raise RangeTooLarge(f"x = {x} exceeds cache limit {self.limit}")
        if x < 2:
            return 0
        return int(np.searchsorted(self.primes, x, side="right"))

    def primes_between(self, lo: int, hi: int) -> np.ndarray:
        if hi > self.limit:
            raise RangeTooLarge(f"hi = {hi} exceeds cache limit {self.limit}")
        left = int(np.searchsorted(self.primes, max(lo, 0), side="left"))
        right = int(np.searchsorted(self.primes, hi, side="right"))
        return self.primes[left:right]

    def is_prime(self, n: int) -> bool:
        if n > self.limit:
            raise RangeTooLarge(f"n = {n} exceeds cache limit {self.limit}")
        if n < 2:
            return False
        i = int(np.searchsorted(self.primes, n, side="left"))
        return i < len(self.primes) and int(self.primes[i]) == n

    def classes(self, modulus: int) -> ResidueClassIndex:
        """Residue-class index for the given modulus (memoized, LRU)."""
        with self._lock:
            index = self._classes.get(modulus)
            if index is not None:
                self._classes.move_to_end(modulus)
                return index
        index = ResidueClassIndex(self.primes, modulus, self.limit)
        with self._lock:
            self._classes[modulus] = index
            self._classes.move_to_end(modulus)
            while len(self._classes) > self._max_class_tables:
                self._classes.popitem(last=False)
        return index
