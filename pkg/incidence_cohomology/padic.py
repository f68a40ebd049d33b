"""Base-p digit utilities.

Leading p-adic terms drive every vanishing and regularity statement, the
Nim-sum drives the p = 2 character formula, and the binary left/right
truncations index its layers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import DomainError, InvalidArgumentError

__all__ = [
    "PAdicLeading",
    "is_prime",
    "prime_power_base",
    "leading_term",
    "p_adic_digits",
    "valuation",
    "nim_sum",
    "truncations",
    "carter_criterion",
]


@dataclass(frozen=True)
class PAdicLeading:
    """Leading term ``t * p**k`` of the base-p expansion of a positive integer."""

    t: int
    k: int
    q: int


def is_prime(n: int) -> bool:
    """Trial division; the primes used here are small."""
    if n <= 1:
        return False
    for i in range(2, math.isqrt(n) + 1):
        if n % i == 0:
            return False
    return True


def prime_power_base(q: int, p: int | None = None) -> Tuple[int, int]:
    """
    Split a prime power into ``(p, k)`` with ``q == p**k``.

    Parameters
    ----------
    q : int
        The prime power. ``q = 1`` is accepted as ``p**0``; it needs ``p`` to
        be given to name the prime, otherwise ``(1, 0)`` is returned.
    p : int, optional
        Expected prime. When given, ``q`` must be a power of this prime.

    Returns
    -------
    tuple[int, int]
        The prime and the exponent.
    """
    if q < 1:
        raise InvalidArgumentError(f"{q} is not a prime power")
    if q == 1:
        return (p if p is not None else 1, 0)

    base = p
    if base is None:
        base = next(f for f in range(2, q + 1) if q % f == 0)
    elif not is_prime(base):
        raise InvalidArgumentError(f"{base} is not prime")

    k, rest = 0, q
    while rest % base == 0:
        rest //= base
        k += 1
    if rest != 1:
        raise InvalidArgumentError(f"{q} is not a power of the prime {base}")
    return base, k


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise InvalidArgumentError(f"p={p} must be prime")


def leading_term(d: int, p: int) -> PAdicLeading:
    """
    Return the unique ``(t, k, q = p**k)`` with ``t*q <= d < (t+1)*q`` and ``1 <= t < p``.

    Parameters
    ----------
    d : int
        Positive integer.
    p : int
        Prime.

    Returns
    -------
    PAdicLeading
        Most significant base-p digit ``t`` and the power ``q`` of its place.
    """
    if d <= 0:
        raise DomainError(f"leading term needs d >= 1, got d={d}")
    _require_prime(p)
    digits = p_adic_digits(d, p)
    k = len(digits) - 1
    return PAdicLeading(t=digits[-1], k=k, q=p**k)


def p_adic_digits(d: int, p: int) -> List[int]:
    """Base-p digits of ``d >= 0``, least significant first (``[]`` for 0)."""
    if d < 0:
        raise DomainError(f"digits need d >= 0, got d={d}")
    digits = []
    while d:
        d, r = divmod(d, p)
        digits.append(r)
    return digits


def valuation(m: int, p: int) -> int:
    """Exponent of ``p`` in the non-zero integer ``m``."""
    if m == 0:
        raise DomainError("the p-adic valuation of 0 is infinite")
    m = abs(m)
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def nim_sum(a: int, b: int) -> int:
    """Digitwise mod-2 sum (bitwise xor) of two non-negative integers."""
    if a < 0 or b < 0:
        raise DomainError(f"Nim-sum is defined on non-negative integers, got {a}, {b}")
    return a ^ b


def truncations(d: int, i: int, k: int) -> Tuple[int, int, int]:
    """
    Cut the binary expansion ``d = (d_k ... d_0)_2`` around position ``i``.

    Returns ``(l, r, bit)`` with ``l = (d_k ... d_{i+1})_2``,
    ``r = (d_{i-1} ... d_0)_2`` and ``bit = d_i``, so that
    ``d == l * 2**(i+1) + bit * 2**i + r``.
    """
    if not 1 <= i <= k:
        raise DomainError(f"truncation index must satisfy 1 <= i <= k, got i={i}, k={k}")
    if not 0 <= d < 2 ** (k + 1):
        raise DomainError(f"d={d} does not fit in {k + 1} binary digits")
    left = d >> (i + 1)
    right = d & ((1 << i) - 1)
    bit = (d >> i) & 1
    return left, right, bit


def carter_criterion(partition: Sequence[int], p: int) -> bool:
    """
    Return True if the p-adic valuation of the hook lengths is constant down every column.

    Parameters
    ----------
    partition : Sequence[int]
        Weakly decreasing non-negative parts; trailing zeros are ignored.
    p : int
        Prime.
    """
    _require_prime(p)
    rows = [part for part in partition if part > 0]
    if any(a < b for a, b in zip(rows, rows[1:])):
        raise DomainError(f"{tuple(partition)} is not a partition")
    if not rows:
        return True

    columns = [sum(1 for part in rows if part > j) for j in range(rows[0])]
    for j, height in enumerate(columns):
        valuations = {
            valuation((rows[i] - j - 1) + (height - i - 1) + 1, p)
            for i in range(height)
        }
        if len(valuations) > 1:
            return False
    return True
