"""
Closed-form and recursive characters of cohomology of D^d R on P^{n-1}.

Twist convention: for the pair operations ``h0``/``h1``/``euler_char`` the
second argument ``e`` means the sheaf D^d R(e - 1), so that h^0(d, e) = h^1(e, d).
Operations that take the raw sheaf twist carry ``twist`` in their name or
argument (``char_small_d``, ``h1_twist``, ``h0_twist``).

The recursion and everything built on it are only available for n = 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Union

from loguru import logger

from . import char_ring as cr
from .char_ring import Character, Weight
from .errors import (
    DomainError,
    InvalidArgumentError,
    NoHighestWeightError,
    OutOfRangeError,
    UnsplitWeightError,
    UnsupportedRankError,
)
from .padic import is_prime, leading_term, truncations
from .vanishing import ZERO, full_profile, region_vi_vanishing

__all__ = [
    "CohPair",
    "Corner",
    "NotComputable",
    "euler_char",
    "char_small_d",
    "corner_char",
    "h1",
    "h0",
    "h1_twist",
    "h0_twist",
    "hw_h1",
    "h1_p2_closed",
    "h1_p2_layers",
    "line_bundle_character",
    "clear_cache",
]


@dataclass(frozen=True)
class NotComputable:
    """Marker for cohomology groups whose character has no formula here."""

    reason: str

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class Corner:
    """Cohomology at a corner of the non-vanishing region and the line bundle it lives on."""

    character: Character
    d: int
    a: int
    b: int

    @property
    def twist(self) -> int:
        """Raw twist of D^d R carrying this H^1."""
        return self.a - 1


def _require_rank_three(n: int) -> None:
    if n != 3:
        raise UnsupportedRankError(
            f"character formulas for arbitrary (d, e) are only known for n = 3, got n={n}"
        )


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise InvalidArgumentError(f"p={p} must be prime")


def _require_pair(d: int, e: int) -> None:
    if d < 0 or e < 0:
        raise DomainError(f"h^i(d, e) is defined for d, e >= 0, got ({d}, {e})")


def euler_char(d: int, e: int, *, n: int = 3) -> Character:
    """Equivariant Euler characteristic h^0(d, e) - h^1(d, e)."""
    _require_rank_three(n)
    _require_pair(d, e)
    if e > d:
        return cr.schur2(e - 1, d, n=3)
    if d > e:
        return -cr.schur2(d - 1, e, n=3)
    return cr.zero(3)


def char_small_d(n: int, p: int, d: int, e_twist: int) -> Character:
    """
    [H^1(P, D^d R(e_twist))] for ``p <= d < 2p`` and ``e_twist >= d - 1``, any n.

    Note that ``e_twist`` is the raw twist of the sheaf, not the pair convention.
    """
    _require_prime(p)
    if n < 3:
        raise DomainError(f"n must be at least 3, got n={n}")
    if not p <= d < 2 * p or e_twist < d - 1:
        raise OutOfRangeError(
            f"small-d formula needs p <= d < 2p and twist >= d-1, got p={p}, d={d}, twist={e_twist}"
        )
    return cr.schur2_trunc(p, e_twist + p, d - p, n=n)


def corner_char(n: int, p: int, t: int, k: int) -> Corner:
    """H^1 at ``d = t p^k`` with the largest non-vanishing twist ``(t+n-2) p^k - n``."""
    _require_prime(p)
    if n < 3:
        raise DomainError(f"n must be at least 3, got n={n}")
    if not 1 <= t < p or k < 0:
        raise DomainError(f"corner needs 1 <= t < p and k >= 0, got t={t}, k={k}, p={p}")
    q = p**k
    d = t * q
    a = (t + n - 2) * q - n + 1
    character = cr.schur2(t - 1, t - 1, n=n).frobenius(q)
    return Corner(character=character, d=d, a=a, b=-d - n + 1)


@lru_cache(maxsize=None)
def _frobenius_dual_h(t: int, q: int) -> Character:
    return cr.h(t, n=3).dual().frobenius(q)


@lru_cache(maxsize=None)
def _h1(p: int, d: int, e: int) -> Character:
    # negative arguments: D^d = 0 for d < 0, and twists below -1 carry no H^1
    if d <= 0 or e < 0:
        return cr.zero(3)
    lead = leading_term(d, p)
    t, q = lead.t, lead.q

    if e > (t + 1) * q - 2:
        return cr.zero(3)
    if e < t * q:
        return cr.schur2(d - 1, e, n=3)

    logger.debug(f"h1 recursion p={p} d={d} e={e} (t={t}, q={q})")
    result = _frobenius_dual_h(t, q) * _h1(p, d - t * q, e - t * q)
    result = result + _frobenius_dual_h(t - 1, q) * cr.schur2_trunc(
        q, e - 1 + (2 - t) * q, d - t * q, n=3
    )
    if t >= 2:
        result = result + _frobenius_dual_h(t - 2, q) * _h0(
            p, q * (t + 1) - d - 2, q * (t + 1) - e - 2
        ).dual()
    return result


def _h0(p: int, d: int, e: int) -> Character:
    if d < 0:
        return cr.zero(3)
    return _h1(p, e, d)


def h1(d: int, e: int, p: int, *, n: int = 3) -> Character:
    """
    Character of H^1(P, D^d R(e - 1)) for n = 3.

    Parameters
    ----------
    d : int
        Divided power degree, ``d >= 0``.
    e : int
        Shifted twist, ``e >= 0`` (the sheaf is twisted by ``e - 1``).
    p : int
        Characteristic.
    """
    _require_rank_three(n)
    _require_prime(p)
    _require_pair(d, e)
    return _h1(p, d, e)


def h0(d: int, e: int, p: int, *, n: int = 3) -> Character:
    """Character of H^0(P, D^d R(e - 1)) for n = 3, equal to h^1(e, d)."""
    _require_rank_three(n)
    _require_prime(p)
    _require_pair(d, e)
    return _h0(p, d, e)


def h1_twist(d: int, twist: int, p: int, *, n: int = 3) -> Character:
    """[H^1(P, D^d R(twist))] for ``twist >= -1``."""
    return h1(d, twist + 1, p, n=n)


def h0_twist(d: int, twist: int, p: int, *, n: int = 3) -> Character:
    """[H^0(P, D^d R(twist))] for ``twist >= -1``."""
    return h0(d, twist + 1, p, n=n)


def clear_cache() -> None:
    """Drop the memoized recursion table."""
    _h1.cache_clear()
    _frobenius_dual_h.cache_clear()


@dataclass(frozen=True)
class CohPair:
    """The pair (d, e) indexing h^0(d, e) and h^1(d, e) = [H^i(P, D^d R(e - 1))]."""

    d: int
    e: int
    n: int = 3
    p: int = 2

    def __post_init__(self):
        _require_pair(self.d, self.e)
        _require_prime(self.p)

    @property
    def twist(self) -> int:
        return self.e - 1

    def h0(self) -> Character:
        return h0(self.d, self.e, self.p, n=self.n)

    def h1(self) -> Character:
        return h1(self.d, self.e, self.p, n=self.n)

    def euler_char(self) -> Character:
        return euler_char(self.d, self.e, n=self.n)


def _h1_vanishes(d: int, e: int, p: int) -> bool:
    if d <= 0:
        return True
    if d > e:
        # h^1 contains -chi = s_(d-1, e), which is non-zero
        return False
    hn1, _ = region_vi_vanishing(3, p, a=e, b=-d - 2)
    return hn1 == ZERO


def hw_h1(d: int, e: int, p: int, *, n: int = 3) -> Weight:
    """
    Predict the lexicographically highest weight of h^1(d, e) for n = 3.

    The prediction reads only base-p digits of ``d`` and ``e``; the character
    itself is never computed.
    """
    _require_rank_three(n)
    _require_prime(p)
    _require_pair(d, e)
    if _h1_vanishes(d, e, p):
        raise NoHighestWeightError(f"h^1({d}, {e}) vanishes for p={p}")
    if d > e:
        return Weight((d - 1, e, 0))

    q_prime = p
    while q_prime <= d:
        m, d_rest = divmod(d, q_prime)
        m_e, e_rest = divmod(e, q_prime)
        if m == m_e and m % p != 0 and d_rest <= q_prime - 2 and e_rest <= q_prime - 2:
            return Weight((d - e_rest - 2, e - 2 * e_rest - 2, 0))
        q_prime *= p
    raise UnsplitWeightError(
        f"no admissible power of p={p} splits d={d}, e={e} although h^1 is non-zero"
    )


def h1_p2_layers(d: int, e: int, k: int) -> Dict[int, Character]:
    """
    Layers of the p = 2 closed form for ``2^k <= d <= e <= 2^(k+1) - 2``, keyed by digit.

    Digit i contributes when d and e both have a 1 there, agree to the left,
    and the right part of e stays below ``2^i - 1``.
    """
    if k < 1 or not 2**k <= d <= e <= 2 ** (k + 1) - 2:
        raise OutOfRangeError(
            f"closed form needs k >= 1 and 2^k <= d <= e <= 2^(k+1)-2, got d={d}, e={e}, k={k}"
        )
    layers = {}
    for i in range(1, k + 1):
        left_d, right_d, bit_d = truncations(d, i, k)
        left_e, right_e, bit_e = truncations(e, i, k)
        if not (bit_d == bit_e == 1 and left_d == left_e and right_e <= 2**i - 2):
            continue
        layer = cr.nim(left_d).frobenius(2 ** (i + 1))
        block = cr.schur2_trunc(2**i, right_e - 1 + 2 ** (i + 1), right_d, n=3)
        layers[i] = layer * block
    return layers


def h1_p2_closed(d: int, e: int, k: int) -> Character:
    """Non-recursive h^1(d, e) for n = 3, p = 2 and ``2^k <= d <= e <= 2^(k+1) - 2``."""
    return sum(h1_p2_layers(d, e, k).values(), cr.zero(3))


CharacterOrMarker = Union[Character, NotComputable]


def _line_bundle_character(p: int, a: int, b: int, i: int) -> CharacterOrMarker:
    if a == -1 or b == -1:
        return cr.zero(3)
    if a >= 0 and b >= 0:
        if i == 0:
            return NotComputable("global sections of an effective line bundle")
        return cr.zero(3)
    if a <= -2 and b <= -2:
        if i == 3:
            return NotComputable(
                "top cohomology dual to global sections of an effective line bundle"
            )
        return cr.zero(3)
    if a < 0:
        swapped = _line_bundle_character(p, b, a, i)
        return swapped.dual() if isinstance(swapped, Character) else swapped
    if a + b >= -2:
        d = -b - 2
        if i == 1:
            return _h0(p, d, a)
        if i == 2:
            return _h1(p, d, a)
        return cr.zero(3)
    # Serre duality and the swap both dualize characters; composed they cancel
    return _line_bundle_character(p, -2 - b, -2 - a, 3 - i)


def line_bundle_character(n: int, p: int, a: int, b: int, i: int) -> CharacterOrMarker:
    """
    Character of H^i(X, O_X(a, b)) for n = 3.

    Returns a ``NotComputable`` marker for the global sections of effective
    bundles (and their Serre duals), where no closed character formula is used.
    """
    _require_rank_three(n)
    _require_prime(p)
    if not 0 <= i <= 2 * n - 3:
        raise DomainError(f"degree must lie in 0..{2 * n - 3}, got i={i}")
    if full_profile(n, p, a, b)[i] == ZERO:
        return cr.zero(3)
    return _line_bundle_character(p, a, b, i)
