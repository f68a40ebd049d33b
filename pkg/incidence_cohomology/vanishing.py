"""
Vanishing and non-vanishing of H^i(X, O_X(a, b)) on the incidence correspondence.

Every line bundle is classified by the same deterministic chain: the
vanishing strips first, then the sign pattern (effective cone, its Serre dual,
the b = -n+1 edge, the main chamber a >= -b-n+1 >= 1), then the V <-> V*
swap, then Serre duality composed with the swap. The main chamber is decided
by the leading base-p term of d = -b-n+1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, List, Tuple

from loguru import logger

from .errors import DomainError, InvalidArgumentError, OutOfRegionError
from .padic import is_prime, leading_term

__all__ = [
    "ZERO",
    "NONZERO",
    "LineBundle",
    "CohomologyProfile",
    "region_vi_vanishing",
    "regularity_formula",
    "full_profile",
    "region_label",
]

ZERO = "zero"
NONZERO = "nonzero"
_FLAGS = {ZERO, NONZERO}

BOUNDARY_NOTE = (
    "H^{n-2} vanishes at a = d < p for n > 3: the boundary criterion as usually "
    "stated names only n = 3, its derivation also covers q = 1"
)

Entry = Tuple[str, str]  # (flag, rule)


def _validate(n: int, p: int) -> None:
    if n < 3:
        raise DomainError(f"the incidence correspondence needs n >= 3, got n={n}")
    if not is_prime(p):
        raise InvalidArgumentError(f"p={p} must be prime")


@dataclass(frozen=True)
class LineBundle:
    """The line bundle O_X(a, b) on the incidence correspondence in P^{n-1} x P^{n-1}*."""

    n: int
    a: int
    b: int

    def __post_init__(self):
        if self.n < 3:
            raise DomainError(f"the incidence correspondence needs n >= 3, got n={self.n}")

    @property
    def dimension(self) -> int:
        return 2 * self.n - 3

    def serre_dual(self) -> "LineBundle":
        return LineBundle(self.n, -self.n + 1 - self.a, -self.n + 1 - self.b)

    def swapped(self) -> "LineBundle":
        return LineBundle(self.n, self.b, self.a)


@dataclass(frozen=True)
class CohomologyProfile:
    """Per-degree vanishing flags of H^i(X, O_X(a, b)), i = 0..2n-3, with the rule that decided each."""

    n: int
    p: int
    a: int
    b: int
    flags: Tuple[str, ...]
    rules: Tuple[str, ...]
    region: str
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if len(self.flags) != 2 * self.n - 2 or len(self.rules) != len(self.flags):
            raise ValueError(
                f"profile for n={self.n} needs {2 * self.n - 2} degrees, got {len(self.flags)}"
            )
        invalid = set(self.flags) - _FLAGS
        if invalid:
            raise ValueError(
                f"Invalid flag(s): {', '.join(sorted(invalid))}. Valid flags are: {', '.join(sorted(_FLAGS))}."
            )

    def __getitem__(self, i: int) -> str:
        return self.flags[i]

    def is_nonzero(self, i: int) -> bool:
        return self.flags[i] == NONZERO

    def nonzero_degrees(self) -> List[int]:
        return [i for i, flag in enumerate(self.flags) if flag == NONZERO]

    def rows(self) -> Iterator[Tuple[int, int, int, str, str]]:
        """Table rows ``(a, b, i, flag, rule)``, one per degree."""
        for i, (flag, rule) in enumerate(zip(self.flags, self.rules)):
            yield self.a, self.b, i, flag, rule


def regularity_formula(n: int, p: int, d: int) -> int:
    """
    Castelnuovo-Mumford regularity of the divided power D^d R on P^{n-1}.

    Parameters
    ----------
    n : int
        dim V, at least 3.
    p : int
        Characteristic.
    d : int
        Divided power degree, at least 1.

    Returns
    -------
    int
        ``(t + n - 2) * q - n + 2`` where ``t * q`` is the leading base-p term of ``d``.
    """
    _validate(n, p)
    if d <= 0:
        raise DomainError(f"regularity is computed for d >= 1, got d={d}")
    lead = leading_term(d, p)
    return (lead.t + n - 2) * lead.q - n + 2


def _region_vi(n: int, p: int, a: int, b: int) -> Tuple[Entry, Entry, List[str]]:
    d = -b - n + 1
    lead = leading_term(d, p)
    notes: List[str] = []

    hn1 = ZERO if a >= (lead.t + n - 2) * lead.q - n + 2 else NONZERO

    hn2: Entry = (NONZERO, "boundary")
    if a == d:
        if n == 3 and a == (lead.t + 1) * lead.q - 1:
            hn2 = (ZERO, "boundary")
        elif d < p:
            hn2 = (ZERO, "boundary-small-d")
            if n > 3:
                notes.append(BOUNDARY_NOTE)
    logger.debug(
        f"chamber a >= -b-n+1: n={n} p={p} a={a} b={b} d={d} "
        f"(t={lead.t}, q={lead.q}) -> H^(n-1) {hn1}, H^(n-2) {hn2[0]}"
    )
    return (hn1, "regularity"), hn2, notes


def region_vi_vanishing(n: int, p: int, a: int, b: int) -> Tuple[str, str]:
    """
    Decide H^{n-1} and H^{n-2} of O_X(a, b) for ``b <= -n`` and ``a >= -b - n + 1``.

    Returns
    -------
    tuple[str, str]
        ``(hn1, hn2)``, each ``"zero"`` or ``"nonzero"``.
    """
    _validate(n, p)
    if b > -n or a < -b - n + 1:
        raise OutOfRegionError(
            f"O({a},{b}) is outside the chamber b <= -n, a >= -b-n+1 for n={n}; "
            "use full_profile for arbitrary line bundles"
        )
    (hn1, _), (hn2, _), _ = _region_vi(n, p, a, b)
    return hn1, hn2


def region_label(n: int, a: int, b: int) -> str:
    """Name the chamber of Pic(X) containing O(a, b): ``"I"``..``"VI"`` or ``"strip"``."""
    if -n + 2 <= a <= -1 or -n + 2 <= b <= -1:
        return "strip"
    if a >= 0 and b >= 0:
        return "I"
    if a <= -n + 1 and b <= -n + 1:
        return "IV"
    if a >= 0:
        return "VI" if a + b >= -n + 1 else "V"
    return "II" if a + b >= -n + 1 else "III"


def _classify(n: int, p: int, a: int, b: int) -> Tuple[List[Entry], List[str]]:
    top = 2 * n - 3

    def _only(degree: int | None, rule: str) -> List[Entry]:
        return [(NONZERO if i == degree else ZERO, rule) for i in range(top + 1)]

    if -n + 2 <= a <= -1 or -n + 2 <= b <= -1:
        return _only(None, "vanishing-strip"), []
    if a >= 0 and b >= 0:
        return _only(0, "kempf"), []
    if a <= -n + 1 and b <= -n + 1:
        return _only(top, "serre-kempf"), []

    if a < 0:
        # b >= 0 here; exchange V and V*
        entries, notes = _classify(n, p, b, a)
        return [(flag, f"swap:{rule}") for flag, rule in entries], notes

    if b == -n + 1:
        # H^{n-2} = H^0(P, O(a-1)), which vanishes for a = 0
        return _only(n - 2 if a >= 1 else None, "edge"), []

    if a + b >= -n + 1:
        hn1, hn2, notes = _region_vi(n, p, a, b)
        entries = [(ZERO, "outside-degrees")] * (top + 1)
        entries[n - 2] = hn2
        entries[n - 1] = hn1
        return entries, notes

    entries, notes = _classify(n, p, -n + 1 - b, -n + 1 - a)
    return [(flag, f"serre-swap:{rule}") for flag, rule in reversed(entries)], notes


def full_profile(n: int, p: int, a: int, b: int) -> CohomologyProfile:
    """
    Classify the vanishing of every H^i(X, O_X(a, b)).

    Parameters
    ----------
    n : int
        dim V, at least 3.
    p : int
        Characteristic.
    a, b : int
        Bidegree of the line bundle.

    Returns
    -------
    CohomologyProfile
        Flags and deciding rules for degrees 0..2n-3.
    """
    _validate(n, p)
    entries, notes = _classify(n, p, a, b)
    return CohomologyProfile(
        n=n,
        p=p,
        a=a,
        b=b,
        flags=tuple(flag for flag, _ in entries),
        rules=tuple(rule for _, rule in entries),
        region=region_label(n, a, b),
        notes=tuple(notes),
    )
