"""
Linear-algebra ground truth for H^0 and H^1 of D^d R(e) on P^{n-1} over F_p.

Taking global sections of 0 -> D^d R(e) -> D^d V (x) O(e) -> D^{d-1} V (x) O(e+1) -> 0
leaves the four-term sequence

    0 -> H^0 -> D^d V (x) Sym^e V -> D^{d-1} V (x) Sym^{e+1} V -> H^1 -> 0

so both groups are the kernel and cokernel of one explicit map. The map sends
x^(alpha) (x) x^beta to the sum over i with alpha_i > 0 of
x^(alpha - u_i) (x) x^(beta + u_i); every coefficient is 1. It preserves the
torus weight alpha + beta, so it is assembled and reduced one weight block
at a time.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple

import numpy as np
from loguru import logger

from .char_ring import Character, compositions
from .errors import (
    DomainError,
    InvalidArgumentError,
    ScanExhaustedError,
    WeightMismatchError,
)
from .linalg import nullity_mod_p
from .padic import is_prime

__all__ = [
    "DividedBasisIndex",
    "WeightBlockMatrix",
    "dim_divided",
    "dim_sym",
    "build_block",
    "iter_blocks",
    "h_dims",
    "h_characters",
    "regularity_scan",
]

Exps = Tuple[int, ...]
BasisPair = Tuple[Exps, Exps]


def dim_divided(n: int, d: int) -> int:
    """dim D^d V for dim V = n (0 for d < 0)."""
    return math.comb(d + n - 1, n - 1) if d >= 0 else 0


def dim_sym(n: int, e: int) -> int:
    """dim Sym^e V for dim V = n (0 for e < 0)."""
    return math.comb(e + n - 1, n - 1) if e >= 0 else 0


@dataclass(frozen=True)
class DividedBasisIndex:
    """Exponent vector alpha of the divided-power monomial x^(alpha)."""

    alpha: Exps

    def __post_init__(self):
        if any(a < 0 for a in self.alpha):
            raise DomainError(f"divided-power exponents must be >= 0, got {self.alpha}")

    @property
    def degree(self) -> int:
        return sum(self.alpha)

    def moves(self) -> Iterator[Tuple[int, "DividedBasisIndex"]]:
        """Comultiplication D^d -> D^{d-1} (x) V: yield ``(i, alpha - u_i)`` for each ``alpha_i > 0``."""
        for i, a in enumerate(self.alpha):
            if a > 0:
                yield i, DividedBasisIndex(self.alpha[:i] + (a - 1,) + self.alpha[i + 1 :])


@dataclass
class WeightBlockMatrix:
    """One torus-weight block of D^d V (x) Sym^e V -> D^{d-1} V (x) Sym^{e+1} V over F_p."""

    n: int
    p: int
    d: int
    e: int
    mu: Exps
    columns: List[BasisPair]
    rows: List[BasisPair]
    matrix: np.ndarray
    _nullity: int | None = field(default=None, repr=False)

    @property
    def nullity(self) -> int:
        """Multiplicity of the weight mu in H^0."""
        if self._nullity is None:
            self._nullity = nullity_mod_p(self.matrix, self.p)
        return self._nullity

    @property
    def rank(self) -> int:
        return len(self.columns) - self.nullity

    @property
    def corank(self) -> int:
        """Multiplicity of the weight mu in H^1."""
        return len(self.rows) - self.rank


def _validate(n: int, p: int, d: int, e: int) -> None:
    if n < 2:
        raise DomainError(f"dim V must be at least 2, got n={n}")
    if not is_prime(p):
        raise InvalidArgumentError(f"p={p} must be prime")
    if d < 0:
        raise DomainError(f"divided power degree must be >= 0, got d={d}")
    if e < -1:
        raise DomainError(
            f"twist e={e} is below -1; the four-term sequence no longer computes H^0 and H^1"
        )


def build_block(n: int, p: int, d: int, e: int, mu: Exps) -> WeightBlockMatrix:
    """
    Assemble the weight-``mu`` block of the global-sections map.

    Parameters
    ----------
    n, p : int
        dim V and the characteristic.
    d : int
        Divided power degree, ``d >= 1``.
    e : int
        Raw twist of the sheaf, ``e >= -1``.
    mu : tuple of int
        GL-weight with non-negative entries and ``sum(mu) == d + e``.

    Returns
    -------
    WeightBlockMatrix
        Rows are indexed by ``(alpha', beta')`` in D^{d-1} (x) Sym^{e+1},
        columns by ``(alpha, beta)`` in D^d (x) Sym^e.
    """
    _validate(n, p, d, e)
    if d < 1:
        raise DomainError(f"the structural map needs d >= 1, got d={d}")
    mu = tuple(int(x) for x in mu)
    if len(mu) != n or any(x < 0 for x in mu):
        raise WeightMismatchError(f"mu={mu} is not a non-negative GL-weight of rank {n}")
    if sum(mu) != d + e:
        raise WeightMismatchError(f"|mu| = {sum(mu)} but d + e = {d + e}")

    def _pairs(degree: int) -> List[BasisPair]:
        return [
            (alpha, tuple(m - a for m, a in zip(mu, alpha)))
            for alpha in compositions(degree, n, upper=mu)
        ]

    columns = _pairs(d) if e >= 0 else []
    rows = _pairs(d - 1)
    row_index: Dict[Exps, int] = {alpha: r for r, (alpha, _) in enumerate(rows)}

    matrix = np.zeros((len(rows), len(columns)), dtype=np.int64)
    for c, (alpha, _) in enumerate(columns):
        for _, target in DividedBasisIndex(alpha).moves():
            matrix[row_index[target.alpha], c] = 1
    return WeightBlockMatrix(
        n=n, p=p, d=d, e=e, mu=mu, columns=columns, rows=rows, matrix=matrix % p
    )


def iter_blocks(
    n: int, p: int, d: int, e: int, *, dominant_only: bool = False
) -> Iterator[WeightBlockMatrix]:
    """
    Yield every non-empty weight block of the map, weights in descending order.

    With ``dominant_only`` only weakly decreasing weights are visited; the
    block of any other weight is a row and column permutation of one of them.
    """
    _validate(n, p, d, e)
    for mu in compositions(d + e, n):
        if dominant_only and any(a < b for a, b in zip(mu, mu[1:])):
            continue
        block = build_block(n, p, d, e, mu)
        if block.columns or block.rows:
            yield block


def _orbit(mu: Exps) -> List[Exps]:
    return sorted(set(itertools.permutations(mu)), reverse=True)


def _block_multiplicities(
    n: int, p: int, d: int, e: int, use_symmetry: bool
) -> Iterator[Tuple[Exps, int, int]]:
    # yields (mu, nullity, corank) for every weight with a non-empty block
    blocks = 0
    for block in iter_blocks(n, p, d, e, dominant_only=use_symmetry):
        blocks += 1
        weights = _orbit(block.mu) if use_symmetry else [block.mu]
        nullity, corank = block.nullity, block.corank
        for mu in weights:
            yield mu, nullity, corank
    logger.debug(
        f"oracle n={n} p={p} d={d} e={e}: {blocks} weight blocks reduced"
        + (" (dominant representatives)" if use_symmetry else "")
    )


def h_dims(n: int, p: int, d: int, e: int, *, use_symmetry: bool = True) -> Tuple[int, int]:
    """
    Dimensions of H^0(P, D^d R(e)) and H^1(P, D^d R(e)) over F_p.

    ``d = 0`` is the structure sheaf: ``(dim Sym^e V, 0)``. With
    ``use_symmetry`` only dominant weight blocks are reduced and their
    nullity and corank are counted once per weight in the orbit.
    """
    _validate(n, p, d, e)
    if d == 0:
        return dim_sym(n, e), 0
    h0_dim = h1_dim = 0
    for _, nullity, corank in _block_multiplicities(n, p, d, e, use_symmetry):
        h0_dim += nullity
        h1_dim += corank
    return h0_dim, h1_dim


def h_characters(
    n: int, p: int, d: int, e: int, *, use_symmetry: bool = True
) -> Tuple[Character, Character]:
    """
    Characters of H^0(P, D^d R(e)) and H^1(P, D^d R(e)) over F_p.

    Per-weight multiplicities are block nullities and coranks; the GL-weights
    are normalized into A_n. Pass ``use_symmetry=False`` to reduce every
    block, which makes the S_n-invariance of the result an actual check.
    """
    _validate(n, p, d, e)
    if d == 0:
        if e < 0:
            return Character(n), Character(n)
        return Character(n, {mu: 1 for mu in compositions(e, n)}), Character(n)

    h0_terms: Dict[Exps, int] = {}
    h1_terms: Dict[Exps, int] = {}
    for mu, nullity, corank in _block_multiplicities(n, p, d, e, use_symmetry):
        if nullity:
            h0_terms[mu] = nullity
        if corank:
            h1_terms[mu] = corank
    return Character(n, h0_terms), Character(n, h1_terms)


def regularity_scan(n: int, p: int, d: int, m_max: int) -> int:
    """
    Largest ``m <= m_max`` with H^1(P, D^d R(m - 2)) != 0.

    The caller supplies the headroom; ``m_max`` should exceed the expected
    regularity by at least 2.
    """
    if d < 1:
        raise DomainError(f"regularity is scanned for d >= 1, got d={d}")
    for m in range(m_max, 0, -1):
        _, h1_dim = h_dims(n, p, d, m - 2)
        logger.debug(f"regularity scan n={n} p={p} d={d}: m={m} h1_dim={h1_dim}")
        if h1_dim > 0:
            return m
    raise ScanExhaustedError(
        f"no non-zero H^1(D^{d} R(m-2)) for 1 <= m <= {m_max} (n={n}, p={p})"
    )
