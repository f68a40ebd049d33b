"""
Exact arithmetic in the character ring A_n = Z[x_1..x_n]/(x_1...x_n - 1).

Elements are sparse maps from normalized exponent vectors (last entry 0) to
non-zero integers. Because the normal form of a sum of normalized vectors is
already normalized, the ring operations never need to renormalize; only the
constructors do.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .errors import (
    DimensionMismatchError,
    EmptyCharacterError,
    InvalidArgumentError,
    UnsupportedRankError,
)
from .padic import prime_power_base

__all__ = [
    "Weight",
    "Character",
    "compositions",
    "normalize",
    "add",
    "mul",
    "neg",
    "dual",
    "frobenius",
    "zero",
    "one",
    "monomial",
    "h",
    "e",
    "h_trunc",
    "schur2",
    "schur2_trunc",
    "nim",
    "highest_weight",
    "dim_eval",
]

Exps = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class Weight:
    """Element of Z^n / Z(1,...,1) stored with last coordinate 0."""

    exps: Exps

    @property
    def n(self) -> int:
        return len(self.exps)

    def is_dominant(self) -> bool:
        return all(a >= b for a, b in zip(self.exps, self.exps[1:]))

    def dominates(self, other: "Weight") -> bool:
        """Dominance order: all partial sums of ``self - other`` are >= 0 (modulo the diagonal)."""
        if self.n != other.n:
            raise DimensionMismatchError(f"cannot compare weights of rank {self.n} and {other.n}")
        diff = [a - b for a, b in zip(self.exps, other.exps)]
        # representatives may differ by a multiple of (1,...,1); dominance needs total 0
        total = sum(diff)
        if total % self.n:
            return False
        shift = total // self.n
        partial = 0
        for x in diff[:-1]:
            partial += x - shift
            if partial < 0:
                return False
        return True

    def __iter__(self) -> Iterator[int]:
        return iter(self.exps)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.exps) + ")"


def _normalize_exps(raw: Sequence[int]) -> Exps:
    last = raw[-1]
    return tuple(x - last for x in raw)


def normalize(raw_exps: Sequence[int], n: Optional[int] = None) -> Weight:
    """
    Return the representative of ``raw_exps`` in Z^n/Z(1,...,1) with last entry 0.

    Parameters
    ----------
    raw_exps : Sequence[int]
        Integer exponent vector.
    n : int, optional
        Expected length; a different length raises ``DimensionMismatchError``.
    """
    raw = tuple(int(x) for x in raw_exps)
    if len(raw) < 2:
        raise DimensionMismatchError(f"weights need at least 2 coordinates, got {raw}")
    if n is not None and len(raw) != n:
        raise DimensionMismatchError(f"expected {n} coordinates, got {len(raw)}")
    return Weight(_normalize_exps(raw))


def compositions(
    total: int, parts: int, upper: Optional[Sequence[int] | int] = None
) -> Iterator[Exps]:
    """
    Yield all vectors of ``parts`` non-negative integers summing to ``total``.

    ``upper`` bounds each coordinate (inclusive), either uniformly or per
    coordinate. Vectors are produced in lexicographically descending order.
    """
    if total < 0 or parts <= 0:
        return
    if upper is None:
        bounds = [total] * parts
    elif isinstance(upper, int):
        bounds = [upper] * parts
    else:
        bounds = list(upper)
    # suffix capacity lets us prune branches that cannot reach the total
    capacity = [0] * (parts + 1)
    for i in range(parts - 1, -1, -1):
        capacity[i] = capacity[i + 1] + min(bounds[i], total)

    prefix: List[int] = []

    def _walk(i: int, remaining: int) -> Iterator[Exps]:
        if i == parts - 1:
            if remaining <= bounds[i]:
                yield (*prefix, remaining)
            return
        hi = min(bounds[i], remaining)
        lo = max(0, remaining - capacity[i + 1])
        for x in range(hi, lo - 1, -1):
            prefix.append(x)
            yield from _walk(i + 1, remaining - x)
            prefix.pop()

    if capacity[0] < total:
        return
    yield from _walk(0, total)


class Character:
    """
    Sparse integer combination of torus weights of SL_n.

    Instances are immutable; arithmetic returns new instances. Two characters
    are equal iff they have the same rank and the same term map.
    """

    __slots__ = ("_n", "_terms", "_hash")

    def __init__(self, n: int, terms: Optional[Mapping[Sequence[int], int]] = None):
        if n < 2:
            raise DimensionMismatchError(f"rank must be at least 2, got n={n}")
        collected: Dict[Exps, int] = {}
        for raw, coeff in (terms or {}).items():
            if len(raw) != n:
                raise DimensionMismatchError(f"expected {n} coordinates, got {tuple(raw)}")
            key = _normalize_exps(tuple(int(x) for x in raw))
            collected[key] = collected.get(key, 0) + int(coeff)
        self._n = n
        self._terms = {k: c for k, c in collected.items() if c}
        self._hash: Optional[int] = None

    @classmethod
    def _trusted(cls, n: int, terms: Dict[Exps, int]) -> "Character":
        # terms are already normalized with no zero coefficients
        obj = cls.__new__(cls)
        obj._n = n
        obj._terms = terms
        obj._hash = None
        return obj

    # ------------------------------------------------------------------
    # accessors
    # ------------------------------------------------------------------
    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> Mapping[Exps, int]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[Tuple[Weight, int]]:
        for exps, coeff in self._terms.items():
            yield Weight(exps), coeff

    def coefficient(self, weight: Weight | Sequence[int]) -> int:
        exps = weight.exps if isinstance(weight, Weight) else tuple(weight)
        return self._terms.get(_normalize_exps(exps), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # ------------------------------------------------------------------
    # ring structure
    # ------------------------------------------------------------------
    def _check_rank(self, other: "Character") -> None:
        if self._n != other._n:
            raise DimensionMismatchError(
                f"cannot combine characters of rank {self._n} and {other._n}"
            )

    def __add__(self, other: "Character") -> "Character":
        if not isinstance(other, Character):
            return NotImplemented
        self._check_rank(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Character._trusted(self._n, out)

    def __neg__(self) -> "Character":
        return Character._trusted(self._n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "Character") -> "Character":
        if not isinstance(other, Character):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Character | int") -> "Character":
        if isinstance(other, int):
            if other == 0:
                return zero(self._n)
            return Character._trusted(self._n, {k: c * other for k, c in self._terms.items()})
        if not isinstance(other, Character):
            return NotImplemented
        self._check_rank(other)
        if not self._terms or not other._terms:
            return zero(self._n)
        out: Dict[Exps, int] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                key = tuple(x + y for x, y in zip(u, v))
                out[key] = out.get(key, 0) + a * b
        return Character._trusted(self._n, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    # ------------------------------------------------------------------
    # endomorphisms
    # ------------------------------------------------------------------
    def dual(self) -> "Character":
        """Apply ``x_i -> x_i^{-1}``."""
        return Character._trusted(
            self._n, {tuple(-x for x in k): c for k, c in self._terms.items()}
        )

    def frobenius(self, q: int) -> "Character":
        """Apply ``x_i -> x_i^q`` for a prime power ``q``."""
        prime_power_base(q)
        if q == 1:
            return self
        return Character._trusted(
            self._n, {tuple(q * x for x in k): c for k, c in self._terms.items()}
        )

    def permute(self, perm: Sequence[int]) -> "Character":
        """Permute exponent positions: coordinate ``i`` of the result is coordinate ``perm[i]``."""
        if sorted(perm) != list(range(self._n)):
            raise DimensionMismatchError(f"{tuple(perm)} is not a permutation of {self._n} letters")
        return Character._trusted(
            self._n,
            {
                _normalize_exps(tuple(k[j] for j in perm)): c
                for k, c in self._terms.items()
            },
        )

    def is_symmetric(self) -> bool:
        """True if the character is invariant under every permutation of the variables."""
        return all(
            self.permute(perm) == self for perm in itertools.permutations(range(self._n))
        )

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    # ------------------------------------------------------------------
    # evaluation
    # ------------------------------------------------------------------
    def highest_weight(self) -> Weight:
        """Lexicographically largest normalized weight with non-zero coefficient."""
        if not self._terms:
            raise EmptyCharacterError("the zero character has no highest weight")
        return Weight(max(self._terms))

    def dim_eval(self) -> int:
        """Sum of coefficients (value at ``x_i = 1``)."""
        return sum(self._terms.values())

    # ------------------------------------------------------------------
    # serialization
    # ------------------------------------------------------------------
    def to_records(self) -> List[Dict[str, object]]:
        """Terms as ``{"exp": [...], "coeff": c}``, exponents descending lexicographically."""
        return [
            {"exp": list(k), "coeff": self._terms[k]}
            for k in sorted(self._terms, reverse=True)
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_records(), separators=(",", ":"))

    @classmethod
    def from_records(
        cls, records: Iterable[Mapping[str, object]], n: Optional[int] = None
    ) -> "Character":
        records = list(records)
        if n is None:
            if not records:
                raise DimensionMismatchError("rank cannot be inferred from an empty term list")
            n = len(records[0]["exp"])  # type: ignore[arg-type]
        return cls(n, {tuple(r["exp"]): int(r["coeff"]) for r in records})  # type: ignore[arg-type]

    @classmethod
    def from_json(cls, text: str, n: Optional[int] = None) -> "Character":
        return cls.from_records(json.loads(text), n=n)

    def __repr__(self) -> str:
        if not self._terms:
            return f"Character(n={self._n}, 0)"
        body = " + ".join(
            f"{c}*x^{Weight(k)}" for k, c in sorted(self._terms.items(), reverse=True)
        )
        return f"Character(n={self._n}, {body})"


# ----------------------------------------------------------------------
# functional API
# ----------------------------------------------------------------------
def add(f: Character, g: Character) -> Character:
    return f + g


def mul(f: Character, g: Character) -> Character:
    return f * g


def neg(f: Character) -> Character:
    return -f


def dual(f: Character) -> Character:
    return f.dual()


def frobenius(f: Character, q: int) -> Character:
    return f.frobenius(q)


def highest_weight(f: Character) -> Weight:
    return f.highest_weight()


def dim_eval(f: Character) -> int:
    return f.dim_eval()


def zero(n: int) -> Character:
    return Character._trusted(n, {})


def one(n: int) -> Character:
    return Character._trusted(n, {(0,) * n: 1})


def monomial(exps: Sequence[int], coeff: int = 1) -> Character:
    return Character(len(exps), {tuple(exps): coeff})


def _from_exponents(n: int, exponents: Iterable[Exps]) -> Character:
    out: Dict[Exps, int] = {}
    for raw in exponents:
        key = _normalize_exps(raw)
        out[key] = out.get(key, 0) + 1
    return Character._trusted(n, out)


@lru_cache(maxsize=None)
def h(d: int, *, n: int) -> Character:
    """Complete symmetric function: all monomials of degree ``d`` (0 for ``d < 0``)."""
    if d < 0:
        return zero(n)
    return _from_exponents(n, compositions(d, n))


@lru_cache(maxsize=None)
def e(d: int, *, n: int) -> Character:
    """Elementary symmetric function: squarefree monomials of degree ``d``."""
    if d < 0 or d > n:
        return zero(n)
    exponents = (
        tuple(1 if i in chosen else 0 for i in range(n))
        for chosen in itertools.combinations(range(n), d)
    )
    return _from_exponents(n, exponents)


@lru_cache(maxsize=None)
def h_trunc(q: int, d: int, *, n: int) -> Character:
    """Degree ``d`` monomials with every exponent below ``q``."""
    prime_power_base(q)
    if d < 0 or d > n * (q - 1):
        return zero(n)
    if d < q:
        return h(d, n=n)
    return _from_exponents(n, compositions(d, n, upper=q - 1))


def _jacobi_trudi(hs, a: int, b: int) -> Character:
    return hs(a) * hs(b) - hs(a + 1) * hs(b - 1)


@lru_cache(maxsize=None)
def schur2(a: int, b: int, *, n: int) -> Character:
    """Two-row Jacobi-Trudi determinant ``h_a h_b - h_{a+1} h_{b-1}``."""
    return _jacobi_trudi(lambda d: h(d, n=n), a, b)


@lru_cache(maxsize=None)
def schur2_trunc(q: int, a: int, b: int, *, n: int) -> Character:
    """Two-row Jacobi-Trudi determinant in the ``q``-truncated functions."""
    return _jacobi_trudi(lambda d: h_trunc(q, d, n=n), a, b)


@lru_cache(maxsize=None)
def nim(m: int, *, n: int = 3) -> Character:
    """Sum of ``x^a y^b z^c`` over ``a+b+c = 2m`` with ``a xor b xor c = 0``."""
    if n != 3:
        raise UnsupportedRankError(f"Nim characters are trivariate, got n={n}")
    if m < 0:
        raise InvalidArgumentError(f"Nim characters need m >= 0, got m={m}")
    total = 2 * m
    exponents = (
        (a, b, total - a - b)
        for a in range(total + 1)
        for b in range(total - a + 1)
        if a ^ b ^ (total - a - b) == 0
    )
    return _from_exponents(3, exponents)
