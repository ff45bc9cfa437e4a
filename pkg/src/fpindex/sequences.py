"""Exact integer algebra of fixed point index sequences.

A sequence is a finite prefix (I_1, ..., I_N) of the indices of the iterates
of a map at a fixed point.  Every such prefix decomposes uniquely as an
integer combination of the normalized sequences sigma^k (k on multiples of k,
zero elsewhere); integrality of the combination is equivalent to the Dold
congruences.  All verdicts produced here are certified "up to horizon N".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping


class NonIntegralCoefficient(ValueError):
    """The triangular recursion produced a fractional coefficient at index k.

    Signals that the input cannot be a fixed point index sequence (it
    violates the Dold congruences at k).
    """

    def __init__(self, k: int):
        super().__init__(f"non-integral coefficient at k={k} (Dold congruence violated)")
        self.k = k


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """Ascending divisors of n >= 1."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    """Moebius function by trial division (horizons here are tiny)."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def _mobius_divisor_pairs(n: int) -> tuple[tuple[int, int], ...]:
    # pairs (d, mu(n/d)) with mu != 0, used by the congruence check
    return tuple((d, m) for d in divisors(n) if (m := mobius(n // d)) != 0)


@dataclass(frozen=True)
class IndexSequence:
    """A finite prefix (I_1, ..., I_N) of exact integers, N >= 1."""

    terms: tuple[int, ...]

    def __post_init__(self):
        terms = tuple(self.terms)
        if not terms:
            raise ValueError("an index sequence needs at least one term")
        for t in terms:
            if type(t) is not int:
                raise ValueError(f"terms must be exact integers, got {t!r}")
        object.__setattr__(self, "terms", terms)

    @property
    def horizon(self) -> int:
        return len(self.terms)

    def term(self, n: int) -> int:
        """I_n with 1-based n."""
        if not 1 <= n <= len(self.terms):
            raise IndexError(f"n={n} outside 1..{len(self.terms)}")
        return self.terms[n - 1]

    def __add__(self, other: "IndexSequence") -> "IndexSequence":
        if not isinstance(other, IndexSequence):
            return NotImplemented
        if other.horizon != self.horizon:
            raise ValueError("can only add sequences with equal horizons")
        return IndexSequence(tuple(a + b for a, b in zip(self.terms, other.terms)))

    def to_strings(self) -> list[str]:
        """JSON form: decimal strings, bit-exact for big values."""
        return [str(t) for t in self.terms]

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> "IndexSequence":
        try:
            return cls(tuple(int(s, 10) for s in items))
        except (TypeError, ValueError) as exc:
            raise ValueError(f"not a list of decimal integer strings: {exc}") from exc


@dataclass(frozen=True)
class DoldDecomposition:
    """Sparse coefficients a_k of I = sum_k a_k * sigma^k, up to a horizon."""

    coefficients: dict[int, int]
    horizon: int

    def __post_init__(self):
        if self.horizon < 1:
            raise ValueError("horizon must be >= 1")
        clean: dict[int, int] = {}
        for k in sorted(self.coefficients):
            a = self.coefficients[k]
            if type(k) is not int or k < 1:
                raise ValueError(f"coefficient keys must be positive integers, got {k!r}")
            if type(a) is not int:
                raise ValueError(f"coefficient values must be exact integers, got {a!r}")
            if a != 0:
                clean[k] = a
        object.__setattr__(self, "coefficients", clean)

    def to_mapping(self) -> dict[str, str]:
        """JSON form: string keys and string values."""
        return {str(k): str(a) for k, a in self.coefficients.items()}

    @classmethod
    def from_mapping(cls, obj: Mapping[str, str], horizon: int) -> "DoldDecomposition":
        try:
            coeffs = {int(k, 10): int(a, 10) for k, a in obj.items()}
        except (TypeError, ValueError, AttributeError) as exc:
            raise ValueError(f"not a string-to-string coefficient mapping: {exc}") from exc
        return cls(coeffs, horizon)


@dataclass(frozen=True)
class AdmissibilityCertificate:
    """Verdict on whether a sequence has the isolated-invariant-set shape.

    When admissible, the sequence equals sigma^1 - sum_{k in F} a_k sigma^k
    on 1..horizon, with F non-empty and every a_k >= 1.
    """

    admissible: bool
    F: frozenset[int]
    multiplicities: dict[int, int]
    horizon: int

    def __post_init__(self):
        if self.admissible:
            if not self.F:
                raise ValueError("an admissible certificate needs a non-empty F")
            if set(self.multiplicities) != set(self.F):
                raise ValueError("multiplicity keys must equal F")
            if any(a < 1 for a in self.multiplicities.values()):
                raise ValueError("multiplicities must be >= 1")


def sigma(k: int, horizon: int) -> IndexSequence:
    """Normalized sequence sigma^k: term n is k when k divides n, else 0."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if horizon < 1:
        raise ValueError("horizon must be a positive integer")
    return IndexSequence(tuple(k if n % k == 0 else 0 for n in range(1, horizon + 1)))


def dold_coefficients(seq: IndexSequence) -> DoldDecomposition:
    """Unique a_k with I_n = sum_{k|n} k*a_k, by the triangular recursion.

    Raises NonIntegralCoefficient(k) at the first k where the recursion
    leaves a remainder; such sequences violate the Dold congruences and
    cannot arise as fixed point index sequences.
    """
    terms = seq.terms
    coeffs: dict[int, int] = {}
    for n in range(1, len(terms) + 1):
        acc = terms[n - 1]
        for k in divisors(n)[:-1]:
            a = coeffs.get(k)
            if a is not None:
                acc -= k * a
        q, r = divmod(acc, n)
        if r:
            raise NonIntegralCoefficient(n)
        if q:
            coeffs[n] = q
    return DoldDecomposition(coeffs, len(terms))


def from_dold(decomp: DoldDecomposition | Mapping[int, int], horizon: int) -> IndexSequence:
    """Assemble the sequence with term n = sum_{k|n} k*a_k.

    Keys above the horizon contribute nothing.
    """
    if isinstance(decomp, DoldDecomposition):
        coeffs = decomp.coefficients
    else:
        coeffs = {k: a for k, a in decomp.items()}
    if horizon < 1:
        raise ValueError("horizon must be a positive integer")
    terms = []
    for n in range(1, horizon + 1):
        terms.append(sum(k * coeffs[k] for k in divisors(n) if k in coeffs))
    return IndexSequence(tuple(terms))


def check_dold_congruences(seq: IndexSequence) -> tuple[int, ...]:
    """Indices n where sum_{d|n} mu(n/d)*I_d is not divisible by n.

    An empty result means the prefix satisfies the Dold congruences.
    Violations are data, not errors; n violates exactly when the
    decomposition coefficient a_n is non-integral.
    """
    terms = seq.terms
    bad = []
    for n in range(1, len(terms) + 1):
        acc = 0
        for d, m in _mobius_divisor_pairs(n):
            acc += m * terms[d - 1]
        if acc % n:
            bad.append(n)
    return tuple(bad)


def certify_admissible(seq: IndexSequence) -> AdmissibilityCertificate:
    """Decide whether the prefix fits sigma^1 - sum_{k in F} a_k sigma^k.

    This is the exact shape of index sequences at fixed points of planar
    continuous maps that are isolated as invariant sets and neither sinks
    nor sources: coefficients must be integral, the sigma^1 coefficient at
    most 1, every other coefficient at most 0, and the certificate support
    F = {k : a_k >= 1} non-empty.  The verdict only covers 1..horizon.
    """
    horizon = seq.horizon
    try:
        decomp = dold_coefficients(seq)
    except NonIntegralCoefficient:
        return AdmissibilityCertificate(False, frozenset(), {}, horizon)

    coeffs = decomp.coefficients
    c1 = coeffs.get(1, 0)
    if c1 > 1:
        return AdmissibilityCertificate(False, frozenset(), {}, horizon)
    if any(a > 0 for k, a in coeffs.items() if k >= 2):
        return AdmissibilityCertificate(False, frozenset(), {}, horizon)

    mult: dict[int, int] = {}
    if 1 - c1 >= 1:
        mult[1] = 1 - c1
    for k, a in sorted(coeffs.items()):
        if k >= 2 and a < 0:
            mult[k] = -a
    if not mult:
        return AdmissibilityCertificate(False, frozenset(), {}, horizon)
    return AdmissibilityCertificate(True, frozenset(mult), mult, horizon)


def detect_period(seq: IndexSequence) -> int | None:
    """Smallest q <= N/2 with I_{n+q} = I_n for all n <= N-q, else None.

    Horizon-limited heuristic: a period detected on the prefix says nothing
    beyond the horizon.
    """
    terms = seq.terms
    n = len(terms)
    for q in range(1, n // 2 + 1):
        if all(terms[i + q] == terms[i] for i in range(n - q)):
            return q
    return None
