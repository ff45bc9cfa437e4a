"""Self-maps of a finite set as generators of index sequences.

A map phi on {0..m-1} yields the sequence I_n = 1 - #Fix(phi^n), which is
exactly the admissible shape sigma^1 - sum a_k sigma^k where a_k counts the
k-cycles of phi.  Small instances double as exhaustive oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping

from .sequences import IndexSequence

ENUMERATION_LIMIT = 7  # m^m maps; 7^7 is the largest desk-scale census


@dataclass(frozen=True)
class FiniteMap:
    """phi: {0..m-1} -> {0..m-1} given by targets[j] = phi(j)."""

    targets: tuple[int, ...]

    def __post_init__(self):
        targets = tuple(self.targets)
        m = len(targets)
        if m == 0:
            raise ValueError("a finite map needs at least one point")
        for t in targets:
            if type(t) is not int or not 0 <= t < m:
                raise ValueError(f"target {t!r} outside 0..{m - 1}")
        object.__setattr__(self, "targets", targets)

    @property
    def size(self) -> int:
        return len(self.targets)

    def to_dict(self) -> dict:
        return {"m": self.size, "targets": list(self.targets)}

    @classmethod
    def from_dict(cls, obj: Mapping) -> "FiniteMap":
        try:
            m = obj["m"]
            targets = tuple(obj["targets"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"not a finite-map object: {exc}") from exc
        phi = cls(targets)
        if phi.size != m:
            raise ValueError(f"declared size {m} != {phi.size} targets")
        return phi


@dataclass(frozen=True)
class OrbitCensus:
    """Cycle counts of the eventual image: counts[k] = number of k-cycles."""

    counts: dict[int, int]

    def __post_init__(self):
        clean = {}
        for k in sorted(self.counts):
            c = self.counts[k]
            if k < 1 or c < 1:
                raise ValueError("census entries must be positive")
            clean[k] = c
        object.__setattr__(self, "counts", clean)

    def periodic_points(self) -> int:
        return sum(k * c for k, c in self.counts.items())

    def fix_count(self, n: int) -> int:
        """#Fix(phi^n) from the cycle structure: sum of k*counts[k] over k | n."""
        return sum(k * c for k, c in self.counts.items() if n % k == 0)


def fix_count(phi: FiniteMap, n: int) -> int:
    """#{j : phi^n(j) = j}, by n-fold composition."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    t = phi.targets
    cur = list(range(len(t)))
    for _ in range(n):
        cur = [t[j] for j in cur]
    return sum(1 for j, v in enumerate(cur) if v == j)


def orbit_census(phi: FiniteMap) -> OrbitCensus:
    """Count cycles by period over the eventual image of phi.

    m iterations of the image always reach the cycle set, so no cycle
    detection machinery is needed at this scale.
    """
    t = phi.targets
    core = set(range(len(t)))
    for _ in range(len(t)):
        core = {t[j] for j in core}
    counts: dict[int, int] = {}
    seen: set[int] = set()
    for j in core:
        if j in seen:
            continue
        k = 0
        x = j
        while True:
            seen.add(x)
            x = t[x]
            k += 1
            if x == j:
                break
        counts[k] = counts.get(k, 0) + 1
    return OrbitCensus(counts)


def index_sequence_of(phi: FiniteMap, horizon: int) -> IndexSequence:
    """The sequence with term n = 1 - #Fix(phi^n)."""
    if horizon < 1:
        raise ValueError("horizon must be a positive integer")
    t = phi.targets
    m = len(t)
    cur = list(range(m))
    terms = []
    for _ in range(horizon):
        cur = [t[j] for j in cur]
        fixed = 0
        for j in range(m):
            if cur[j] == j:
                fixed += 1
        terms.append(1 - fixed)
    return IndexSequence(tuple(terms))


def realize_from_certificate(F: set[int], multiplicities: Mapping[int, int]) -> FiniteMap:
    """Build phi as a disjoint union of a_k cycles of length k for k in F.

    Canonical layout: cycles laid out consecutively in ascending k, each
    cycle j -> j+1 with wrap, so the result is reproducible.
    """
    if not F:
        raise ValueError("F must be non-empty")
    if set(multiplicities) != set(F):
        raise ValueError("multiplicity keys must equal F")
    for k in F:
        if k < 1:
            raise ValueError(f"period {k} must be >= 1")
        if multiplicities[k] < 1:
            raise ValueError(f"multiplicity of period {k} must be >= 1")
    targets: list[int] = []
    base = 0
    for k in sorted(F):
        for _ in range(multiplicities[k]):
            targets.extend(base + (j + 1) % k for j in range(k))
            base += k
    return FiniteMap(tuple(targets))


def enumerate_maps(m: int) -> Iterator[FiniteMap]:
    """All m^m self-maps of {0..m-1}, each exactly once."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    if m > ENUMERATION_LIMIT:
        raise ValueError(f"refusing to enumerate {m}^{m} maps (limit m={ENUMERATION_LIMIT})")
    for targets in product(range(m), repeat=m):
        yield FiniteMap(targets)
