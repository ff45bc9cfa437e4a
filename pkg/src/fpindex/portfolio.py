"""Periodic-orbit portfolios on the sphere or disk.

A portfolio is a symbolic model of the complete periodic-orbit set of a map:
each orbit carries a period and a local type (sink, source of a given degree,
or any other isolated-invariant-set orbit described by its index shape).
Local zeta functions multiply to the global one exactly when the portfolio
can be complete, and the factorization forces the structural constraints and
infinitude triggers implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from .zeta import ZetaProductForm, equals, global_zeta_disk, global_zeta_sphere

COMPLETENESS_ASSUMPTION = (
    "assumes the portfolio lists every periodic orbit of the map, each isolated "
    "as an invariant set, and that the set of periodic points is finite"
)


class InconsistentPortfolio(ValueError):
    """The local zeta product does not match the ambient global zeta."""


@dataclass(frozen=True)
class Sink:
    """Attracting orbit; each point of the orbit has index 1 at all iterates."""


@dataclass(frozen=True)
class Source:
    """Repelling orbit of the given degree r; indices are powers of r."""

    degree: int


@dataclass(frozen=True)
class Other:
    """Any other isolated-invariant-set orbit, described by its index shape.

    shape lists (k_i, b_i) pairs of the per-point sequence
    sigma^1 - sum_i b_i sigma^{k_i}; all b_i >= 1.
    """

    shape: tuple[tuple[int, int], ...]

    def __post_init__(self):
        merged: dict[int, int] = {}
        for k, b in self.shape:
            if type(k) is not int or k < 1:
                raise ValueError(f"shape period {k!r} must be a positive integer")
            if type(b) is not int or b < 1:
                raise ValueError(f"shape multiplicity {b!r} must be a positive integer")
            merged[k] = merged.get(k, 0) + b
        if not merged:
            raise ValueError("shape must be non-empty")
        object.__setattr__(self, "shape", tuple(sorted(merged.items())))


OrbitKind = Union[Sink, Source, Other]


@dataclass(frozen=True)
class OrbitSpec:
    """One periodic orbit: its (minimal) period and local type."""

    period: int
    kind: OrbitKind

    def __post_init__(self):
        if type(self.period) is not int or self.period < 1:
            raise ValueError("period must be a positive integer")
        if not isinstance(self.kind, (Sink, Source, Other)):
            raise ValueError(f"unknown orbit kind {self.kind!r}")

    def to_dict(self) -> dict:
        if isinstance(self.kind, Sink):
            kind = "sink"
        elif isinstance(self.kind, Source):
            kind = {"source": self.kind.degree}
        else:
            kind = {"other": [list(kb) for kb in self.kind.shape]}
        return {"m": self.period, "kind": kind}

    @classmethod
    def from_dict(cls, obj: Mapping) -> "OrbitSpec":
        try:
            m = obj["m"]
            kind = obj["kind"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"not an orbit object: {exc}") from exc
        if kind == "sink":
            return cls(m, Sink())
        if isinstance(kind, Mapping) and "source" in kind:
            return cls(m, Source(kind["source"]))
        if isinstance(kind, Mapping) and "other" in kind:
            return cls(m, Other(tuple((k, b) for k, b in kind["other"])))
        raise ValueError(f"unknown orbit kind {kind!r}")


@dataclass(frozen=True)
class Sphere:
    degree: int


@dataclass(frozen=True)
class Disk:
    pass


Ambient = Union[Sphere, Disk]


@dataclass(frozen=True)
class Portfolio:
    """An ambient space plus a finite multiset of periodic orbits."""

    ambient: Ambient
    orbits: tuple[OrbitSpec, ...] = ()

    def __post_init__(self):
        if not isinstance(self.ambient, (Sphere, Disk)):
            raise ValueError(f"unknown ambient {self.ambient!r}")
        object.__setattr__(self, "orbits", tuple(self.orbits))

    def to_dict(self) -> dict:
        ambient = "disk" if isinstance(self.ambient, Disk) else {"sphere": self.ambient.degree}
        return {"ambient": ambient, "orbits": [o.to_dict() for o in self.orbits]}

    @classmethod
    def from_dict(cls, obj: Mapping) -> "Portfolio":
        try:
            ambient_obj = obj["ambient"]
            orbit_objs = obj["orbits"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"not a portfolio object: {exc}") from exc
        if ambient_obj == "disk":
            ambient: Ambient = Disk()
        elif isinstance(ambient_obj, Mapping) and "sphere" in ambient_obj:
            ambient = Sphere(ambient_obj["sphere"])
        else:
            raise ValueError(f"unknown ambient {ambient_obj!r}")
        return cls(ambient, tuple(OrbitSpec.from_dict(o) for o in orbit_objs))


@dataclass(frozen=True)
class StructuralReport:
    """Violated structural item numbers, under the completeness assumption."""

    violations: tuple[int, ...]
    assumption: str = COMPLETENESS_ASSUMPTION

    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class InfinitudeTrigger:
    """One sufficient condition for infinitely many periodic orbits."""

    code: str
    detail: str


@dataclass(frozen=True)
class GrowthBound:
    """Lower bound 1 + d^n on the count of fixed points of the n-th iterate.

    vacuous marks bounds <= 0 (negative d, odd n), which constrain nothing.
    rate_satisfied reports (1/n) ln(max(1, bound)) >= ln|d|, decided exactly;
    None when |d| < 2 and the growth-rate comparison has no content.
    """

    bound: int
    vacuous: bool
    rate_satisfied: bool | None


def local_zeta(orbit: OrbitSpec) -> ZetaProductForm:
    """Local zeta of one orbit of period m.

    Sink: 1/(1 - t^m).  Source of degree r: 1/(1 - r*t^m), the constant 1
    when r = 0.  Other orbits substitute t^m into the shape's rational form
    prod (1 - t^{k_i})^{b_i} / (1 - t).
    """
    m = orbit.period
    kind = orbit.kind
    if isinstance(kind, Sink):
        return ZetaProductForm(((1, m, -1),))
    if isinstance(kind, Source):
        return ZetaProductForm(((kind.degree, m, -1),))
    factors = [(1, k * m, b) for k, b in kind.shape]
    factors.append((1, m, -1))
    return ZetaProductForm(tuple(factors))


def portfolio_zeta(p: Portfolio) -> ZetaProductForm:
    """Product of the local zetas of every orbit."""
    z = ZetaProductForm()
    for orbit in p.orbits:
        z = z * local_zeta(orbit)
    return z


def ambient_zeta(ambient: Ambient) -> ZetaProductForm:
    """Global zeta of the ambient space."""
    if isinstance(ambient, Disk):
        return global_zeta_disk()
    return global_zeta_sphere(ambient.degree)


def _ambient_degree(ambient: Ambient) -> int:
    # a disk self-map behaves like a degree-0 sphere map for these checks
    return 0 if isinstance(ambient, Disk) else ambient.degree


def _sinks_and_unit_sources(p: Portfolio) -> list[OrbitSpec]:
    return [
        o for o in p.orbits
        if isinstance(o.kind, Sink) or (isinstance(o.kind, Source) and o.kind.degree == 1)
    ]


def _exceptional_sources(p: Portfolio) -> list[OrbitSpec]:
    return [
        o for o in p.orbits
        if isinstance(o.kind, Source) and o.kind.degree not in (-1, 0, 1)
    ]


def _minus_one_sources(p: Portfolio) -> list[OrbitSpec]:
    return [o for o in p.orbits if isinstance(o.kind, Source) and o.kind.degree == -1]


def check_consistency(p: Portfolio) -> bool:
    """True iff the local zeta product equals the ambient global zeta.

    True means the portfolio can be the complete periodic-orbit set of some
    map of the ambient space; false means an orbit is missing or wrong.
    """
    return equals(portfolio_zeta(p), ambient_zeta(p.ambient))


def structural_checks(p: Portfolio) -> StructuralReport:
    """Evaluate the structural constraints forced on complete portfolios.

    Item 1: at most one source with degree outside {-1, 0, 1}, and such a
    source only on a sphere of degree d with |d| >= 1, fixed, of degree
    exactly d.  Item 2: at least one sink-or-degree-1-source orbit, at least
    two on a degree-1 sphere.  Item 3: every degree-(-1) source of period m
    needs another orbit of period m, or an even m with a degree-(-1) source
    of period m/2.
    """
    violations = []
    exceptional = _exceptional_sources(p)
    if len(exceptional) > 1:
        violations.append(1)
    elif len(exceptional) == 1:
        o = exceptional[0]
        d = _ambient_degree(p.ambient)
        if isinstance(p.ambient, Disk) or abs(d) < 1 or o.period != 1 or o.kind.degree != d:
            violations.append(1)

    plain = _sinks_and_unit_sources(p)
    needed = 2 if isinstance(p.ambient, Sphere) and p.ambient.degree == 1 else 1
    if len(plain) < needed:
        violations.append(2)

    periods = [o.period for o in p.orbits]
    minus_one_periods = [o.period for o in _minus_one_sources(p)]
    for m in minus_one_periods:
        has_peer = periods.count(m) >= 2
        has_half = m % 2 == 0 and (m // 2) in minus_one_periods
        if not (has_peer or has_half):
            violations.append(3)
            break

    return StructuralReport(tuple(violations))


def infinitude_triggers(p: Portfolio) -> tuple[InfinitudeTrigger, ...]:
    """Sufficient conditions for the underlying map to have infinitely many
    periodic orbits, evaluated against the portfolio.

    Any trigger means: no map with all periodic orbits isolated as invariant
    sets can have exactly these orbits and finitely many periodic points.
    """
    triggers: list[InfinitudeTrigger] = []
    exceptional = _exceptional_sources(p)
    d = _ambient_degree(p.ambient)

    if len(exceptional) >= 2:
        triggers.append(InfinitudeTrigger(
            "multiple-exceptional-sources",
            f"{len(exceptional)} sources of degree outside {{-1, 0, 1}}; at most one can exist",
        ))
    elif len(exceptional) == 1:
        o = exceptional[0]
        r = o.kind.degree
        if o.period != 1 or d != r:
            triggers.append(InfinitudeTrigger(
                "exceptional-source-misplaced",
                f"the unique degree-{r} source has period {o.period} and the ambient degree is {d}; "
                f"it must be fixed with degree equal to the ambient degree",
            ))

    plain = _sinks_and_unit_sources(p)
    if not plain or (len(plain) == 1 and isinstance(p.ambient, Sphere) and p.ambient.degree == 1):
        triggers.append(InfinitudeTrigger(
            "attractor-shortage",
            f"only {len(plain)} sink-or-degree-1-source orbit(s) present"
            + (" on a degree-1 sphere" if d == 1 else ""),
        ))

    periods = [o.period for o in p.orbits]
    minus_one_periods = sorted({o.period for o in _minus_one_sources(p)})
    for m in minus_one_periods:
        if m % 2 == 1 and periods.count(m) < 2:
            triggers.append(InfinitudeTrigger(
                "odd-period-minus-one-source-alone",
                f"a degree-(-1) source of odd period {m} has no other period-{m} orbit",
            ))
        if m % 2 == 0 and (m // 2) not in minus_one_periods:
            triggers.append(InfinitudeTrigger(
                "even-period-minus-one-source-unpaired",
                f"a degree-(-1) source of even period {m} has no degree-(-1) source of period {m // 2}",
            ))
    return tuple(triggers)


def lefschetz_fixed_point_sum(p: Portfolio, n: int) -> int:
    """Sum of the fixed point indices of the n-th iterate over all orbits.

    An orbit of period m contributes m times the per-point index of the
    n-th iterate when m divides n, and nothing otherwise.  For a consistent
    sphere portfolio of degree d the sum is 1 + d^n.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if not check_consistency(p):
        raise InconsistentPortfolio(
            "portfolio zeta differs from the ambient zeta; "
            "the index sum cannot be read as a Lefschetz number"
        )
    total = 0
    for o in p.orbits:
        m = o.period
        if n % m:
            continue
        j = n // m
        kind = o.kind
        if isinstance(kind, Sink):
            per_point = 1
        elif isinstance(kind, Source):
            per_point = kind.degree ** j
        else:
            per_point = 1 - sum(k * b for k, b in kind.shape if j % k == 0)
        total += m * per_point
    return total


def growth_lower_bound(d: int, n: int) -> GrowthBound:
    """The bound 1 + d^n on the number of fixed points of the n-th iterate.

    Valid for degree-d sphere maps whose periodic orbits are all isolated as
    invariant sets and which have no source of degree r with |r| > 1.  The
    rate check compares the bound against |d|^n exactly, so huge n is fine.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    bound = 1 + d ** n
    vacuous = bound <= 0
    rate: bool | None = None
    if abs(d) >= 2:
        rate = max(1, bound) >= abs(d) ** n
    return GrowthBound(bound, vacuous, rate)
