"""Built-in planar dynamical systems and a winding-number index engine.

The index of an isolated fixed point p of f^n is the winding number of
g(x) = f^n(x) - x along a small circle around p.  The engine samples g on
the circle adaptively until consecutive directions differ by less than a
quarter turn, then reads the integer off the accumulated angle.

The interesting maps live on a cylinder S^1 x R whose lower end compactifies
to the origin through the chart (theta, r) -> (e^r cos theta, e^r sin theta),
so the distinguished fixed point is an honest planar point with computable
small circles around it.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Mapping

from .sequences import IndexSequence

TWO_PI = 2.0 * math.pi
ARC_STEP_LIMIT = math.pi / 2.0  # refine any sampled arc at or beyond this
RESIDUAL_TURNS = 1e-6  # tolerated distance of the angle sum from an integer


class DomainError(ValueError):
    """The point lies outside the map's chart."""


class FixedPointOnCurve(RuntimeError):
    """A sample of f^n - id fell below epsilon; the circle hits a fixed point."""


class RefinementExhausted(RuntimeError):
    """Adaptive bisection hit max_depth; the radius is unsuitable."""


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("coordinates must be finite")


ORIGIN = Point(0.0, 0.0)


@dataclass(frozen=True)
class WindingOptions:
    initial_samples: int = 256
    epsilon: float = 1e-12
    max_depth: int = 24

    def __post_init__(self):
        if self.initial_samples < 8:
            raise ValueError("initial_samples must be >= 8")
        if self.epsilon <= 0.0:
            raise ValueError("epsilon must be positive")
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")


@dataclass(frozen=True)
class WindingResult:
    index: int
    samples_used: int
    max_arc_step: float


def _wrap_angle(theta: float) -> float:
    """Reduce to [0, 2*pi)."""
    theta = math.fmod(theta, TWO_PI)
    return theta + TWO_PI if theta < 0.0 else theta


def _from_cylinder(theta: float, r: float) -> Point:
    rho = math.exp(r)
    return Point(rho * math.cos(theta), rho * math.sin(theta))


@dataclass(frozen=True)
class SinkExample:
    """Canonical contraction x -> x/2; the origin is a sink of index 1."""

    def evaluate(self, pt: Point) -> Point:
        return Point(pt.x / 2.0, pt.y / 2.0)


@dataclass(frozen=True)
class SourceExample:
    """Canonical degree-d expansion: modulus doubles, angle multiplies by d.

    The origin is a source of degree d, so the index of the n-th iterate is
    d^n: on any small circle |f^n| exceeds |x|, hence f^n - id winds with
    f^n itself, d^n times.
    """

    degree: int

    def __post_init__(self):
        if type(self.degree) is not int or self.degree == 0:
            raise ValueError("source degree must be a nonzero integer")

    def evaluate(self, pt: Point) -> Point:
        rho = math.hypot(pt.x, pt.y)
        if rho == 0.0:
            return ORIGIN
        phi = self.degree * math.atan2(pt.y, pt.x)
        return Point(2.0 * rho * math.cos(phi), 2.0 * rho * math.sin(phi))


class RealizationMap:
    """Disk map whose origin realizes the sequence 1 - sum_{k|n} k*a_k.

    A circle map h keeps, for each requested period k, a_k attracting
    k-orbits: every orbit point sits at the center of a plateau of
    half-width delta on which h is constant, sending the plateau to the next
    point of its cycle; between plateaus h interpolates linearly along the
    shortest arc.  The bump g is positive exactly on the plateaus
    (g = delta - distance to the nearest orbit point), and the full map
    (theta, r) -> (h(theta), min(r + g(theta), 0)) keeps the closed unit
    disk invariant: boundary orbit points are attracting with index 1 and
    the origin makes up the difference.
    """

    def __init__(self, F: set[int], multiplicities: Mapping[int, int]):
        if not F:
            raise ValueError("F must be non-empty")
        if set(multiplicities) != set(F):
            raise ValueError("multiplicity keys must equal F")
        for k in F:
            if type(k) is not int or k < 1:
                raise ValueError(f"period {k!r} must be a positive integer")
            if multiplicities[k] < 1:
                raise ValueError(f"multiplicity of period {k} must be >= 1")
        self.F = frozenset(F)
        self.multiplicities = dict(sorted(multiplicities.items()))

        # one angular block per cycle, orbit points evenly spread inside it
        cycles = [k for k in sorted(F) for _ in range(multiplicities[k])]
        block = TWO_PI / len(cycles)
        angles: list[float] = []
        succ: list[int] = []
        for i, k in enumerate(cycles):
            start = len(angles)
            for j in range(k):
                angles.append(block * (i + (j + 0.5) / k))
                succ.append(start + (j + 1) % k)
        order = sorted(range(len(angles)), key=angles.__getitem__)
        self._angles = [angles[i] for i in order]
        self._succ_angle = [angles[succ[i]] for i in order]

        gaps = [
            self._angles[(i + 1) % len(self._angles)] - self._angles[i]
            for i in range(len(self._angles))
        ]
        gaps[-1] += TWO_PI
        # plateau half-width; an eighth of the tightest gap keeps plateaus disjoint
        self.delta = min(gaps) / 8.0

    def _nearest(self, theta: float) -> tuple[int, float]:
        """Index of the nearest orbit point and the circular distance to it."""
        a = self._angles
        i = bisect_right(a, theta)
        best_i, best_d = -1, math.inf
        for j in (i - 1, i % len(a)):
            jj = j % len(a)
            d = abs(theta - a[jj])
            d = min(d, TWO_PI - d)
            if d < best_d:
                best_i, best_d = jj, d
        return best_i, best_d

    def _h(self, theta: float) -> float:
        a = self._angles
        m = len(a)
        i, dist = self._nearest(theta)
        if dist <= self.delta:
            return self._succ_angle[i]
        # between plateau of point i0 and plateau of point i0+1
        i0 = bisect_right(a, theta) - 1
        if i0 < 0:
            i0 = m - 1
        i1 = (i0 + 1) % m
        left = a[i0] + self.delta
        right = a[i1] - self.delta
        th = theta
        if i1 <= i0:  # wrapped segment
            right += TWO_PI
            if th < left:
                th += TWO_PI
        u = (th - left) / (right - left)
        v0 = self._succ_angle[i0]
        v1 = self._succ_angle[i1]
        jump = math.remainder(v1 - v0, TWO_PI)  # shortest signed arc
        return _wrap_angle(v0 + u * jump)

    def _g(self, theta: float) -> float:
        _, dist = self._nearest(theta)
        return self.delta - dist

    def evaluate(self, pt: Point) -> Point:
        rho = math.hypot(pt.x, pt.y)
        if rho > 1.0 + 1e-12:
            raise DomainError(f"point with |x| = {rho} outside the closed unit disk")
        if rho == 0.0:
            return ORIGIN
        theta = _wrap_angle(math.atan2(pt.y, pt.x))
        r = min(math.log(rho), 0.0)
        return _from_cylinder(self._h(theta), min(r + self._g(theta), 0.0))

    def boundary_orbit_points(self) -> int:
        """Number of periodic points placed on the unit circle."""
        return len(self._angles)


class UnboundedExample:
    """Plane map fixing the origin with index 2^n - 1 at the n-th iterate.

    Away from the angular strip |theta| <= pi/8 the map doubles the circle
    (a covering fixing that interval pointwise, linear elsewhere) and pushes
    radially outward by one chart unit.  Inside the strip it is conjugate to
    the strip homeomorphism (x, y) -> (x + x(1 - |x|), y + s(x, y)) with
    s(x, y) = (1 - |x|) clamp(y, -1, 1) + |x|, which plants a source on the
    unit circle and a ray of points falling into the origin, so the origin
    is not isolated as an invariant set and its index sequence is unbounded.
    """

    STRIP_HALF_WIDTH = math.pi / 8.0
    # the degree-2 covering rises 2*pi - pi/4 + 2*pi over the complementary arc
    SLOPE = (4.0 * math.pi - math.pi / 4.0) / (2.0 * math.pi - math.pi / 4.0)

    def _h(self, theta: float) -> float:
        w = self.STRIP_HALF_WIDTH
        theta = _wrap_angle(theta + math.pi) - math.pi  # to [-pi, pi)
        if abs(theta) <= w:
            return theta
        if theta < 0.0:
            theta += TWO_PI
        return _wrap_angle(w + self.SLOPE * (theta - w))

    def evaluate(self, pt: Point) -> Point:
        rho = math.hypot(pt.x, pt.y)
        if rho == 0.0:
            return ORIGIN
        theta = _wrap_angle(math.atan2(pt.y, pt.x) + math.pi) - math.pi
        r = math.log(rho)
        w = self.STRIP_HALF_WIDTH
        if abs(theta) <= w:
            x = theta / w  # strip chart onto [-1, 1] x R
            s = (1.0 - abs(x)) * max(-1.0, min(1.0, r)) + abs(x)
            return _from_cylinder(w * (x + x * (1.0 - abs(x))), r + s)
        return _from_cylinder(self._h(theta), r + 1.0)


PlanarMap = SinkExample | SourceExample | RealizationMap | UnboundedExample


def iterate(planar_map, pt: Point, n: int) -> Point:
    """n-fold composition; n = 0 is the identity."""
    if n < 0:
        raise ValueError("n must be >= 0")
    for _ in range(n):
        pt = planar_map.evaluate(pt)
    return pt


def winding_index(
    planar_map,
    n: int,
    center: Point = ORIGIN,
    radius: float = math.exp(-3.0),
    opts: WindingOptions = WindingOptions(),
) -> WindingResult:
    """Winding number of f^n - id along the circle around center.

    Samples the displacement field on the circle, bisecting any arc whose
    direction change reaches a quarter turn, so the lifted angle between
    adjacent samples is unambiguous.  The accumulated angle divided by a
    full turn must land within RESIDUAL_TURNS of an integer.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if radius <= 0.0:
        raise ValueError("radius must be positive")

    def displacement(phi: float) -> tuple[float, float]:
        p = Point(center.x + radius * math.cos(phi), center.y + radius * math.sin(phi))
        q = iterate(planar_map, p, n)
        gx, gy = q.x - p.x, q.y - p.y
        if math.hypot(gx, gy) < opts.epsilon:
            raise FixedPointOnCurve(f"|f^{n}(x) - x| < {opts.epsilon} at angle {phi}")
        return gx, gy

    m = opts.initial_samples
    phis = [TWO_PI * i / m for i in range(m)]
    gs = [displacement(phi) for phi in phis]
    samples = m

    total = 0.0
    max_step = 0.0
    stack = [
        (phis[i], gs[i], phis[(i + 1) % m] + (TWO_PI if i + 1 == m else 0.0), gs[(i + 1) % m], 0)
        for i in range(m)
    ]
    while stack:
        phi_a, ga, phi_b, gb, depth = stack.pop()
        cross = ga[0] * gb[1] - ga[1] * gb[0]
        dot = ga[0] * gb[0] + ga[1] * gb[1]
        step = math.atan2(cross, dot)
        if abs(step) < ARC_STEP_LIMIT:
            total += step
            if abs(step) > max_step:
                max_step = abs(step)
            continue
        if depth >= opts.max_depth:
            raise RefinementExhausted(
                f"arc at angle {phi_a:.6f} still turns by {step:.3f} after {depth} bisections"
            )
        phi_m = 0.5 * (phi_a + phi_b)
        gm = displacement(phi_m)
        samples += 1
        stack.append((phi_a, ga, phi_m, gm, depth + 1))
        stack.append((phi_m, gm, phi_b, gb, depth + 1))

    turns = total / TWO_PI
    index = round(turns)
    if abs(turns - index) > RESIDUAL_TURNS:
        raise RefinementExhausted(
            f"angle sum {turns} turns is not within {RESIDUAL_TURNS} of an integer"
        )
    return WindingResult(index, samples, max_step)


def index_sequence_numerical(
    planar_map,
    horizon: int,
    center: Point = ORIGIN,
    radius: float = math.exp(-3.0),
    opts: WindingOptions = WindingOptions(),
) -> IndexSequence:
    """Winding indices of f^n - id for n = 1..horizon, as a sequence."""
    if horizon < 1:
        raise ValueError("horizon must be a positive integer")
    return IndexSequence(tuple(
        winding_index(planar_map, n, center, radius, opts).index
        for n in range(1, horizon + 1)
    ))
