"""Lefschetz zeta functions as exact products of (1 - r*t^k)^e factors.

The zeta function of an index sequence is exp(sum I_n t^n / n); for a
sequence sum_k a_k sigma^k it is the rational function prod (1-t^k)^{-a_k}.
Everything here is exact: integer polynomial products for equality, rational
coefficients for truncated expansions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .sequences import DoldDecomposition, IndexSequence

Factor = tuple[int, int, int]  # (r, k, e) meaning (1 - r*t^k)^e


@dataclass(frozen=True)
class ZetaProductForm:
    """Multiset of factors (1 - r*t^k)^e, canonically merged and sorted.

    Factors with r = 0 are the constant 1 and are dropped; equal (r, k)
    pairs merge by summing exponents; zero exponents are dropped.
    """

    factors: tuple[Factor, ...] = ()

    def __post_init__(self):
        merged: dict[tuple[int, int], int] = {}
        for r, k, e in self.factors:
            if type(r) is not int or type(k) is not int or type(e) is not int:
                raise ValueError(f"factor ({r!r}, {k!r}, {e!r}) must be integer triple")
            if k < 1:
                raise ValueError(f"factor power k={k} must be >= 1")
            if r == 0:
                continue
            merged[(r, k)] = merged.get((r, k), 0) + e
        canon = tuple(
            (r, k, e) for (r, k), e in sorted(merged.items(), key=lambda it: (it[0][1], it[0][0]))
            if e != 0
        )
        object.__setattr__(self, "factors", canon)

    def numerator(self) -> list[int]:
        """Coefficients of prod over e > 0 of (1 - r*t^k)^e."""
        poly = [1]
        for r, k, e in self.factors:
            for _ in range(e):
                poly = _poly_times_factor(poly, r, k)
        return poly

    def denominator(self) -> list[int]:
        """Coefficients of prod over e < 0 of (1 - r*t^k)^{-e}."""
        poly = [1]
        for r, k, e in self.factors:
            for _ in range(-e):
                poly = _poly_times_factor(poly, r, k)
        return poly

    def __mul__(self, other: "ZetaProductForm") -> "ZetaProductForm":
        if not isinstance(other, ZetaProductForm):
            return NotImplemented
        return ZetaProductForm(self.factors + other.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"

        def var(k: int) -> str:
            return "t" if k == 1 else f"t^{k}"

        def base(r: int, k: int) -> str:
            if r == 1:
                return f"(1 - {var(k)})"
            if r == -1:
                return f"(1 + {var(k)})"
            return f"(1 - {r}*{var(k)})" if r > 0 else f"(1 + {-r}*{var(k)})"

        num = " ".join(base(r, k) + (f"^{e}" if e != 1 else "") for r, k, e in self.factors if e > 0)
        den = " ".join(base(r, k) + (f"^{-e}" if e != -1 else "") for r, k, e in self.factors if e < 0)
        if num and den:
            return f"{num} / [{den}]"
        if den:
            return f"1 / [{den}]"
        return num

    def to_list(self) -> list[dict]:
        return [{"r": r, "k": k, "e": e} for r, k, e in self.factors]

    @classmethod
    def from_list(cls, items: Iterable[Mapping]) -> "ZetaProductForm":
        try:
            factors = tuple((f["r"], f["k"], f["e"]) for f in items)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"not a factor list: {exc}") from exc
        return cls(factors)


@dataclass(frozen=True)
class PowerSeries:
    """Exact rational coefficients for degrees 0..N."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if not coeffs:
            raise ValueError("a power series needs at least the constant term")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.degree, other.degree)
        a, b = self.coefficients, other.coefficients
        out = [Fraction(0)] * (n + 1)
        for i in range(min(len(a), n + 1)):
            if a[i] == 0:
                continue
            for j in range(min(len(b), n + 1 - i)):
                out[i + j] += a[i] * b[j]
        return PowerSeries(tuple(out))

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coefficients]

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> "PowerSeries":
        try:
            return cls(tuple(Fraction(s) for s in items))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a list of p/q strings: {exc}") from exc


def _poly_times_factor(poly: list[int], r: int, k: int) -> list[int]:
    """Exact product poly * (1 - r*t^k)."""
    out = poly + [0] * k
    for i in range(len(poly)):
        out[i + k] -= r * poly[i]
    return out


def zeta_from_dold(decomp: DoldDecomposition | Mapping[int, int]) -> ZetaProductForm:
    """The rational form prod_k (1 - t^k)^{-a_k} of a decomposition."""
    coeffs = decomp.coefficients if isinstance(decomp, DoldDecomposition) else decomp
    return ZetaProductForm(tuple((1, k, -a) for k, a in coeffs.items() if a != 0))


def expand(z: ZetaProductForm, horizon: int) -> PowerSeries:
    """Exact truncated series of the rational function, degrees 0..horizon.

    Positive exponents multiply in place; negative exponents expand the
    geometric series of r*t^k by forward substitution.
    """
    if horizon < 0:
        raise ValueError("horizon must be >= 0")
    c: list = [0] * (horizon + 1)
    c[0] = 1
    for r, k, e in z.factors:
        for _ in range(abs(e)):
            if e > 0:
                for i in range(horizon, k - 1, -1):
                    c[i] -= r * c[i - k]
            else:
                for i in range(k, horizon + 1):
                    c[i] += r * c[i - k]
    return PowerSeries(tuple(Fraction(x) for x in c))


def exp_series(seq: IndexSequence) -> PowerSeries:
    """Truncated exp(sum I_n t^n / n) in exact rational arithmetic.

    Uses the recurrence n*c_n = sum_{j=1..n} I_j c_{n-j} (differentiate the
    exponential), avoiding factorial blowup.
    """
    terms = seq.terms
    n = len(terms)
    c = [Fraction(0)] * (n + 1)
    c[0] = Fraction(1)
    for i in range(1, n + 1):
        acc = Fraction(0)
        for j in range(1, i + 1):
            if terms[j - 1]:
                acc += terms[j - 1] * c[i - j]
        c[i] = acc / i
    return PowerSeries(tuple(c))


def multiply(z1: ZetaProductForm, z2: ZetaProductForm) -> ZetaProductForm:
    """Merged factor multiset, canonicalized."""
    return z1 * z2


def equals(z1: ZetaProductForm, z2: ZetaProductForm) -> bool:
    """Identity of the rational functions, by cross multiplication.

    Compares numerator(z1)*denominator(z2) with numerator(z2)*denominator(z1)
    as exact polynomials; factor multisets are not canonical (for instance
    1 - t^2 equals (1 - t)(1 + t)).
    """
    lhs = _poly_mul(z1.numerator(), z2.denominator())
    rhs = _poly_mul(z2.numerator(), z1.denominator())
    return _poly_trim(lhs) == _poly_trim(rhs)


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def global_zeta_sphere(d: int) -> ZetaProductForm:
    """Zeta of a degree-d sphere map: 1 / ((1 - t)(1 - d*t))."""
    return ZetaProductForm(((1, 1, -1), (d, 1, -1)))


def global_zeta_disk() -> ZetaProductForm:
    """Zeta of a disk self-map: 1 / (1 - t)."""
    return ZetaProductForm(((1, 1, -1),))
