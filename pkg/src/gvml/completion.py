"""Completion points of a classical rational metric space.

A completion point is a representative sequence of base points together
with an explicit convergence modulus: modulus(j) returns an index beyond
which representatives are pairwise closer than 2^-j. Distances between
completion points are therefore computable as rational intervals of known
width, and the standard fuzzy metric lifts to intervals through the
monotone map t / (t + d). Equality of completion points is not decidable;
only interval separation or overlap is ever reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable

from .errors import DomainError, IntegrityError
from .space import MetricSpace, Point, as_frac

ZERO = Fraction(0)
ONE = Fraction(1)

_SPOT_LEVELS = (1, 4, 8)
_SPOT_OFFSETS = ((0, 1), (0, 6), (2, 9))


@dataclass(frozen=True)
class CompletionPoint:
    """Representative-plus-modulus encoding of a point in the completion.

    constant is set when the representative sequence is a single repeated
    base point (the embedded copy of the base space); distances between
    two constant points are exact.
    """

    base: MetricSpace
    rep: Callable[[int], Point]
    modulus: Callable[[int], int]
    name: str = ""
    constant: Point | None = None


def completion_point(base: MetricSpace, rep: Callable[[int], Point],
                     modulus: Callable[[int], int], name: str = "",
                     spot_check: bool = True) -> CompletionPoint:
    """Wrap a representative sequence, spot-checking the modulus honesty.

    The check samples a few levels j and verifies pairwise distances
    beyond modulus(j) stay below 2^-j; a dishonest modulus raises rather
    than silently producing wrong intervals later.
    """
    p = CompletionPoint(base, rep, modulus, name)
    if spot_check:
        for j in _SPOT_LEVELS:
            start = modulus(j)
            if start < 1:
                raise IntegrityError(f"modulus({j}) = {start} is not a valid index")
            bound = Fraction(1, 2 ** j)
            for a, b in _SPOT_OFFSETS:
                dv = base.d(rep(start + a), rep(start + b))
                if not dv < bound:
                    raise IntegrityError(
                        f"modulus dishonest at level {j}: indices "
                        f"{start + a},{start + b} are {dv} apart (allowed < {bound})")
    return p


def embed(base: MetricSpace, x: Point) -> CompletionPoint:
    """Isometric embedding of a base point: constant representative."""
    if base.contains is not None and not base.contains(x):
        raise DomainError(f"point {x!r} not in universe of {base.name}")
    return CompletionPoint(base, lambda _i, _x=x: _x, lambda _j: 1,
                           name=str(x), constant=x)


def dist_interval(p: CompletionPoint, q: CompletionPoint,
                  j: int) -> tuple[Fraction, Fraction]:
    """Rational interval of width <= 2^(2-j) containing the completed distance.

    Representatives are compared at the larger of the two moduli; a probe
    a few indices later cross-checks the moduli and raises on violation.
    """
    if j < 1:
        raise DomainError("precision level j must be >= 1")
    if p.base is not q.base:
        raise DomainError("completion points live over different base spaces")
    if p.constant is not None and q.constant is not None:
        dv = p.base.d(p.constant, q.constant)
        return dv, dv
    i = max(p.modulus(j), q.modulus(j))
    c = p.base.d(p.rep(i), q.rep(i))
    slack = Fraction(1, 2 ** (j - 1))
    c2 = p.base.d(p.rep(i + 3), q.rep(i + 3))
    if not abs(c2 - c) < slack:
        raise IntegrityError(
            f"modulus violation at level {j}: sampled distances {c} and {c2} "
            f"differ by {abs(c2 - c)} (allowed < {slack})")
    lo = c - slack
    return (lo if lo > 0 else ZERO), c + slack


def lift_standard_fuzzy(p: CompletionPoint, q: CompletionPoint, t,
                        j: int) -> tuple[Fraction, Fraction]:
    """Interval containing the lifted membership t / (t + d~(p, q)).

    The map is monotone decreasing in d, so the distance interval's
    endpoints map to the membership interval's endpoints, reversed.
    """
    t = as_frac(t)
    if t <= 0:
        raise DomainError("t must be positive")
    lo_d, hi_d = dist_interval(p, q, j)
    return t / (t + hi_d), t / (t + lo_d)


def rational_approx(p: CompletionPoint, radius: Fraction) -> Point:
    """A base point within radius/2 of p, read off the representative.

    Beyond modulus(j) every representative is within 2^-j of the limit;
    choosing 2^-j <= radius/2 makes the returned point close enough for
    certified use as a dense approximation.
    """
    radius = as_frac(radius)
    if radius <= 0:
        raise DomainError("radius must be positive")
    if p.constant is not None:
        return p.constant
    j = 1
    while Fraction(1, 2 ** j) * 2 > radius:
        j += 1
    return p.rep(p.modulus(j))


def sqrt_point(base: MetricSpace, k: int, name: str = "") -> CompletionPoint:
    """sqrt(k) as decimal truncations with a dyadic modulus.

    rep(i) is sqrt(k) truncated to i decimal digits, so representatives at
    indices >= n are pairwise within 2 * 10^-n; the modulus converts that
    to the dyadic scale exactly.
    """
    if k < 0:
        raise DomainError("k must be nonnegative")

    def rep(i: int) -> Fraction:
        scale = 10 ** i
        return Fraction(isqrt(k * scale * scale), scale)

    def modulus(j: int) -> int:
        need = 2 ** (j + 1)
        n = 1
        while 10 ** n < need:
            n += 1
        return n

    return completion_point(base, rep, modulus, name=name or f"sqrt({k})")
