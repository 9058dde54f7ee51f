"""Constructive procedures: subsequence extraction and ball-based subsets.

Each routine here is the executable core of an existence argument. The
outputs are certificates: index chains that re-verify against the space
they were extracted from. A None result is evidence at the given scale
only, never a proof that no chain exists.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .completion import CompletionPoint, dist_interval, embed
from .errors import (ConstantSubsequenceError, DeltaSearchError, DomainError,
                     IntegrityError)
from .sequences import Scale, SequenceSpec, from_values
from .space import FuzzyMetricSpace, Point, as_frac
from .tnorm import TNorm, raw_fn

ONE = Fraction(1)


@dataclass(frozen=True)
class IndexChain:
    """Strictly increasing indices into a sequence, with provenance.

    depth is the schedule depth the chain certifies (for ball schedules)
    or simply its length. anchor records the point the construction was
    driven by, when there is one.
    """

    indices: tuple[int, ...]
    provenance: str
    depth: int
    anchor: Point | None = None
    note: str = ""

    def __post_init__(self) -> None:
        if any(b <= a for a, b in zip(self.indices, self.indices[1:])):
            raise DomainError("index chain must be strictly increasing")
        if self.indices and self.indices[0] < 1:
            raise DomainError("indices are 1-based")

    def __len__(self) -> int:
        return len(self.indices)


def distinct_subsequence(space: FuzzyMetricSpace, seq: SequenceSpec) -> IndexChain:
    """Last-occurrence recursion yielding a chain of pairwise-distinct values.

    r_1 is the last occurrence of the first term's value and each r_{n+1}
    is the last occurrence (within the horizon) of the value at r_n + 1.
    Starting from a last occurrence is what makes every chain value new:
    a repeat of an earlier chain value would contradict that value's last
    occurrence already being in the chain. Requires that no single value
    occupies more than half the horizon, the finite stand-in for "no
    constant subsequence"; consecutive chain terms carry the closeness of
    consecutive original terms, so G-Cauchy input yields G-Cauchy output
    at the same scale.
    """
    N = seq.horizon
    xs = seq.prefix(N)
    if space.contains is not None:
        for p in xs:
            if not space.contains(p):
                raise DomainError(f"point {p!r} not in universe of {space.name}")
    value, count = Counter(xs).most_common(1)[0]
    if count > N // 2:
        raise ConstantSubsequenceError(value, count, N)

    last: dict = {}
    for i, v in enumerate(xs, 1):
        last[v] = i
    r = last[xs[0]]
    chain = [r]
    while r < N:
        r = last[xs[r]]  # xs[r] is the term at index r+1 (xs is 0-based)
        chain.append(r)

    values = [xs[i - 1] for i in chain]
    if len(set(values)) != len(values):
        raise IntegrityError("last-occurrence chain produced a repeated value")
    return IndexChain(tuple(chain), "last_occurrence", len(chain),
                      note="occurrences beyond the horizon unexamined")


def cauchy_subsequence(space: FuzzyMetricSpace, seq: SequenceSpec,
                       candidates: Iterable[Point], scale: Scale) -> IndexChain | None:
    """Greedy shrinking-ball chain around the first workable candidate.

    For each candidate c, selects n_1 < n_2 < ... with
    M(x_{n_r}, c, t) > 1 - 1/(r+1) up to depth R. All chain members from
    position k on sit inside the ball of radius 1/(k+1) around c, so the
    triangle axiom bounds every tail pair at time 2t; the chain re-passes
    the Cauchy check at any epsilon with tnorm(1-d, 1-d) > 1-epsilon for
    d = 1/(k+1). Returns None when no candidate reaches depth R.
    """
    cands = list(candidates)
    if not cands:
        raise DomainError("candidates must be nonempty")
    xs = seq.prefix(min(seq.horizon, scale.horizon))
    N = len(xs)
    R = scale.depth
    t = scale.t
    mf = space.m

    bounds = [ONE - Fraction(1, r + 1) for r in range(1, R + 1)]
    for c in cands:
        chain: list[int] = []
        n = 1
        for bound in bounds:
            while n <= N and not mf(xs[n - 1], c, t) > bound:
                n += 1
            if n > N:
                break
            chain.append(n)
            n += 1
        if len(chain) == R:
            return IndexChain(tuple(chain), "shrinking_ball", R, anchor=c)
    return None


def largest_delta(op: TNorm, epsilon: Fraction, max_halvings: int = 40) -> Fraction:
    """Largest dyadic delta with tnorm(1-delta, 1-delta) > 1-epsilon.

    Continuity of the t-norm guarantees some delta works; this search only
    sees the grid {1/2, 1/4, ..., 2^-40} and raises when the grid is too
    coarse for the requested epsilon.
    """
    epsilon = as_frac(epsilon)
    if not Fraction(0) < epsilon < ONE:
        raise DomainError(f"epsilon must lie in (0,1), got {epsilon}")
    f = raw_fn(op)
    bound = ONE - epsilon
    for k in range(1, max_halvings + 1):
        delta = Fraction(1, 2 ** k)
        if f(ONE - delta, ONE - delta) > bound:
            return delta
    raise DeltaSearchError(
        f"delta-search failed: no dyadic delta up to 2^-{max_halvings} "
        f"inverts {op.kind} for epsilon={epsilon}")


def cofinal_subset_via_ball(space: FuzzyMetricSpace, seq: SequenceSpec,
                            center: Point, epsilon, t, m: int) -> tuple[int, ...] | None:
    """All indices whose terms fall in B(center, delta, t/2), if m or more do.

    delta comes from largest_delta, so for any returned p, q the triangle
    axiom through the center gives M(x_p, x_q, t) >= tnorm(1-delta, 1-delta)
    > 1 - epsilon: the returned set is pairwise close by construction.
    """
    epsilon = as_frac(epsilon)
    t = as_frac(t)
    if m < 2:
        raise DomainError("m must be >= 2")
    if t <= 0:
        raise DomainError("t must be positive")
    delta = largest_delta(space.tnorm, epsilon)
    bound = ONE - delta
    half = t / 2
    mf = space.m
    xs = seq.prefix(seq.horizon)
    idx = tuple(n for n in range(1, seq.horizon + 1)
                if mf(xs[n - 1], center, half) > bound)
    return idx if len(idx) >= m else None


def approximate_from_dense(target: SequenceSpec,
                           dense: Callable[[CompletionPoint, Fraction], Point | None],
                           ) -> SequenceSpec:
    """Trace a sequence of completion points by base points, index by index.

    The n-th output point must sit within distance 1/(n(n+1)) of the n-th
    target point, which under the standard fuzzy metric is exactly the
    closeness M(phi(x_n), y_n, 1/(n+1)) > 1 - 1/(n+1). Each point returned
    by the dense generator is certified against that radius through
    dist_interval before acceptance; a None from the generator raises,
    naming the index and the radius it failed at.
    """
    points: list[Point] = []
    for n in range(1, target.horizon + 1):
        y = target.point(n)
        if not isinstance(y, CompletionPoint):
            raise DomainError(f"target term {n} is not a completion point")
        radius = Fraction(1, n * (n + 1))
        x = dense(y, radius)
        if x is None:
            from .errors import DensityError
            raise DensityError(n, radius)
        j = (n * (n + 1)).bit_length() + 3  # 2^(1-j) < radius/4
        _, hi = dist_interval(embed(y.base, x), y, j)
        if not hi < radius:
            raise IntegrityError(
                f"dense point at n={n} not certifiably within {radius}: "
                f"distance upper bound {hi}")
        points.append(x)
    return from_values(points, name=f"{target.name or 'target'}~dense")
