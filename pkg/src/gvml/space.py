"""Fuzzy metric spaces and classical metric spaces, checked at finite scale.

A fuzzy metric space is a triple (X, M, *): a point universe, a membership
function M(x, y, t) in (0,1] measuring closeness of x and y at time-scale
t, and a continuous t-norm. Infinite universes are represented by
membership predicates; every check here runs over explicit finite samples
supplied by the caller, so every verdict names its evidence.

Arithmetic is exact rational by default. A space may instead declare float
arithmetic with a comparison tolerance; axiom checks then report
INCONCLUSIVE when a comparison lands inside the tolerance collar instead
of letting rounding decide.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, Callable, Iterable

from .errors import DomainError
from .tnorm import PRODUCT, TNorm, raw_fn
from .verdict import Verdict, inconclusive, refuted, satisfied

Point = Any
ZERO = Fraction(0)
ONE = Fraction(1)


def as_frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise DomainError(f"expected an exact rational, got {x!r}")


@dataclass(frozen=True)
class MetricSpace:
    """A classical metric space with a rational-valued distance.

    coord, when set, asserts that d(x, y) == |coord(x) - coord(y)| for all
    universe points: the space embeds in the rational line. Several
    classifiers use this to run exact window sweeps.
    """

    name: str
    d: Callable[[Point, Point], Fraction]
    contains: Callable[[Point], bool] | None = None
    coord: Callable[[Point], Fraction] | None = None


def line_metric(name: str = "euclid1d",
                contains: Callable[[Point], bool] | None = None) -> MetricSpace:
    """Rational points on the line under d(x, y) = |x - y|."""
    def d(x: Point, y: Point) -> Fraction:
        return abs(as_frac(x) - as_frac(y))
    return MetricSpace(name, d, contains=contains, coord=as_frac)


def discrete_metric(name: str = "discrete",
                    contains: Callable[[Point], bool] | None = None) -> MetricSpace:
    def d(x: Point, y: Point) -> Fraction:
        return ZERO if x == y else ONE
    return MetricSpace(name, d, contains=contains)


def table_metric(points: list, rows: list[list], name: str = "table") -> MetricSpace:
    pts = list(points)
    if len(rows) != len(pts) or any(len(r) != len(pts) for r in rows):
        raise DomainError("distance table must be square and match the point list")
    idx = {p: i for i, p in enumerate(pts)}
    tab = [[as_frac(v) for v in row] for row in rows]

    def d(x: Point, y: Point) -> Fraction:
        try:
            return tab[idx[x]][idx[y]]
        except KeyError:
            raise DomainError(f"point {x!r} or {y!r} not in table universe") from None

    return MetricSpace(name, d, contains=lambda p: p in idx)


def check_metric_axioms(m: MetricSpace, sample: Iterable[Point]) -> Verdict:
    """Identity of indiscernibles, symmetry and the triangle inequality,
    exhaustively over the sample."""
    pts = _unique(sample)
    if not pts:
        raise DomainError("sample must be nonempty")
    n = len(pts)
    tab = [[m.d(pts[i], pts[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            v = tab[i][j]
            if v < 0:
                return refuted({"axiom": "nonnegativity", "x": pts[i], "y": pts[j], "d": v})
            if (v == 0) != (i == j):
                return refuted({"axiom": "identity", "x": pts[i], "y": pts[j], "d": v})
            if v != tab[j][i]:
                return refuted({"axiom": "symmetry", "x": pts[i], "y": pts[j],
                                "lhs": v, "rhs": tab[j][i]})
    for i in range(n):
        for j in range(n):
            dij = tab[i][j]
            for k in range(n):
                if tab[i][k] > dij + tab[j][k]:
                    return refuted({"axiom": "triangle", "x": pts[i], "y": pts[j],
                                    "z": pts[k], "lhs": tab[i][k],
                                    "rhs": dij + tab[j][k]})
    return satisfied(certificate={"points": n})


@dataclass(frozen=True)
class FuzzyMetricSpace:
    """Point universe plus membership function M(x, y, t) and a t-norm.

    base_metric is set only when the membership function is known to be
    the standard form t / (t + d) over that metric; classifiers exploit it
    for exact threshold conversion. t_continuous records constructor
    knowledge that M(x, y, .) is continuous (e.g. analytic formulas);
    sampling alone can never establish it.
    """

    name: str
    m: Callable[[Point, Point, Fraction], Fraction]
    tnorm: TNorm
    contains: Callable[[Point], bool] | None = None
    base_metric: MetricSpace | None = None
    t_continuous: bool = False
    exact: bool = True
    tol: float = 0.0


def eval_m(space: FuzzyMetricSpace, x: Point, y: Point, t) -> Fraction:
    """Membership value M(x, y, t); exact when the space is exact."""
    t = as_frac(t) if space.exact else t
    if not t > 0:
        raise DomainError(f"time-scale t must be positive, got {t}")
    if space.contains is not None:
        for p in (x, y):
            if not space.contains(p):
                raise DomainError(f"point {p!r} not in universe of {space.name}")
    return space.m(x, y, t)


def standard_from_metric(m: MetricSpace, name: str | None = None) -> FuzzyMetricSpace:
    """The standard fuzzy metric t / (t + d(x, y)) with the product t-norm."""
    def mem(x: Point, y: Point, t: Fraction) -> Fraction:
        return t / (t + m.d(x, y))
    return FuzzyMetricSpace(
        name or f"std({m.name})", mem, PRODUCT,
        contains=m.contains, base_metric=m, t_continuous=True,
    )


def md_threshold(epsilon: Fraction, t: Fraction) -> Fraction:
    """Distance bound equivalent to membership under the standard form:
    t/(t+d) > 1-eps  iff  d < t*eps/(1-eps), exactly."""
    epsilon = as_frac(epsilon)
    t = as_frac(t)
    if not (ZERO < epsilon < ONE and t > 0):
        raise DomainError("need epsilon in (0,1) and t > 0")
    return t * epsilon / (ONE - epsilon)


def subspace(space: FuzzyMetricSpace, subset) -> FuzzyMetricSpace:
    """Restriction of M to A x A x (0,inf) with the same t-norm.

    subset is a predicate or a finite point collection; finite collections
    are validated against the parent universe.
    """
    if callable(subset):
        parent = space.contains
        if parent is None:
            member = subset
        else:
            def member(p: Point, _sub=subset, _par=parent) -> bool:
                return _sub(p) and _par(p)
    else:
        pts = frozenset(subset)
        if not pts:
            raise DomainError("subspace requires a nonempty subset")
        if space.contains is not None:
            for p in pts:
                if not space.contains(p):
                    raise DomainError(f"point {p!r} not in universe of {space.name}")
        member = lambda p: p in pts
    return replace(space, name=f"{space.name}|A", contains=member)


def ball_contains(space: FuzzyMetricSpace, center: Point, r, t, y: Point) -> bool:
    """Membership of y in the open ball B(center, r, t) = {y : M > 1 - r}."""
    r = as_frac(r)
    if not ZERO < r < ONE:
        raise DomainError(f"ball radius must lie in (0,1), got {r}")
    return eval_m(space, center, y, t) > ONE - r


def _unique(points: Iterable[Point]) -> list[Point]:
    seen = []
    for p in points:
        if p not in seen:
            seen.append(p)
    return seen


class _Collar:
    """Tolerance-aware comparisons; a None outcome means the comparison fell
    inside the float collar and cannot be decided honestly."""

    def __init__(self, space: FuzzyMetricSpace) -> None:
        self.tol = 0 if space.exact else space.tol

    def le(self, lhs, rhs):
        diff = lhs - rhs
        if diff <= 0:
            return True
        return None if diff <= self.tol else False

    def eq(self, lhs, rhs):
        diff = abs(lhs - rhs)
        if diff == 0:
            return True
        return None if diff <= self.tol else False


def check_axioms(space: FuzzyMetricSpace, sample_points: Iterable[Point],
                 t_grid: Iterable) -> Verdict:
    """Decide the membership-function axioms over all sampled triples.

    Checked exhaustively: positivity, M = 1 exactly on the diagonal,
    symmetry, the t-norm triangle inequality over every (t, s) pair from
    the grid, and nondecrease in t over consecutive grid times. Continuity
    in t is not decidable from point evaluations; the certificate reports
    whether it is constructor-known, plus the sampled oscillation on a
    once-refined grid.
    """
    pts = _unique(sample_points)
    if not pts:
        raise DomainError("sample_points must be nonempty")
    conv = as_frac if space.exact else float
    times = sorted({conv(t) for t in t_grid})
    if not times:
        raise DomainError("t_grid must be nonempty")
    if times[0] <= 0:
        raise DomainError("t_grid entries must be positive")
    if space.contains is not None:
        for p in pts:
            if not space.contains(p):
                raise DomainError(f"point {p!r} not in universe of {space.name}")

    n = len(pts)
    mf = space.m
    cmp = _Collar(space)
    borderline: dict | None = None

    sums = sorted({a + b for a in times for b in times})
    all_times = sorted(set(times) | set(sums))
    tables = {tv: [[mf(pts[i], pts[j], tv) for j in range(n)] for i in range(n)]
              for tv in all_times}

    for tv in times:
        tab = tables[tv]
        for i in range(n):
            for j in range(n):
                v = tab[i][j]
                if not v > 0:
                    return refuted({"axiom": "a", "x": pts[i], "y": pts[j],
                                    "t": tv, "value": v})
                ident = cmp.eq(v, 1)
                if i == j:
                    if ident is False:
                        return refuted({"axiom": "b", "x": pts[i], "y": pts[j],
                                        "t": tv, "value": v})
                    if ident is None and borderline is None:
                        borderline = {"axiom": "b", "x": pts[i], "t": tv, "value": v}
                else:
                    if ident is True:
                        return refuted({"axiom": "b", "x": pts[i], "y": pts[j],
                                        "t": tv, "value": v})
                    if ident is None and borderline is None:
                        borderline = {"axiom": "b", "x": pts[i], "y": pts[j],
                                      "t": tv, "value": v}
                sym = cmp.eq(v, tab[j][i])
                if sym is False:
                    return refuted({"axiom": "c", "x": pts[i], "y": pts[j],
                                    "t": tv, "lhs": v, "rhs": tab[j][i]})
                if sym is None and borderline is None:
                    borderline = {"axiom": "c", "x": pts[i], "y": pts[j], "t": tv}

    max_jump = ZERO
    for t1, t2 in zip(times, times[1:]):
        tab1, tab2 = tables[t1], tables[t2]
        for i in range(n):
            for j in range(i + 1, n):
                mono = cmp.le(tab1[i][j], tab2[i][j])
                if mono is False:
                    return refuted({"axiom": "monotone_t", "x": pts[i], "y": pts[j],
                                    "t1": t1, "t2": t2,
                                    "v1": tab1[i][j], "v2": tab2[i][j]})
                if mono is None and borderline is None:
                    borderline = {"axiom": "monotone_t", "x": pts[i], "y": pts[j],
                                  "t1": t1, "t2": t2}
                jump = abs(tab2[i][j] - tab1[i][j])
                if jump > max_jump:
                    max_jump = jump

    # triangle inequality (d); tables that coincide as functions are
    # deduplicated so t-independent spaces pay for one combination only
    key_of: dict[Fraction, tuple] = {tv: tuple(map(tuple, tables[tv])) for tv in all_times}
    rep: dict[tuple, Fraction] = {}
    for tv in all_times:
        rep.setdefault(key_of[tv], tv)
    combos: dict[tuple, tuple] = {}
    for t in times:
        for s in times:
            k = (rep[key_of[t]], rep[key_of[s]], rep[key_of[t + s]])
            combos.setdefault(k, (t, s))
    tn = raw_fn(space.tnorm)
    checked = 0
    for (rt, rs, rsum), (wt, ws) in combos.items():
        ta, tb, tc = tables[rt], tables[rs], tables[rsum]
        for i in range(n):
            tai = ta[i]
            tci = tc[i]
            for j in range(n):
                a = tai[j]
                tbj = tb[j]
                for k in range(n):
                    checked += 1
                    tri = cmp.le(tn(a, tbj[k]), tci[k])
                    if tri is False:
                        return refuted({"axiom": "d", "x": pts[i], "y": pts[j],
                                        "z": pts[k], "t": wt, "s": ws,
                                        "lhs": tn(a, tbj[k]), "rhs": tci[k]})
                    if tri is None and borderline is None:
                        borderline = {"axiom": "d", "x": pts[i], "y": pts[j],
                                      "z": pts[k], "t": wt, "s": ws}

    refined_jump = _refined_oscillation(space, pts, times)
    cert = {
        "points": n,
        "t_grid": times,
        "triangle_checks": checked,
        "continuity_in_t": "known" if space.t_continuous else "inconclusive",
        "max_consecutive_t_jump": max_jump,
        "max_refined_t_jump": refined_jump,
    }
    if borderline is not None:
        return inconclusive(witness=borderline, certificate=cert)
    return satisfied(certificate=cert)


def _refined_oscillation(space: FuzzyMetricSpace, pts: list[Point],
                         times: list[Fraction]) -> Fraction | None:
    if len(times) < 2:
        return None
    mf = space.m
    worst = ZERO
    for t1, t2 in zip(times, times[1:]):
        mid = (t1 + t2) / 2
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                lo = mf(pts[i], pts[j], t1)
                mv = mf(pts[i], pts[j], mid)
                hi = mf(pts[i], pts[j], t2)
                jump = max(abs(mv - lo), abs(hi - mv))
                if jump > worst:
                    worst = jump
    return worst


def monotone_in_t_check(space: FuzzyMetricSpace,
                        pairs: Iterable[tuple[Point, Point]],
                        t_grid: Iterable) -> Verdict:
    """Nondecrease of M(x, y, .) over a strictly increasing time grid."""
    conv = as_frac if space.exact else float
    times = [conv(t) for t in t_grid]
    if any(t2 <= t1 for t1, t2 in zip(times, times[1:])):
        raise DomainError("t_grid must be strictly increasing")
    if not times or times[0] <= 0:
        raise DomainError("t_grid must be nonempty and positive")
    cmp = _Collar(space)
    borderline = None
    checked = 0
    for x, y in pairs:
        prev = eval_m(space, x, y, times[0])
        for t1, t2 in zip(times, times[1:]):
            cur = space.m(x, y, t2)
            checked += 1
            ok = cmp.le(prev, cur)
            if ok is False:
                return refuted({"x": x, "y": y, "t1": t1, "t2": t2,
                                "v1": prev, "v2": cur})
            if ok is None and borderline is None:
                borderline = {"x": x, "y": y, "t1": t1, "t2": t2}
            prev = cur
    cert = {"pairs_checked": checked}
    if borderline is not None:
        return inconclusive(witness=borderline, certificate=cert)
    return satisfied(certificate=cert)


def precompact_at_scale(space: FuzzyMetricSpace, sample: Iterable[Point],
                        r, t, budget: int) -> Verdict:
    """Greedy search for a cover of the sample by (r, t)-balls.

    Satisfied when at most budget centers drawn from the sample cover it.
    Every point covers itself, so the greedy cover always exists; exceeding
    the budget is reported as a refutation carrying the greedy cover size.
    """
    pts = _unique(sample)
    if not pts:
        raise DomainError("sample must be nonempty")
    if budget < 1:
        raise DomainError("budget must be >= 1")
    r = as_frac(r)
    if not ZERO < r < ONE:
        raise DomainError(f"r must lie in (0,1), got {r}")
    t = as_frac(t)
    if t <= 0:
        raise DomainError("t must be positive")
    n = len(pts)
    bound = ONE - r
    mf = space.m
    masks = []
    for i in range(n):
        mask = 0
        for j in range(n):
            if mf(pts[i], pts[j], t) > bound:
                mask |= 1 << j
        masks.append(mask)

    uncovered = (1 << n) - 1
    centers: list[int] = []
    while uncovered:
        best, best_gain = -1, -1
        for i in range(n):
            gain = (masks[i] & uncovered).bit_count()
            if gain > best_gain:
                best, best_gain = i, gain
        centers.append(best)
        uncovered &= ~masks[best]

    size = len(centers)
    witness = {"centers": [pts[i] for i in centers], "greedy_cover_size": size,
               "budget": budget, "r": r, "t": t}
    if size <= budget:
        return satisfied(witness=witness)
    witness["reason"] = "budget exceeded"
    return refuted(witness)


def isometry_check(src: FuzzyMetricSpace, dst: FuzzyMetricSpace,
                   fn: Callable[[Point], Point],
                   pairs: Iterable[tuple[Point, Point]],
                   t_grid: Iterable) -> Verdict:
    """M(x, y, t) == N(f(x), f(y), t) on every sampled pair and time."""
    times = [as_frac(t) for t in t_grid]
    checked = 0
    for x, y in pairs:
        for t in times:
            checked += 1
            lhs = eval_m(src, x, y, t)
            rhs = eval_m(dst, fn(x), fn(y), t)
            if lhs != rhs:
                return refuted({"x": x, "y": y, "t": t, "lhs": lhs, "rhs": rhs})
    return satisfied(certificate={"pairs_checked": checked})
