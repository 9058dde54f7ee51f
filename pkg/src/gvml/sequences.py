"""Finite-scale classification of sequences in fuzzy metric spaces.

The four classes checked here (Cauchy, G-Cauchy, pseudo-Cauchy, cofinally
Cauchy) are universally quantified over epsilon and t in their textbook
form. A Scale pins one concrete (epsilon, t) together with the horizon, a
tail-start bound and a cofinal-size threshold, turning each definition
into a decidable statement whose verdict carries explicit evidence.

The metric-side classifiers at the bottom mirror the fuzzy ones against a
plain distance threshold. They are deliberately separate code paths: the
transfer suites compare the two routes as independent oracles, so they
must not share an engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Callable

from .errors import DeltaSearchError, DomainError
from .space import FuzzyMetricSpace, MetricSpace, Point, as_frac, md_threshold
from .verdict import Verdict, inconclusive, refuted, satisfied

ONE = Fraction(1)


@dataclass(frozen=True)
class SequenceSpec:
    """A deterministic index-to-point generator with an evaluation horizon.

    Indices are 1-based; the generator must be total on 1..horizon.
    """

    gen: Callable[[int], Point]
    horizon: int
    name: str = ""

    def __post_init__(self) -> None:
        if self.horizon < 1:
            raise DomainError("horizon must be >= 1")

    @cached_property
    def _values(self) -> tuple[Point, ...]:
        return tuple(self.gen(n) for n in range(1, self.horizon + 1))

    def point(self, n: int) -> Point:
        if not 1 <= n <= self.horizon:
            raise DomainError(f"index {n} outside 1..{self.horizon}")
        return self._values[n - 1]

    def prefix(self, n: int) -> tuple[Point, ...]:
        if not 1 <= n <= self.horizon:
            raise DomainError(f"prefix length {n} outside 1..{self.horizon}")
        return self._values[:n]


def from_values(values, name: str = "") -> SequenceSpec:
    vals = tuple(values)
    return SequenceSpec(lambda n: vals[n - 1], len(vals), name)


@dataclass(frozen=True)
class Scale:
    """Finite-verification parameters giving computational meaning to the
    'for all epsilon and t' quantifiers.

    epsilon/t: the single closeness level checked; k_max: largest tail
    start examined; horizon: number of terms examined; m: size threshold
    standing in for 'infinite subset'; depth: length of shrinking-ball
    schedules (clustering, Cauchy-subsequence search).
    """

    epsilon: Fraction
    t: Fraction
    k_max: int
    horizon: int
    m: int = 2
    depth: int = 8

    def __post_init__(self) -> None:
        object.__setattr__(self, "epsilon", as_frac(self.epsilon))
        object.__setattr__(self, "t", as_frac(self.t))
        if not Fraction(0) < self.epsilon < ONE:
            raise DomainError(f"epsilon must lie in (0,1), got {self.epsilon}")
        if self.t <= 0:
            raise DomainError(f"t must be positive, got {self.t}")
        if not 1 <= self.k_max < self.horizon:
            raise DomainError("need 1 <= k_max < horizon")
        if not 1 <= self.m <= self.horizon:
            raise DomainError("need 1 <= m <= horizon")
        if not 1 <= self.depth <= self.horizon:
            raise DomainError("need 1 <= depth <= horizon")


def _prefix(seq: SequenceSpec, scale: Scale) -> tuple[Point, ...]:
    if seq.horizon < scale.horizon:
        raise DomainError(
            f"sequence horizon {seq.horizon} shorter than scale horizon {scale.horizon}")
    return seq.prefix(scale.horizon)


def is_cauchy_at_scale(space: FuzzyMetricSpace, seq: SequenceSpec,
                       scale: Scale) -> Verdict:
    """Some tail start k <= k_max makes all pairs in [k, N] epsilon-close at t.

    Tail cleanliness is monotone in k, so the tail at k_max decides the
    verdict; when it is clean the witness k reported is the least clean
    tail start. Never inconclusive.
    """
    xs = _prefix(seq, scale)
    N = scale.horizon
    k_max = scale.k_max
    mf = space.m
    t = scale.t
    bound = ONE - scale.epsilon

    tail_min = None
    for p in range(k_max, N + 1):
        xp = xs[p - 1]
        for q in range(N, p, -1):
            v = mf(xp, xs[q - 1], t)
            if not v > bound:
                return refuted(
                    {"k": k_max, "p": p, "q": q, "value": v},
                    certificate={"threshold": bound})
            if tail_min is None or v < tail_min:
                tail_min = v

    k_found = 1
    for p in range(k_max - 1, 0, -1):
        xp = xs[p - 1]
        hit = False
        for q in range(N, p, -1):
            if not mf(xp, xs[q - 1], t) > bound:
                hit = True
                break
        if hit:
            k_found = p + 1
            break
    return satisfied(witness={"k": k_found},
                     certificate={"tail_min_membership": tail_min})


def is_g_cauchy_at_scale(space: FuzzyMetricSpace, seq: SequenceSpec,
                         scale: Scale) -> Verdict:
    """Consecutive terms are epsilon-close at t from some k <= k_max on."""
    xs = _prefix(seq, scale)
    N = scale.horizon
    mf = space.m
    t = scale.t
    bound = ONE - scale.epsilon

    tail_min = None
    for n in range(scale.k_max, N):
        v = mf(xs[n - 1], xs[n], t)
        if not v > bound:
            return refuted({"n": n, "value": v},
                           certificate={"threshold": bound})
        if tail_min is None or v < tail_min:
            tail_min = v

    k_found = 1
    for n in range(scale.k_max - 1, 0, -1):
        if not mf(xs[n - 1], xs[n], t) > bound:
            k_found = n + 1
            break
    return satisfied(witness={"k": k_found},
                     certificate={"tail_min_membership": tail_min})


def is_pseudo_cauchy_at_scale(space: FuzzyMetricSpace, seq: SequenceSpec,
                              scale: Scale) -> Verdict:
    """Beyond every k <= k_max two distinct indices are epsilon-close at t.

    One close pair strictly beyond k_max serves every smaller k, so the
    search runs on (k_max, N] only. Consecutive pairs are tried first.
    """
    xs = _prefix(seq, scale)
    N = scale.horizon
    k = scale.k_max
    mf = space.m
    t = scale.t
    bound = ONE - scale.epsilon

    for p in range(k + 1, N):
        v = mf(xs[p - 1], xs[p], t)
        if v > bound:
            return satisfied(witness={"p": p, "q": p + 1, "value": v})
    best = None
    for p in range(k + 1, N + 1):
        xp = xs[p - 1]
        for q in range(p + 2, N + 1):
            v = mf(xp, xs[q - 1], t)
            if v > bound:
                return satisfied(witness={"p": p, "q": q, "value": v})
            if best is None or v > best[2]:
                best = (p, q, v)
    witness: dict[str, Any] = {"k": k}
    if best is not None:
        witness.update({"best_p": best[0], "best_q": best[1], "best_value": best[2]})
    return refuted(witness, certificate={"threshold": bound})


def _line_coords(space: FuzzyMetricSpace, xs) -> list[Fraction] | None:
    base = space.base_metric
    if base is None or base.coord is None:
        return None
    return [base.coord(x) for x in xs]


def _max_window(coords: list[Fraction], delta: Fraction) -> tuple[int, list[int]]:
    """Largest index set whose values fit in a half-open window of width delta.

    Pairwise closeness |u - v| < delta is an interval-graph compatibility,
    so the maximum pairwise-close set equals the best sorted window; this
    sweep is therefore an exact oracle, not a heuristic.
    """
    order = sorted(range(len(coords)), key=lambda i: coords[i])
    best = (0, 0, 0)
    j = 0
    for i in range(len(order)):
        if j < i:
            j = i
        while j < len(order) and coords[order[j]] - coords[order[i]] < delta:
            j += 1
        if j - i > best[0]:
            best = (j - i, i, j)
    size, lo, hi = best
    indices = sorted(order[k] + 1 for k in range(lo, hi))
    return size, indices


def _compat_mask(space: FuzzyMetricSpace, xs, bound: Fraction,
                 t: Fraction) -> list[int]:
    n = len(xs)
    mf = space.m
    masks = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if mf(xs[i], xs[j], t) > bound:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return masks


def _clique_at_least(masks: list[int], m: int) -> tuple[list[int] | None, int]:
    """Search for a clique of size >= m in the compatibility graph.

    Bron-Kerbosch with pivoting, pruned branches that cannot reach m, and
    early exit on first success. Exhaustive in the sense that a None
    result proves no clique of size m exists; the size returned alongside
    is the largest clique seen before pruning, a lower bound on the true
    maximum.
    """
    n = len(masks)
    best_size = 0
    found: list[int] | None = None

    def expand(r: list[int], p: int, x: int) -> bool:
        nonlocal best_size, found
        if len(r) >= m:
            found = list(r)
            return True
        if len(r) > best_size:
            best_size = len(r)
        if p == 0 or len(r) + p.bit_count() < m:
            return False
        pivot, best_deg = -1, -1
        probe = p | x
        while probe:
            v = (probe & -probe).bit_length() - 1
            deg = (masks[v] & p).bit_count()
            if deg > best_deg:
                best_deg, pivot = deg, v
            probe &= probe - 1
        cand = p & ~masks[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            bit = 1 << v
            if expand(r + [v], p & masks[v], x & masks[v]):
                return True
            p &= ~bit
            x |= bit
            cand &= cand - 1
            if len(r) + p.bit_count() < m:
                return False
        return False

    expand([], (1 << n) - 1 if n else 0, 0)
    return found, best_size


def is_cofinally_cauchy_at_scale(space: FuzzyMetricSpace, seq: SequenceSpec,
                                 scale: Scale) -> Verdict:
    """Search for m indices that are pairwise epsilon-close at t.

    Runs the sound shrinking-ball construction first (its positives are
    re-verifiable certificates), then an exact decision procedure: a
    sorted window sweep when the space lives on the rational line, or an
    exhaustive clique search for horizons up to 200. Refuted only when an
    exact procedure ran and failed; inconclusive otherwise.
    """
    from . import extract  # deferred: extract imports this module at load time

    if scale.m < 2:
        raise DomainError("cofinal size threshold m must be >= 2")
    xs = _prefix(seq, scale)
    N = scale.horizon
    m = scale.m
    t = scale.t
    eps = scale.epsilon
    bound = ONE - eps

    ball_best = 0
    try:
        step = max(1, N // 16)
        seen: set[int] = set()
        for ci in range(1, N + 1, step):
            key = hash(xs[ci - 1])
            if key in seen:
                continue
            seen.add(key)
            got = extract.cofinal_subset_via_ball(space, seq, xs[ci - 1], eps, t, m)
            if got is not None:
                return satisfied(witness={"indices": list(got), "size": len(got),
                                          "method": "ball", "center_index": ci})
            ball_best = max(ball_best, 1)
    except DeltaSearchError:
        pass

    coords = _line_coords(space, xs)
    if coords is not None:
        delta = md_threshold(eps, t)
        size, indices = _max_window(coords, delta)
        if size >= m:
            return satisfied(witness={"indices": indices, "size": size,
                                      "method": "window"})
        return refuted({"method": "window", "max_size": size, "m": m,
                        "best_indices": indices},
                       certificate={"distance_threshold": delta})

    if N <= 200:
        masks = _compat_mask(space, xs, bound, t)
        clique, best = _clique_at_least(masks, m)
        if clique is not None:
            indices = sorted(i + 1 for i in clique)
            return satisfied(witness={"indices": indices, "size": len(indices),
                                      "method": "clique"})
        return refuted({"method": "clique", "max_size": best, "m": m})

    return inconclusive(witness={"method": "ball", "m": m},
                        certificate={"note": "no exact procedure at this horizon"})


def clusters_at_scale(space: FuzzyMetricSpace, seq: SequenceSpec,
                      candidate: Point, scale: Scale) -> Verdict:
    """Greedy shrinking-ball schedule toward the candidate.

    Looks for n_1 < ... < n_R with M(x_{n_r}, candidate, t) > 1 - 1/(r+1).
    Taking the earliest admissible index at each depth is complete: if any
    such chain exists within the horizon, the greedy one is found.
    """
    xs = _prefix(seq, scale)
    if space.contains is not None and not space.contains(candidate):
        raise DomainError(f"candidate {candidate!r} not in universe of {space.name}")
    N = scale.horizon
    R = scale.depth
    mf = space.m
    t = scale.t

    chain: list[int] = []
    n = 1
    for r in range(1, R + 1):
        bound = ONE - Fraction(1, r + 1)
        while n <= N and not mf(xs[n - 1], candidate, t) > bound:
            n += 1
        if n > N:
            return refuted({"achieved_depth": r - 1, "chain": chain,
                            "candidate": candidate},
                           certificate={"depth_required": R})
        chain.append(n)
        n += 1
    return satisfied(witness={"chain": chain, "candidate": candidate,
                              "depth": R})


@dataclass(frozen=True)
class ClassificationReport:
    """Bundle of the four class verdicts plus quantitative diagnostics."""

    cauchy: Verdict
    g_cauchy: Verdict
    pseudo_cauchy: Verdict
    cofinally_cauchy: Verdict
    diagnostics: dict[str, Any]

    def verdict_map(self) -> dict[str, Verdict]:
        return {"cauchy": self.cauchy, "g_cauchy": self.g_cauchy,
                "pseudo_cauchy": self.pseudo_cauchy,
                "cofinally_cauchy": self.cofinally_cauchy}


def _geometric(stop: int) -> list[int]:
    out = []
    n = 1
    while n <= stop:
        out.append(n)
        n *= 2
    if out and out[-1] != stop:
        out.append(stop)
    return out


def classify(space: FuzzyMetricSpace, seq: SequenceSpec,
             scale: Scale) -> ClassificationReport:
    """Run all four class checks at the scale and collect diagnostics.

    Diagnostics: consecutive-term membership sampled geometrically, the
    suffix-minimum tail modulus of consecutive closeness, and the largest
    pairwise-close set size the cofinal search established.
    """
    xs = _prefix(seq, scale)
    N = scale.horizon
    mf = space.m
    t = scale.t

    consec = [mf(xs[n - 1], xs[n], t) for n in range(1, N)]
    suffix_min: list[Fraction] = list(consec)
    for i in range(len(consec) - 2, -1, -1):
        if suffix_min[i + 1] < suffix_min[i]:
            suffix_min[i] = suffix_min[i + 1]

    cofinal = is_cofinally_cauchy_at_scale(space, seq, scale)
    window = None
    for source in (cofinal.witness, cofinal.certificate):
        if source and "size" in source:
            window = source["size"]
        elif source and "max_size" in source:
            window = source["max_size"]
    diagnostics = {
        "consecutive_membership": [(n, consec[n - 1]) for n in _geometric(N - 1)],
        "tail_modulus": [(k, suffix_min[k - 1]) for k in _geometric(min(scale.k_max, N - 1))],
        "max_cofinal_window": window,
    }
    return ClassificationReport(
        cauchy=is_cauchy_at_scale(space, seq, scale),
        g_cauchy=is_g_cauchy_at_scale(space, seq, scale),
        pseudo_cauchy=is_pseudo_cauchy_at_scale(space, seq, scale),
        cofinally_cauchy=cofinal,
        diagnostics=diagnostics,
    )


# ---------------------------------------------------------------------------
# Metric-side classifiers. Same finite semantics against d(x, y) < delta.
# Kept as independent implementations; see module docstring.

def metric_is_cauchy(mspace: MetricSpace, seq: SequenceSpec, delta: Fraction,
                     k_max: int, horizon: int) -> Verdict:
    xs = seq.prefix(horizon)
    delta = as_frac(delta)
    d = mspace.d
    for p in range(k_max, horizon + 1):
        xp = xs[p - 1]
        for q in range(horizon, p, -1):
            if not d(xp, xs[q - 1]) < delta:
                return refuted({"k": k_max, "p": p, "q": q,
                                "distance": d(xp, xs[q - 1])})
    k_found = 1
    for p in range(k_max - 1, 0, -1):
        xp = xs[p - 1]
        if any(not d(xp, xs[q - 1]) < delta for q in range(horizon, p, -1)):
            k_found = p + 1
            break
    return satisfied(witness={"k": k_found})


def metric_is_g_cauchy(mspace: MetricSpace, seq: SequenceSpec, delta: Fraction,
                       k_max: int, horizon: int) -> Verdict:
    xs = seq.prefix(horizon)
    delta = as_frac(delta)
    d = mspace.d
    for n in range(k_max, horizon):
        if not d(xs[n - 1], xs[n]) < delta:
            return refuted({"n": n, "distance": d(xs[n - 1], xs[n])})
    k_found = 1
    for n in range(k_max - 1, 0, -1):
        if not d(xs[n - 1], xs[n]) < delta:
            k_found = n + 1
            break
    return satisfied(witness={"k": k_found})


def metric_is_pseudo_cauchy(mspace: MetricSpace, seq: SequenceSpec,
                            delta: Fraction, k_max: int, horizon: int) -> Verdict:
    xs = seq.prefix(horizon)
    delta = as_frac(delta)
    d = mspace.d
    for p in range(k_max + 1, horizon):
        if d(xs[p - 1], xs[p]) < delta:
            return satisfied(witness={"p": p, "q": p + 1})
    for p in range(k_max + 1, horizon + 1):
        xp = xs[p - 1]
        for q in range(p + 2, horizon + 1):
            if d(xp, xs[q - 1]) < delta:
                return satisfied(witness={"p": p, "q": q})
    return refuted({"k": k_max})


def metric_is_cofinally_cauchy(mspace: MetricSpace, seq: SequenceSpec,
                               delta: Fraction, m: int, horizon: int) -> Verdict:
    if m < 2:
        raise DomainError("cofinal size threshold m must be >= 2")
    xs = seq.prefix(horizon)
    delta = as_frac(delta)
    if mspace.coord is not None:
        coords = [mspace.coord(x) for x in xs]
        size, indices = _max_window(coords, delta)
        if size >= m:
            return satisfied(witness={"indices": indices, "size": size,
                                      "method": "window"})
        return refuted({"method": "window", "max_size": size, "m": m})
    if horizon <= 200:
        d = mspace.d
        masks = [0] * horizon
        for i in range(horizon):
            for j in range(i + 1, horizon):
                if d(xs[i], xs[j]) < delta:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
        clique, best = _clique_at_least(masks, m)
        if clique is not None:
            return satisfied(witness={"indices": sorted(i + 1 for i in clique),
                                      "size": len(clique), "method": "clique"})
        return refuted({"method": "clique", "max_size": best, "m": m})
    return inconclusive(witness={"m": m})
