"""Seeded property suites keyed to the transfer propositions and theorems.

Each suite generates cases from a seeded RNG, checks one property per
case, and aggregates into a report that is reproducible bit-for-bit from
(suite id, seed, case count), wall time aside. A failing case carries a
replayable witness.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Any, Callable, Iterator

from . import jsonio
from .completion import embed, dist_interval, rational_approx, sqrt_point
from .errors import UnknownNameError
from .extract import cauchy_subsequence, cofinal_subset_via_ball
from .gallery import (GALLERY_NAMES, build_named, note_sequence, note_space,
                      reals_md_space, unit_interval_space, verify_entry)
from .sequences import (Scale, SequenceSpec, clusters_at_scale, from_values,
                        is_cauchy_at_scale, is_cofinally_cauchy_at_scale,
                        is_g_cauchy_at_scale, is_pseudo_cauchy_at_scale,
                        metric_is_cauchy, metric_is_cofinally_cauchy,
                        metric_is_g_cauchy, metric_is_pseudo_cauchy)
from .space import check_axioms, line_metric, md_threshold, subspace
from .verdict import Status

F = Fraction
CaseResult = tuple  # (ok: bool | None, witness: dict | None)


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    cases: int
    passed: int
    failed: int
    inconclusive: int
    first_failure: dict[str, Any] | None
    seed: int
    wall_ms: float

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "passed": self.passed,
            "failed": self.failed,
            "inconclusive": self.inconclusive,
            "first_failure": jsonio.encode_value(self.first_failure),
            "seed": self.seed,
            "wall_ms": round(self.wall_ms, 3),
        }


# --- seeded generators ------------------------------------------------------

def _rand_frac(rng: Random, den: int = 32, lo: int = 0, hi: int = 1) -> Fraction:
    return F(rng.randint(lo * den, hi * den), den)


def _bounded_walk(rng: Random, n: int) -> list[Fraction]:
    vals = [_rand_frac(rng)]
    for _ in range(n - 1):
        step = F(rng.randint(-8, 8), 32)
        nxt = vals[-1] + step
        if nxt > 1 or nxt < 0:
            nxt = vals[-1] - step
        vals.append(nxt)
    return vals


def _decay_walk(rng: Random, n: int) -> list[Fraction]:
    """Random walk whose step size decays geometrically: G-Cauchy at scale."""
    vals = [_rand_frac(rng)]
    for i in range(2, n + 1):
        mag = F(rng.randint(0, 3), 2 ** (3 + i // 6))
        step = mag if rng.random() < 0.5 else -mag
        nxt = vals[-1] + step
        if nxt > 1 or nxt < 0:
            nxt = vals[-1] - step
        vals.append(nxt)
    return vals


def _spike_seq(rng: Random, n: int) -> list[Fraction]:
    base = _rand_frac(rng)
    gap = F(rng.choice((1, 2, 3)), 2)
    return [base if i % 2 else base + (i // 2) * gap for i in range(1, n + 1)]


def _drift_seq(rng: Random, n: int) -> list[Fraction]:
    slope = F(rng.choice((1, 2, 3)), 8)
    return [i * slope for i in range(1, n + 1)]


def _settle_seq(rng: Random, n: int) -> list[Fraction]:
    base = _rand_frac(rng)
    return [base + F((-1) ** i, 2 ** min(i, 24)) for i in range(1, n + 1)]


_FAMILIES: tuple[Callable[[Random, int], list[Fraction]], ...] = (
    _bounded_walk, _decay_walk, _spike_seq, _drift_seq, _settle_seq)


def _transfer_case(rng: Random, n: int) -> tuple[SequenceSpec, Scale, Fraction]:
    family = rng.choice(_FAMILIES)
    seq = from_values(family(rng, n), name=family.__name__.strip("_"))
    eps = rng.choice((F(1, 10), F(1, 8), F(1, 5), F(1, 4), F(1, 2), F(1, 100)))
    t = rng.choice((F(1, 2), F(1), F(2), F(3)))
    scale = Scale(epsilon=eps, t=t, k_max=6, horizon=n, m=5)
    return seq, scale, md_threshold(eps, t)


# --- suite bodies -----------------------------------------------------------

_TRANSFER_N = 60


def _suite_transfer(check: str) -> Callable[[Random, int], Iterator[CaseResult]]:
    fuzzy = {"cauchy": is_cauchy_at_scale, "g": is_g_cauchy_at_scale,
             "pseudo": is_pseudo_cauchy_at_scale,
             "cofinal": is_cofinally_cauchy_at_scale}[check]

    def body(rng: Random, cases: int) -> Iterator[CaseResult]:
        space = reals_md_space()
        metric = space.base_metric
        assert metric is not None
        for i in range(cases):
            seq, scale, delta = _transfer_case(rng, _TRANSFER_N)
            fv = fuzzy(space, seq, scale)
            if check == "cauchy":
                mv = metric_is_cauchy(metric, seq, delta, scale.k_max, scale.horizon)
            elif check == "g":
                mv = metric_is_g_cauchy(metric, seq, delta, scale.k_max, scale.horizon)
            elif check == "pseudo":
                mv = metric_is_pseudo_cauchy(metric, seq, delta, scale.k_max,
                                             scale.horizon)
            else:
                mv = metric_is_cofinally_cauchy(metric, seq, delta, scale.m,
                                                scale.horizon)
            agree = fv.status is mv.status
            if agree and check in ("cauchy", "g") and fv.satisfied:
                agree = fv.witness["k"] == mv.witness["k"]
            if agree:
                yield True, None
            else:
                yield False, {"case": i, "sequence": seq.name,
                              "values": list(seq.prefix(scale.horizon)),
                              "epsilon": scale.epsilon, "t": scale.t,
                              "delta": delta, "fuzzy": fv, "metric": mv}

    return body


def _suite_note_space_axioms(rng: Random, cases: int) -> Iterator[CaseResult]:
    del rng, cases  # fixed-case suite
    space = note_space()
    sample = [("x", n) for n in range(3, 31)] + [("y", n) for n in range(3, 31)]
    v = check_axioms(space, sample, [F(1, 2), F(1), F(2)])
    yield v.satisfied, None if v.satisfied else {"axioms": v}
    scale = Scale(epsilon=F(1, 10), t=1, k_max=19, horizon=198)
    for tag in ("x", "y"):
        cv = is_cauchy_at_scale(space, note_sequence(tag, 198), scale)
        yield cv.satisfied, None if cv.satisfied else {"sequence": tag, "verdict": cv}


def _suite_closed_subspace(rng: Random, cases: int) -> Iterator[CaseResult]:
    parent = unit_interval_space()
    for i in range(cases):
        size = rng.randint(3, 6)
        pool = [F(k, 16) for k in range(17)]
        rng.shuffle(pool)
        closed_set = sorted(pool[:size])
        n = 60
        seq = from_values([rng.choice(closed_set) for _ in range(n)],
                          name=f"in_A_{i}")
        scale = Scale(epsilon=F(1, 10), t=1, k_max=6, horizon=n, depth=6)
        sub = subspace(parent, closed_set)
        hit = None
        for cand in closed_set:
            pv = clusters_at_scale(parent, seq, cand, scale)
            if pv.satisfied:
                hit = (cand, pv)
                break
        if hit is None:
            yield False, {"case": i, "set": closed_set,
                          "reason": "no cluster candidate found in parent"}
            continue
        cand, pv = hit
        sv = clusters_at_scale(sub, seq, cand, scale)
        ok = sv.satisfied and sv.witness["chain"] == pv.witness["chain"]
        yield ok, None if ok else {"case": i, "candidate": cand,
                                   "parent": pv, "subspace": sv}


def _piecewise_linear(breaks: list[Fraction], values: list[Fraction]):
    def f(x: Fraction) -> Fraction:
        if x <= breaks[0]:
            return values[0]
        for (b0, b1, v0, v1) in zip(breaks, breaks[1:], values, values[1:]):
            if x <= b1:
                return v0 + (v1 - v0) * (x - b0) / (b1 - b0)
        return values[-1]
    return f


def _suite_continuous_image(rng: Random, cases: int) -> Iterator[CaseResult]:
    domain = unit_interval_space()
    image_space = reals_md_space()
    n = 300
    for i in range(cases):
        seq = from_values(_decay_walk(rng, n), name=f"domain_{i}")
        g_scale = Scale(epsilon=F(1, 10), t=1, k_max=30, horizon=n)
        gv = is_g_cauchy_at_scale(domain, seq, g_scale)
        breaks = [F(k, 4) for k in range(5)]
        values = [F(rng.randint(0, 8), 8) for _ in range(5)]
        lip = max(abs(v1 - v0) * 4 for v0, v1 in zip(values, values[1:]))
        f = _piecewise_linear(breaks, values)
        image = from_values([f(x) for x in seq.prefix(n)], name=f"image_{i}")
        img_scale = Scale(epsilon=F(1, 10), t=1, k_max=30, horizon=n, m=8)
        cv = is_cofinally_cauchy_at_scale(image_space, image, img_scale)
        ok = gv.satisfied and cv.satisfied
        yield ok, None if ok else {"case": i, "lipschitz": lip,
                                   "g_cauchy": gv, "image_cofinal": cv}


def _suite_g_has_cauchy_subseq(rng: Random, cases: int) -> Iterator[CaseResult]:
    space = unit_interval_space()
    n = 300
    depth = 10
    grid = [F(k, 100) for k in range(101)]
    search_scale = Scale(epsilon=F(1, 10), t=1, k_max=29, horizon=n, depth=depth)
    # provable re-pass scale: tail pairs sit within 1/10-balls around the
    # anchor at t=1, so pairs clear (9/10)*(10/11) = 9/11 > 4/5 at t=2
    recheck = Scale(epsilon=F(1, 5), t=2, k_max=depth - 1, horizon=depth)
    for i in range(cases):
        seq = from_values(_decay_walk(rng, n), name=f"gseq_{i}")
        tail = seq.point(n)
        candidates = sorted(grid, key=lambda c: abs(c - tail))
        chain = cauchy_subsequence(space, seq, candidates, search_scale)
        if chain is None:
            yield False, {"case": i, "reason": "no chain reached depth",
                          "depth": depth}
            continue
        chain_seq = from_values([seq.point(k) for k in chain.indices])
        rv = is_cauchy_at_scale(space, chain_seq, recheck)
        yield rv.satisfied, None if rv.satisfied else {
            "case": i, "chain": list(chain.indices), "anchor": chain.anchor,
            "recheck": rv}


def _within_of_sqrt(x: Fraction, k: int, radius: Fraction) -> bool:
    """|x - sqrt(k)| < radius, decided by exact squaring."""
    lo, hi = x - radius, x + radius
    return (lo < 0 or lo * lo < k) and k < hi * hi


def _suite_dense_approx(rng: Random, cases: int) -> Iterator[CaseResult]:
    del rng, cases  # fixed-case suite
    from .extract import approximate_from_dense

    base = line_metric()
    specs = [(2, 100), (3, 50)]
    for k, n in specs:
        target_pt = sqrt_point(base, k)
        target = SequenceSpec(lambda _i, p=target_pt: p, n, name=f"sqrt{k}")
        approx = approximate_from_dense(target, rational_approx)
        bad = None
        for i in range(1, n + 1):
            radius = F(1, i * (i + 1))
            x = approx.point(i)
            j = (i * (i + 1)).bit_length() + 3
            _, hi = dist_interval(embed(base, x), target_pt, j)
            if not (hi < radius and _within_of_sqrt(x, k, radius)):
                bad = {"k": k, "n": i, "x": x, "radius": radius, "upper": hi}
                break
        yield bad is None, bad
    q = F(22, 7)
    target = SequenceSpec(lambda _i, p=embed(base, q): p, 30, name="embedded")
    approx = approximate_from_dense(target, rational_approx)
    exact = all(approx.point(i) == q for i in range(1, 31))
    yield exact, None if exact else {"reason": "embedded target not returned exactly"}


def _suite_ball_soundness(rng: Random, cases: int) -> Iterator[CaseResult]:
    space = reals_md_space()
    n = 120
    produced = 0
    attempts = 0
    while produced < cases and attempts < cases * 20:
        attempts += 1
        family = rng.choice((_spike_seq, _decay_walk, _bounded_walk))
        vals = family(rng, n)
        seq = from_values(vals, name=family.__name__.strip("_"))
        center = vals[rng.randrange(n)]
        eps = rng.choice((F(1, 4), F(1, 10), F(1, 50)))
        t = rng.choice((F(1, 2), F(1), F(2)))
        m = rng.randint(3, 8)
        got = cofinal_subset_via_ball(space, seq, center, eps, t, m)
        if got is None:
            continue
        produced += 1
        bound = 1 - eps
        bad = None
        for a in range(len(got)):
            for b in range(a + 1, len(got)):
                v = space.m(vals[got[a] - 1], vals[got[b] - 1], t)
                if not v > bound:
                    bad = {"p": got[a], "q": got[b], "value": v,
                           "epsilon": eps, "t": t, "center": center}
                    break
            if bad:
                break
        yield bad is None, bad
    if produced < cases:
        yield False, {"reason": "generator exhausted before enough returning "
                                "invocations", "produced": produced}


def _suite_gallery_regression(rng: Random, cases: int) -> Iterator[CaseResult]:
    del rng, cases  # fixed-case suite
    for name in GALLERY_NAMES:
        entry = build_named(name)
        for res in verify_entry(entry):
            yield res.ok, None if res.ok else {
                "entry": name, "check": res.fact.check,
                "expected": res.fact.expected, "verdict": res.verdict}


_SUITES: dict[str, tuple[Callable[[Random, int], Iterator[CaseResult]], int]] = {
    "note_space_axioms": (_suite_note_space_axioms, 3),
    "transfer_pcau": (_suite_transfer("cauchy"), 100),
    "transfer_g": (_suite_transfer("g"), 100),
    "transfer_pseudo": (_suite_transfer("pseudo"), 100),
    "transfer_cofinal": (_suite_transfer("cofinal"), 100),
    "closed_subspace": (_suite_closed_subspace, 25),
    "continuous_image": (_suite_continuous_image, 25),
    "g_has_cauchy_subseq": (_suite_g_has_cauchy_subseq, 50),
    "dense_approx": (_suite_dense_approx, 3),
    "ball_soundness": (_suite_ball_soundness, 100),
    "gallery_regression": (_suite_gallery_regression, 0),
}


def suite_ids() -> tuple[str, ...]:
    return tuple(_SUITES)


def run_suite(suite_id: str, seed: int = 7, cases: int | None = None) -> SuiteReport:
    if suite_id not in _SUITES:
        raise UnknownNameError(suite_id, suite_ids())
    body, default_cases = _SUITES[suite_id]
    n_cases = default_cases if cases is None else cases
    rng = Random(seed)
    start = time.perf_counter()
    passed = failed = inconclusive = total = 0
    failures: list[dict] = []
    for ok, witness in body(rng, n_cases):
        total += 1
        if ok is True:
            passed += 1
        elif ok is False:
            failed += 1
            failures.append(witness or {})
        else:
            inconclusive += 1
    wall = (time.perf_counter() - start) * 1000
    first = min(failures, key=jsonio.dumps) if failures else None
    return SuiteReport(suite=suite_id, cases=total, passed=passed, failed=failed,
                       inconclusive=inconclusive, first_failure=first,
                       seed=seed, wall_ms=wall)
