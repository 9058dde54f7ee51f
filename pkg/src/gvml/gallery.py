"""Named example spaces and sequences, with their expected facts.

Each entry packages a construction together with the classification facts
it is meant to demonstrate, at pinned scales. The facts are re-verified on
every gallery run; they are the regression corpus for the classifiers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import UnknownNameError
from .sequences import (Scale, SequenceSpec, clusters_at_scale, is_cauchy_at_scale,
                        is_cofinally_cauchy_at_scale, is_g_cauchy_at_scale,
                        is_pseudo_cauchy_at_scale)
from .space import (FuzzyMetricSpace, MetricSpace, check_axioms, line_metric,
                    precompact_at_scale, standard_from_metric)
from .tnorm import LUKASIEWICZ
from .verdict import Status, Verdict

F = Fraction


def _is_rational(p) -> bool:
    return isinstance(p, (int, Fraction))


def reals_md_space() -> FuzzyMetricSpace:
    """The rational line under the standard fuzzy metric."""
    return standard_from_metric(line_metric("euclid1d", contains=_is_rational),
                                name="reals_md")


def unit_interval_space() -> FuzzyMetricSpace:
    """Rationals in [0,1] under the standard fuzzy metric; the compact
    workhorse for weak-G-completeness surrogates."""
    def inside(p) -> bool:
        return _is_rational(p) and 0 <= p <= 1
    return standard_from_metric(line_metric("unit_interval", contains=inside),
                                name="unit_interval_md")


def integers_space() -> FuzzyMetricSpace:
    def integral(p) -> bool:
        return isinstance(p, int) or (isinstance(p, Fraction) and p.denominator == 1)
    return standard_from_metric(line_metric("integers", contains=integral),
                                name="integers_md")


def note_space() -> FuzzyMetricSpace:
    """Two interleaved families of points under the Lukasiewicz t-norm.

    Points are ("x", n) and ("y", n) for n >= 3. Within a family the
    membership is 1 - |1/n - 1/m|; across families it is 1/n + 1/m,
    independent of t. Both index sequences are Cauchy, yet the space
    admits no completion, which is what this example exists to exhibit.
    """
    def member(p) -> bool:
        return (isinstance(p, tuple) and len(p) == 2 and p[0] in ("x", "y")
                and isinstance(p[1], int) and p[1] >= 3)

    def m(p, q, _t) -> Fraction:
        if p == q:
            return F(1)
        (fa, na), (fb, nb) = p, q
        if fa == fb:
            return 1 - abs(F(1, na) - F(1, nb))
        return F(1, na) + F(1, nb)

    return FuzzyMetricSpace("note_space", m, LUKASIEWICZ, contains=member,
                            t_continuous=True)


def note_sequence(tag: str, horizon: int) -> SequenceSpec:
    """The (tag, n) family enumerated from n = 3."""
    return SequenceSpec(lambda n: (tag, n + 2), horizon, name=f"note_{tag}")


def harmonic_sums(horizon: int) -> SequenceSpec:
    """Partial sums 1 + 1/2 + ... + 1/n, exactly."""
    sums = [F(0)]

    def gen(n: int) -> Fraction:
        while len(sums) <= n:
            sums.append(sums[-1] + F(1, len(sums)))
        return sums[n]

    return SequenceSpec(gen, horizon, name="harmonic")


def pseudo_pairs_seq(horizon: int) -> SequenceSpec:
    """1, 1, 2, 2, 3, 3, ...: every tail holds a distance-zero pair while
    the sequence itself runs off to infinity."""
    return SequenceSpec(lambda n: F((n + 1) // 2), horizon, name="pseudo_pairs")


def cofinal_spikes_seq(horizon: int) -> SequenceSpec:
    """0, 1, 0, 2, 0, 3, ...: the zeros form the cofinal pairwise-close set."""
    return SequenceSpec(lambda n: F(0) if n % 2 else F(n // 2), horizon,
                        name="cofinal_spikes")


def triangle_wave_seq(horizon: int) -> SequenceSpec:
    """Sweep [0,1] back and forth with step 1/(n+1); direction flips at the
    walls. Consecutive gaps vanish while full sweeps keep recurring."""
    vals = [F(0)]
    state = {"dir": 1}

    def gen(n: int) -> Fraction:
        while len(vals) < n:
            step = F(1, len(vals) + 1)
            nxt = vals[-1] + state["dir"] * step
            if nxt > 1 or nxt < 0:
                state["dir"] = -state["dir"]
                nxt = vals[-1] + state["dir"] * step
            vals.append(nxt)
        return vals[n - 1]

    return SequenceSpec(gen, horizon, name="triangle_wave")


@dataclass(frozen=True)
class Fact:
    """One expected classification outcome at a pinned scale."""

    check: str
    expected: Status
    scale: Scale | None = None
    params: dict[str, Any] = field(default_factory=dict)
    note: str = ""


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    kind: str  # "space" | "sequence"
    space: FuzzyMetricSpace
    sequences: dict[str, SequenceSpec]
    facts: tuple[Fact, ...]
    claim: str

    @property
    def seq(self) -> SequenceSpec | None:
        return self.sequences.get("main")


S = Status.SATISFIED_AT_SCALE
R = Status.REFUTED_AT_SCALE


def _note_entry() -> GalleryEntry:
    space = note_space()
    sample = [("x", n) for n in range(3, 31)] + [("y", n) for n in range(3, 31)]
    seq_scale = Scale(epsilon=F(1, 10), t=1, k_max=19, horizon=198)
    return GalleryEntry(
        name="note_space", kind="space", space=space,
        sequences={"x": note_sequence("x", 198), "y": note_sequence("y", 198)},
        facts=(
            Fact("axioms", S, params={"sample": sample,
                                      "t_grid": [F(1, 2), F(1), F(2)]},
                 note="all membership axioms hold exactly on indices 3..30"),
            Fact("cauchy", S, seq_scale, params={"sequence": "x"},
                 note="1/n - 1/m tails shrink below 1/10 from index 10 on"),
            Fact("cauchy", S, seq_scale, params={"sequence": "y"},
                 note="mirror of the x family"),
        ),
        claim=("a fuzzy metric space with two Cauchy index families that "
               "admits no completion; every G-Cauchy sequence in it has a "
               "Cauchy subsequence anyway"),
    )


def _harmonic_entry() -> GalleryEntry:
    space = reals_md_space()
    seq = harmonic_sums(1000)
    drift = Scale(epsilon=F(1, 10), t=1, k_max=100, horizon=1000)
    windows = Scale(epsilon=F(1, 100), t=1, k_max=100, horizon=1000, m=50)
    return GalleryEntry(
        name="harmonic", kind="sequence", space=space,
        sequences={"main": seq},
        facts=(
            Fact("cauchy", R, drift, note="tails drift by about ln(10/1)"),
            Fact("g_cauchy", S, drift, note="consecutive gap 1/(n+1) vanishes"),
            Fact("cofinal", R, windows,
                 note="pairwise closeness below 1/99 confines any set to a "
                      "short value window near the tail"),
            Fact("pseudo", S, drift, note="consecutive pairs witness every tail"),
        ),
        claim=("slow divergence: consecutive-term closeness without any "
               "large pairwise-close index set, so the real line is not "
               "weak G-complete"),
    )


def _pseudo_pairs_entry() -> GalleryEntry:
    space = reals_md_space()
    scale = Scale(epsilon=F(1, 10), t=1, k_max=20, horizon=200, m=3)
    return GalleryEntry(
        name="pseudo_pairs", kind="sequence", space=space,
        sequences={"main": pseudo_pairs_seq(200)},
        facts=(
            Fact("pseudo", S, scale, note="duplicate pairs at distance zero"),
            Fact("cauchy", R, scale),
            Fact("g_cauchy", R, scale, note="pair boundaries jump by one"),
            Fact("cofinal", R, scale,
                 note="any three indices contain two distinct values"),
        ),
        claim="pseudo-Cauchy without being cofinally Cauchy for size 3",
    )


def _cofinal_spikes_entry() -> GalleryEntry:
    space = reals_md_space()
    scale = Scale(epsilon=F(1, 10), t=1, k_max=20, horizon=200, m=10)
    return GalleryEntry(
        name="cofinal_spikes", kind="sequence", space=space,
        sequences={"main": cofinal_spikes_seq(200)},
        facts=(
            Fact("cofinal", S, scale, note="the zeros are pairwise at distance 0"),
            Fact("pseudo", S, scale),
            Fact("cauchy", R, scale),
            Fact("g_cauchy", R, scale, note="spikes grow without bound"),
        ),
        claim="cofinally Cauchy via an explicit infinite-looking index set",
    )


def _unit_interval_entry() -> GalleryEntry:
    space = unit_interval_space()
    grid = [F(k, 100) for k in range(101)]
    return GalleryEntry(
        name="unit_interval_md", kind="space", space=space, sequences={},
        facts=(
            Fact("axioms", S, params={"sample": [F(0), F(1, 4), F(1, 2), F(3, 4), F(1)],
                                      "t_grid": [F(1, 2), F(1), F(2)]}),
            Fact("precompact", S, params={"sample": grid, "r": F(1, 2),
                                          "t": F(1), "budget": 1},
                 note="one ball of distance-radius 1 covers the interval"),
        ),
        claim="compact-at-scale host space used by the subsequence suites",
    )


def _reals_entry() -> GalleryEntry:
    space = reals_md_space()
    return GalleryEntry(
        name="reals_md", kind="space", space=space, sequences={},
        facts=(
            Fact("axioms", S, params={"sample": [F(-2), F(0), F(1), F(3, 2), F(7)],
                                      "t_grid": [F(1, 2), F(1), F(2)]}),
        ),
        claim="the rational line under the standard fuzzy metric",
    )


def _integers_entry() -> GalleryEntry:
    space = integers_space()
    return GalleryEntry(
        name="integers_md", kind="space", space=space, sequences={},
        facts=(
            Fact("axioms", S, params={"sample": [F(n) for n in range(-3, 4)],
                                      "t_grid": [F(1, 2), F(1), F(2)]}),
            Fact("precompact", R, params={"sample": [F(n) for n in range(1, 101)],
                                          "r": F(1, 2), "t": F(1), "budget": 10},
                 note="distance-radius-1 balls around integers are singletons"),
        ),
        claim="uniformly discrete space: precompactness fails at any budget "
              "below the sample size",
    )


def _triangle_wave_entry() -> GalleryEntry:
    space = unit_interval_space()
    scale = Scale(epsilon=F(1, 10), t=1, k_max=200, horizon=2000, depth=10)
    return GalleryEntry(
        name="triangle_wave", kind="sequence", space=space,
        sequences={"main": triangle_wave_seq(2000)},
        facts=(
            Fact("g_cauchy", S, scale, note="step size 1/(n+1) vanishes"),
            Fact("cauchy", R, scale, note="full sweeps recur forever"),
            Fact("clusters", S, scale, params={"candidate": F(0)},
                 note="every down-sweep revisits a shrinking neighbourhood of 0"),
        ),
        claim="G-Cauchy non-Cauchy sequence that still clusters: the wave "
              "slows down while sweeping the whole interval",
    )


_BUILDERS = {
    "note_space": _note_entry,
    "harmonic": _harmonic_entry,
    "pseudo_pairs": _pseudo_pairs_entry,
    "cofinal_spikes": _cofinal_spikes_entry,
    "unit_interval_md": _unit_interval_entry,
    "reals_md": _reals_entry,
    "integers_md": _integers_entry,
    "triangle_wave": _triangle_wave_entry,
}

GALLERY_NAMES = tuple(_BUILDERS)


def build_named(name: str) -> GalleryEntry:
    if name not in _BUILDERS:
        raise UnknownNameError(name, GALLERY_NAMES)
    return _BUILDERS[name]()


@dataclass(frozen=True)
class FactResult:
    fact: Fact
    verdict: Verdict
    ok: bool


def run_fact(entry: GalleryEntry, fact: Fact) -> Verdict:
    space = entry.space
    if fact.check == "axioms":
        return check_axioms(space, fact.params["sample"], fact.params["t_grid"])
    if fact.check == "precompact":
        p = fact.params
        return precompact_at_scale(space, p["sample"], p["r"], p["t"], p["budget"])
    seq = entry.sequences[fact.params.get("sequence", "main")]
    assert fact.scale is not None
    if fact.check == "cauchy":
        return is_cauchy_at_scale(space, seq, fact.scale)
    if fact.check == "g_cauchy":
        return is_g_cauchy_at_scale(space, seq, fact.scale)
    if fact.check == "pseudo":
        return is_pseudo_cauchy_at_scale(space, seq, fact.scale)
    if fact.check == "cofinal":
        return is_cofinally_cauchy_at_scale(space, seq, fact.scale)
    if fact.check == "clusters":
        return clusters_at_scale(space, seq, fact.params["candidate"], fact.scale)
    raise UnknownNameError(fact.check, ("axioms", "precompact", "cauchy",
                                        "g_cauchy", "pseudo", "cofinal",
                                        "clusters"))


def verify_entry(entry: GalleryEntry) -> list[FactResult]:
    results = []
    for fact in entry.facts:
        verdict = run_fact(entry, fact)
        results.append(FactResult(fact, verdict, verdict.status is fact.expected))
    return results
