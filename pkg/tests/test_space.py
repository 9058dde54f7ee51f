from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from gvml.errors import DomainError
from gvml.space import (FuzzyMetricSpace, ball_contains, check_axioms,
                        check_metric_axioms, discrete_metric, eval_m,
                        isometry_check, line_metric, md_threshold,
                        monotone_in_t_check, precompact_at_scale,
                        standard_from_metric, subspace, table_metric)
from gvml.tnorm import MINIMUM, PRODUCT
from gvml.verdict import Status

F = Fraction

small_fracs = st.fractions(min_value=-4, max_value=4, max_denominator=12)
times = st.fractions(min_value=F(1, 4), max_value=4, max_denominator=8)


def test_eval_standard(reals):
    assert eval_m(reals, F(0), F(1), 1) == F(1, 2)


def test_eval_note_cross(note):
    for t in (F(1, 2), F(1), F(5)):
        assert eval_m(note, ("x", 3), ("y", 3), t) == F(2, 3)


def test_eval_diagonal_is_one(reals, note):
    assert eval_m(reals, F(3, 7), F(3, 7), F(2)) == 1
    assert eval_m(note, ("y", 5), ("y", 5), 1) == 1


def test_eval_domain_errors(reals, note):
    with pytest.raises(DomainError):
        eval_m(reals, F(0), F(1), 0)
    with pytest.raises(DomainError):
        eval_m(note, ("x", 2), ("x", 3), 1)  # indices start at 3
    with pytest.raises(DomainError):
        eval_m(note, "stray", ("x", 3), 1)


def test_standard_from_metric_values():
    pts = ["a", "b"]
    m = standard_from_metric(table_metric(pts, [[0, 3], [3, 0]]))
    assert eval_m(m, "a", "b", 1) == F(1, 4)
    assert eval_m(m, "a", "a", F(1, 7)) == 1
    m2 = standard_from_metric(table_metric(pts, [[0, 1], [1, 0]]))
    assert eval_m(m2, "a", "b", 9) == F(9, 10)


def test_note_axioms_small(note):
    sample = [("x", n) for n in range(3, 21)] + [("y", n) for n in range(3, 21)]
    v = check_axioms(note, sample, [F(1, 2), F(1), F(2)])
    assert v.status is Status.SATISFIED_AT_SCALE
    assert v.certificate["continuity_in_t"] == "known"


def test_tampered_space_refuted(reals):
    def bad_m(x, y, t):
        if {x, y} == {F(0), F(1)}:
            return F(0)
        return reals.m(x, y, t)

    tampered = FuzzyMetricSpace("tampered", bad_m, PRODUCT)
    v = check_axioms(tampered, [F(0), F(1), F(2)], [F(1)])
    assert v.status is Status.REFUTED_AT_SCALE
    assert v.witness["axiom"] == "a"
    # the witness re-evaluates to the violation
    x, y, t = v.witness["x"], v.witness["y"], v.witness["t"]
    assert not bad_m(x, y, t) > 0


def test_triangle_violation_detected():
    # membership too small across one pair breaks the t-norm triangle
    def m(x, y, t):
        if x == y:
            return F(1)
        if {x, y} == {"a", "c"}:
            return F(1, 100)
        return F(9, 10)

    sp = FuzzyMetricSpace("tri", m, MINIMUM)
    v = check_axioms(sp, ["a", "b", "c"], [F(1)])
    assert v.status is Status.REFUTED_AT_SCALE
    assert v.witness["axiom"] == "d"
    lhs, rhs = v.witness["lhs"], v.witness["rhs"]
    assert lhs > rhs


@given(st.lists(small_fracs, min_size=2, max_size=5, unique=True))
@settings(max_examples=40, deadline=None)
def test_standard_space_from_line_passes_axioms(coords):
    sp = standard_from_metric(line_metric())
    v = check_axioms(sp, coords, [F(1, 2), F(1), F(2)])
    assert v.satisfied


@given(st.lists(st.tuples(small_fracs, small_fracs), min_size=2, max_size=4,
                unique=True))
@settings(max_examples=30, deadline=None)
def test_standard_space_from_l1_plane_passes_axioms(pts):
    def d(p, q):
        return abs(p[0] - q[0]) + abs(p[1] - q[1])

    from gvml.space import MetricSpace
    sp = standard_from_metric(MetricSpace("l1", d))
    assert check_axioms(sp, pts, [F(1), F(3)]).satisfied


def test_metric_axioms():
    assert check_metric_axioms(line_metric(), [F(0), F(1), F(5, 2)]).satisfied
    assert check_metric_axioms(discrete_metric(), ["a", "b", "c"]).satisfied
    bad = table_metric(["a", "b", "c"], [[0, 1, 5], [1, 0, 1], [5, 1, 0]])
    v = check_metric_axioms(bad, ["a", "b", "c"])
    assert v.refuted and v.witness["axiom"] == "triangle"


def test_subspace_restriction(reals):
    sub = subspace(reals, [F(0), F(1)])
    assert eval_m(sub, F(0), F(1), 1) == F(1, 2)
    assert check_axioms(sub, [F(0), F(1)], [F(1), F(2)]).satisfied
    with pytest.raises(DomainError):
        eval_m(sub, F(0), F(2), 1)
    with pytest.raises(DomainError):
        subspace(reals, [])


def test_subspace_ball_equivalence(reals):
    sub = subspace(reals, [F(0), F(1, 2), F(2)])
    for y in (F(0), F(1, 2), F(2)):
        assert (ball_contains(sub, F(0), F(1, 2), 1, y)
                == ball_contains(reals, F(0), F(1, 2), 1, y))


def test_subspace_predicate(unit):
    sub = subspace(unit, lambda p: p <= F(1, 2))
    assert eval_m(sub, F(0), F(1, 2), 1) == F(2, 3)
    with pytest.raises(DomainError):
        eval_m(sub, F(0), F(3, 4), 1)


def test_ball_examples(reals):
    assert ball_contains(reals, F(0), F(1, 2), 1, F(1, 2))   # M = 2/3 > 1/2
    assert not ball_contains(reals, F(0), F(1, 2), 1, F(2))  # M = 1/3
    assert ball_contains(reals, F(5), F(1, 100), F(1, 3), F(5))


@given(y=small_fracs, r1=st.fractions(min_value=F(1, 10), max_value=F(1, 2),
                                      max_denominator=10),
       t1=times)
@settings(max_examples=50)
def test_ball_monotone_in_radius_and_time(reals, y, r1, t1):
    r2 = r1 + F(1, 4)
    t2 = t1 + F(1, 2)
    if ball_contains(reals, F(0), r1, t1, y):
        assert ball_contains(reals, F(0), r2, t1, y)
        assert ball_contains(reals, F(0), r1, t2, y)


def test_monotone_in_t(reals, note):
    pairs = [(F(0), F(1))]
    assert monotone_in_t_check(reals, pairs, [F(1), F(2)]).satisfied
    assert monotone_in_t_check(note, [(("x", 3), ("y", 4))],
                               [F(1, 2), F(1), F(2)]).satisfied
    shrinking = FuzzyMetricSpace(
        "bad_t", lambda x, y, t: F(1) if x == y else 1 / (1 + t), MINIMUM)
    v = monotone_in_t_check(shrinking, [("a", "b")], [F(1), F(2)])
    assert v.refuted and v.witness["v1"] > v.witness["v2"]
    with pytest.raises(DomainError):
        monotone_in_t_check(reals, pairs, [F(2), F(1)])


def test_precompact_trivial_budget(reals):
    sample = [F(k) for k in range(5)]
    assert precompact_at_scale(reals, sample, F(1, 2), 1, len(sample)).satisfied


def test_precompact_integers_budget_exceeded(reals):
    sample = [F(k) for k in range(1, 101)]
    v = precompact_at_scale(reals, sample, F(1, 2), 1, 10)
    assert v.refuted
    assert v.witness["reason"] == "budget exceeded"
    assert v.witness["greedy_cover_size"] == 100


def test_precompact_unit_grid_single_center(unit):
    sample = [F(k, 100) for k in range(101)]
    v = precompact_at_scale(unit, sample, F(1, 2), 1, 1)
    assert v.satisfied and v.witness["greedy_cover_size"] == 1


def test_isometry_translation(reals):
    pairs = [(F(0), F(1)), (F(-2), F(1, 2)), (F(3), F(3))]
    v = isometry_check(reals, reals, lambda x: x + F(7, 3), pairs, [F(1), F(2)])
    assert v.satisfied
    v = isometry_check(reals, reals, lambda x: x * 2, pairs, [F(1)])
    assert v.refuted


def test_md_threshold_exactness(reals):
    # M_d(x, y, t) > 1 - eps  iff  d < t*eps/(1-eps), on both sides of the edge
    eps, t = F(1, 10), F(2)
    delta = md_threshold(eps, t)
    inside = delta - F(1, 1000)
    assert eval_m(reals, F(0), inside, t) > 1 - eps
    assert not eval_m(reals, F(0), delta, t) > 1 - eps


def test_float_mode_collar():
    import math

    def m(x, y, t):
        if x == y:
            return 1.0
        return t / (t + abs(x - y) * math.sqrt(2))

    sp = FuzzyMetricSpace("float_line", m, PRODUCT, exact=False, tol=1e-12)
    v = check_axioms(sp, [0.0, 1.0, 2.5], [0.5, 1.0, 2.0])
    assert v.status in (Status.SATISFIED_AT_SCALE, Status.INCONCLUSIVE)

    def near_one(x, y, t):
        return 1.0 if x == y else 1.0 - 1e-15

    borderline = FuzzyMetricSpace("collar", near_one, MINIMUM,
                                  exact=False, tol=1e-12)
    v = check_axioms(borderline, ["a", "b"], [1.0])
    assert v.status is Status.INCONCLUSIVE
