from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from gvml.errors import DomainError, UnknownNameError
from gvml.tnorm import (LUKASIEWICZ, MINIMUM, PRODUCT, apply, by_name, custom,
                        verify_axioms)
from gvml.verdict import Status

F = Fraction
BUILTINS = [MINIMUM, PRODUCT, LUKASIEWICZ]

unit_fracs = st.fractions(min_value=0, max_value=1, max_denominator=24)


def test_lukasiewicz_value():
    assert apply(LUKASIEWICZ, F(7, 10), F(8, 10)) == F(1, 2)


def test_lukasiewicz_clamps_to_zero():
    assert apply(LUKASIEWICZ, F(1, 4), F(1, 4)) == 0


@given(unit_fracs)
def test_product_identity(a):
    assert apply(PRODUCT, a, F(1)) == a


def test_minimum_value():
    assert apply(MINIMUM, F(3, 10), F(6, 10)) == F(3, 10)


@pytest.mark.parametrize("bad", [F(-1, 10), F(11, 10)])
def test_apply_domain_error(bad):
    with pytest.raises(DomainError):
        apply(PRODUCT, bad, F(1, 2))


def test_by_name():
    assert by_name("luk") is LUKASIEWICZ
    assert by_name("min") is MINIMUM
    assert by_name("prod") is PRODUCT
    with pytest.raises(UnknownNameError):
        by_name("bogus")


@pytest.mark.parametrize("op", BUILTINS, ids=lambda o: o.kind)
@pytest.mark.parametrize("step", [F(1, 4), F(1, 7), F(1, 10), F(1, 20)])
def test_builtins_satisfy_axioms(op, step):
    v = verify_axioms(op, step)
    assert v.status is Status.SATISFIED_AT_SCALE
    assert v.certificate["violations"] == 0


def test_broken_custom_refuted_at_unit():
    broken = custom(lambda a, b: a * b / 2)
    v = verify_axioms(broken, F(1, 10))
    assert v.status is Status.REFUTED_AT_SCALE
    assert v.witness["axiom"] == "identity"
    assert v.witness["a"] == 1 and v.witness["b"] == 1
    assert v.witness["got"] == F(1, 2)
    # witness re-evaluates to the violation it claims
    assert apply(broken, v.witness["a"], v.witness["b"]) == v.witness["got"] != 1


def test_noncommutative_custom_refuted():
    v = verify_axioms(custom(lambda a, b: a * b * b), F(1, 4))
    assert v.status is Status.REFUTED_AT_SCALE


def test_grid_step_preconditions():
    for bad in (F(0), F(-1, 4), F(3, 4)):
        with pytest.raises(DomainError):
            verify_axioms(PRODUCT, bad)


@pytest.mark.parametrize("op", BUILTINS, ids=lambda o: o.kind)
@given(a=unit_fracs, b=unit_fracs)
def test_minimum_dominates(op, a, b):
    assert apply(op, a, b) <= min(a, b)


@pytest.mark.parametrize("op", BUILTINS, ids=lambda o: o.kind)
@given(a=unit_fracs, b=unit_fracs, c=unit_fracs)
@settings(max_examples=50)
def test_commutative_and_associative(op, a, b, c):
    assert apply(op, a, b) == apply(op, b, a)
    assert apply(op, apply(op, a, b), c) == apply(op, a, apply(op, b, c))


@given(a=unit_fracs, b=unit_fracs)
def test_apply_is_pure(a, b):
    assert apply(LUKASIEWICZ, a, b) == apply(LUKASIEWICZ, a, b)


def test_custom_lipschitz_override_accepted():
    doubled = custom(lambda a, b: a * b, lipschitz=2)
    assert verify_axioms(doubled, F(1, 8)).satisfied
