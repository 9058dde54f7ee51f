from fractions import Fraction

import pytest

from gvml.gallery import note_space, reals_md_space, unit_interval_space

F = Fraction


@pytest.fixture(scope="session")
def reals():
    return reals_md_space()


@pytest.fixture(scope="session")
def unit():
    return unit_interval_space()


@pytest.fixture(scope="session")
def note():
    return note_space()
