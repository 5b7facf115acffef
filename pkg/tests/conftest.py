from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qtoric.exactnum import FieldSpec, Scalar
from qtoric.fixtures import fixture, fixture_names
from qtoric.polytope import Polytope

SIMPLE_FIXTURES = fixture_names(simple_only=True)

_cache = {}


def polytope(name):
    if name not in _cache:
        _cache[name] = Polytope.from_spec(fixture(name))
    return _cache[name]


@pytest.fixture(params=SIMPLE_FIXTURES)
def simple_name(request):
    return request.param


small_fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def scalars(d=5):
    fs = FieldSpec(d)
    return st.builds(lambda a, b: Scalar(a, b, fs), small_fractions, small_fractions)


def Q(x):
    return Fraction(x)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
