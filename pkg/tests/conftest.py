import pytest
from hypothesis import strategies as st

from ck6.algebra import default_convention
from ck6.laurent import LaurentPoly

exponents = st.integers(min_value=-4, max_value=4)
scalars = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def laurent(draw, max_terms=4):
    terms = draw(st.dictionaries(exponents, scalars, max_size=max_terms))
    return LaurentPoly(terms)


@pytest.fixture(scope="session")
def conv():
    return default_convention()
