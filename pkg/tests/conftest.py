from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tverberg.geometry import Point

settings.register_profile(
    "suite",
    max_examples=60,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("suite")

rationals = st.fractions(min_value=Fraction(-40), max_value=Fraction(40),
                         max_denominator=12)
points = st.builds(Point, rationals, rationals)
int_points = st.builds(Point.of,
                       st.integers(min_value=-60, max_value=60),
                       st.integers(min_value=-60, max_value=60))
