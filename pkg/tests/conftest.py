from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def rationals(lo=-6, hi=6, max_den=3):
    return st.builds(Fraction, st.integers(lo, hi), st.integers(1, max_den))


def vectors(n, **kw):
    return st.tuples(*[rationals(**kw)] * n)


@st.composite
def point_sets(draw, n=None, min_size=1, max_size=5):
    if n is None:
        n = draw(st.integers(1, 3))
    return draw(st.lists(vectors(n), min_size=min_size, max_size=max_size))


# acceptance report: one line per criterion at the end of the run
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key:>2}. {text}")
