import pytest
from hypothesis import HealthCheck, settings, strategies as st

from detloci.degrees import validate

settings.register_profile("default", deadline=None, max_examples=200,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def specs(draw, t_max=4, c_max=6, lo=-3, hi=3, n_max=8):
    t = draw(st.integers(2, t_max))
    c = draw(st.integers(2, c_max))
    n = draw(st.integers(1, n_max))
    b = sorted(draw(st.lists(st.integers(lo, hi), min_size=t, max_size=t)))
    a = sorted(draw(st.lists(st.integers(lo, hi), min_size=t + c - 1, max_size=t + c - 1)))
    return validate(n, t, c, b, a)


@st.composite
def nonempty_specs(draw, t_max=4, c_max=6, lo=-3, hi=3, n_max=8):
    """Specs with a_{i-1} >= b_i for all i and > for some i, built directly."""
    t = draw(st.integers(2, t_max))
    c = draw(st.integers(2, c_max))
    n = draw(st.integers(1, n_max))
    b = sorted(draw(st.lists(st.integers(lo, hi), min_size=t, max_size=t)))
    a = sorted(draw(st.lists(st.integers(lo, hi), min_size=t + c - 1, max_size=t + c - 1)))
    top = lo
    for j in range(len(a)):
        top = max(top, a[j], b[j] if j < t else lo)
        a[j] = top
    if all(a[i] == b[i] for i in range(t)):
        a[t - 1:] = [x + 1 for x in a[t - 1:]]
    return validate(n, t, c, b, a)


@pytest.fixture
def twisted_cubic():
    return validate(3, 2, 2, [0, 0], [1, 1, 1])


@pytest.fixture
def points_spec():
    """Four general points in P^3: the c = 3 member of the counterexample family."""
    return validate(3, 2, 3, [0, 0], [1, 1, 1, 1])


# acceptance criteria log, printed at the end of the run whatever the capture mode
_ACCEPTANCE: dict[int, str] = {}


@pytest.fixture
def acceptance():
    def record(k: int, ok: bool, detail: str):
        line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}"
        _ACCEPTANCE[k] = line
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(_ACCEPTANCE):
            terminalreporter.write_line(_ACCEPTANCE[k])
