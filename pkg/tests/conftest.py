import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from char2forms.ff import make_ctx
from char2forms.mat import FormMatrix

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

F2 = make_ctx(1)
F4 = make_ctx(2)
F16 = make_ctx(4)
SMALL_FIELDS = [F2, F4, F16]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@st.composite
def square_matrices(draw, ctx, min_n=1, max_n=5, symmetric=False, zero_diagonal=False):
    n = draw(st.integers(min_n, max_n))
    vals = draw(st.lists(st.integers(0, ctx.q - 1), min_size=n * n, max_size=n * n))
    a = np.array(vals, dtype=np.int64).reshape(n, n)
    if symmetric:
        a = np.triu(a, 1 if zero_diagonal else 0)
        a = a ^ np.triu(a, 1).T
    return FormMatrix._wrap(a, ctx)


def field_ids(ctx):
    return ctx.name


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
