import itertools

import pytest

from hadamard_kit import _backend


def brute_inner(u, v):
    """Independent oracle: direct sum of entry products."""
    return sum(a * b for a, b in zip(u, v))


def all_sign_tuples(n):
    return list(itertools.product((1, -1), repeat=n))


def balanced_tuples(n):
    return [t for t in all_sign_tuples(n) if sum(t) == 0]


KERNELS = [pytest.param(_backend.python_kernels, id="python")]
if _backend.compiled_kernels is not None:
    KERNELS.append(pytest.param(_backend.compiled_kernels, id="compiled"))


@pytest.fixture(params=KERNELS)
def kernel_module(request):
    return request.param


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
