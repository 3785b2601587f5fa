"""Both kernel backends must agree exactly, node counts included."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hadamard_kit import _backend
from hadamard_kit.search import _candidates

pytestmark = pytest.mark.skipif(_backend.compiled_kernels is None, reason="compiled kernels not built")

PY = _backend.python_kernels
C = _backend.compiled_kernels


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12, 14, 16])
@pytest.mark.parametrize("mode", [0, 1])
def test_search_agrees(n, mode):
    v = _candidates(n)
    assert PY.clique_search(v, n // 2, n - 1, mode) == C.clique_search(v, n // 2, n - 1, mode)


@pytest.mark.parametrize("mode", [0, 1])
@pytest.mark.parametrize("budget", [1, 5, 50, 1000])
def test_node_budget_agrees(mode, budget):
    v = _candidates(20)
    a = PY.clique_search(v, 10, 19, mode, 0, -1, budget)
    b = C.clique_search(v, 10, 19, mode, 0, -1, budget)
    assert a == b
    assert a[0] is False and a[2] == budget


def test_root_range_agrees():
    v = _candidates(12)
    for lo in range(0, 40, 7):
        assert PY.clique_search(v, 6, 11, 0, lo, lo + 1) == C.clique_search(v, 6, 11, 0, lo, lo + 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8).map(lambda h: 2 * h), st.data())
def test_random_subsets_agree(n, data):
    full = _candidates(n)
    mask = data.draw(st.lists(st.booleans(), min_size=len(full), max_size=len(full)))
    v = np.ascontiguousarray(full[np.asarray(mask, dtype=bool)])
    target = data.draw(st.integers(0, n - 1))
    mode = data.draw(st.sampled_from([0, 1]))
    assert PY.clique_search(v, n // 2, target, mode) == C.clique_search(v, n // 2, target, mode)


def test_gram_and_histogram_agree():
    rng = np.random.default_rng(0)
    words = rng.integers(0, 2**63, size=(17, 3), dtype=np.uint64)
    assert np.array_equal(PY.gram(words, 150), C.gram(words, 150))
    v = _candidates(10)
    assert np.array_equal(PY.pair_histogram(v, 10), C.pair_histogram(v, 10))


def test_unknown_mode():
    v = _candidates(4)
    for k in (PY, C):
        with pytest.raises(ValueError):
            k.clique_search(v, 2, 3, 7)
