import itertools
from math import comb

import pytest

from hadamard_kit.errors import CapacityError, DomainError
from hadamard_kit.matrix_core import verify_hadamard
from hadamard_kit.search import (
    Mode,
    SearchConfig,
    Status,
    enumerate_balanced_rows,
    exhaustive_nonexistence,
    find_hadamard,
    max_partial_rows,
    run,
)

from conftest import all_sign_tuples, brute_inner


def lex_key(t):
    return [0 if x == 1 else 1 for x in t]


class TestEnumerate:
    def test_n4_leading_plus(self):
        assert [str(v) for v in enumerate_balanced_rows(4, True)] == ["++--", "+-+-", "+--+"]

    def test_n2(self):
        assert [str(v) for v in enumerate_balanced_rows(2, True)] == ["+-"]

    @pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12])
    def test_matches_brute_force(self, n):
        tuples = [t for t in all_sign_tuples(n) if sum(t) == 0]
        expected = sorted(tuples, key=lex_key)
        assert [v.entries for v in enumerate_balanced_rows(n)] == expected
        lead = [t for t in expected if t[0] == 1]
        assert [v.entries for v in enumerate_balanced_rows(n, True)] == lead
        assert len(lead) == comb(n - 1, n // 2 - 1)

    def test_n8_count(self):
        assert len(enumerate_balanced_rows(8, True)) == 35

    @pytest.mark.parametrize("n, exc", [(3, DomainError), (0, DomainError), (30, CapacityError)])
    def test_errors(self, n, exc):
        with pytest.raises(exc):
            enumerate_balanced_rows(n)


def lex_first_oracle(n):
    """First pairwise-orthogonal (n-1)-subset of leading-plus balanced rows, by brute force."""
    cands = [t for t in sorted(all_sign_tuples(n), key=lex_key) if t[0] == 1 and sum(t) == 0]
    for combo in itertools.combinations(cands, n - 1):
        if all(brute_inner(a, b) == 0 for a, b in itertools.combinations(combo, 2)):
            return [tuple([1] * n)] + list(combo)
    return None


class TestFind:
    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_lexicographically_first(self, n):
        out = find_hadamard(SearchConfig(n))
        assert out.status is Status.FOUND
        assert [r.entries for r in out.matrix.rows] == lex_first_oracle(n)

    def test_n6_proven_none(self):
        assert find_hadamard(SearchConfig(6)).status is Status.PROVEN_NONE
        assert lex_first_oracle(6) is None

    def test_n12(self):
        out = find_hadamard(SearchConfig(12, max_seconds=60))
        assert out.status is Status.FOUND
        assert verify_hadamard(out.matrix).is_hadamard

    def test_n1(self):
        out = find_hadamard(SearchConfig(1))
        assert out.status is Status.FOUND and out.matrix.shape == (1, 1)

    def test_deterministic(self):
        a, b = find_hadamard(SearchConfig(16)), find_hadamard(SearchConfig(16))
        assert a == b and a.nodes_visited == b.nodes_visited

    @pytest.mark.parametrize("n", [6, 8, 12])
    def test_parallel_matches_sequential(self, n):
        seq = find_hadamard(SearchConfig(n))
        par = find_hadamard(SearchConfig(n, parallel=True))
        assert par.status is seq.status
        assert par.matrix == seq.matrix

    def test_node_budget(self):
        out = find_hadamard(SearchConfig(12, max_nodes=5))
        assert out.status is Status.BUDGET_EXHAUSTED
        assert out.nodes_visited == 5 and 1 < out.depth <= 6

    def test_time_budget(self):
        out = find_hadamard(SearchConfig(24, max_seconds=0.2))
        assert out.status is Status.BUDGET_EXHAUSTED
        assert out.elapsed < 5

    def test_capacity(self):
        with pytest.raises(CapacityError):
            find_hadamard(SearchConfig(32))

    @pytest.mark.parametrize("kw", [{"order": 0}, {"order": 4, "max_nodes": 0}, {"order": 4, "max_seconds": -1}])
    def test_config_validation(self, kw):
        with pytest.raises(DomainError):
            SearchConfig(**kw)


class TestExhaustive:
    @pytest.mark.parametrize("n", [3, 5, 6, 7, 9, 10, 11, 13, 14])
    def test_proven_none(self, n):
        assert exhaustive_nonexistence(n).status is Status.PROVEN_NONE

    @pytest.mark.parametrize("n", [1, 2, 4, 8, 12])
    def test_found(self, n):
        out = exhaustive_nonexistence(n)
        assert out.status is Status.FOUND and verify_hadamard(out.matrix).is_hadamard

    def test_too_large(self):
        with pytest.raises(CapacityError, match="first-solution"):
            exhaustive_nonexistence(16)

    def test_run_dispatch(self):
        assert run(SearchConfig(6, Mode.EXHAUSTIVE_NONEXISTENCE)).status is Status.PROVEN_NONE
        assert run(SearchConfig(8, Mode.PARTIAL_RANK)).rank == 8


def partial_rank_oracle(n):
    """Largest family of pairwise orthogonal rows containing the all-ones row, by brute force."""
    vecs = [t for t in all_sign_tuples(n) if t[0] == 1]
    ones = tuple([1] * n)
    best = 1
    pool = [v for v in vecs if brute_inner(v, ones) == 0]
    for r in range(1, len(pool) + 1):
        if any(all(brute_inner(a, b) == 0 for a, b in itertools.combinations(c, 2))
               for c in itertools.combinations(pool, r)):
            best = r + 1
        else:
            break
    return best


class TestPartial:
    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_matches_oracle(self, n):
        out = max_partial_rows(n)
        assert out.status is Status.PARTIAL_RANK and out.exact
        assert out.rank == partial_rank_oracle(n)

    def test_n6_no_three_orthogonal_rows_anywhere(self):
        vecs = all_sign_tuples(6)
        orth = {(a, b) for a in vecs for b in vecs if brute_inner(a, b) == 0}
        assert orth
        assert not any((a, b) in orth and (a, c) in orth and (b, c) in orth
                       for a, b in orth for c in vecs)

    @pytest.mark.parametrize("n, r", [(1, 1), (2, 2), (4, 4), (8, 8), (12, 12), (6, 2), (10, 2), (9, 1)])
    def test_values(self, n, r):
        out = max_partial_rows(n)
        assert out.rank == r and out.exact
        assert out.matrix.shape == (r, n)
        report = verify_hadamard(out.matrix)
        assert report.first_violation is None
        if r == n:
            assert report.is_hadamard

    def test_budget_gives_lower_bound(self):
        out = max_partial_rows(24, max_nodes=3)
        assert not out.exact and out.rank >= 2
        assert verify_hadamard(out.matrix).first_violation is None

    @pytest.mark.parametrize("n, r, exact", [(32, 32, True), (30, 2, True), (36, 2, False), (33, 1, True)])
    def test_beyond_enumeration(self, n, r, exact):
        out = max_partial_rows(n)
        assert (out.rank, out.exact) == (r, exact)
