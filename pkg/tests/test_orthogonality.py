import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hadamard_kit.errors import DimensionError, DomainError, PreconditionError
from hadamard_kit.matrix_core import SignVector, inner_product, overlap
from hadamard_kit.orthogonality import (
    BalancedHalfModel,
    OrderKind,
    Verdict,
    check_overlap_formula,
    classify_order,
    predicted_orthogonal_number,
    twice_odd_orthogonal_number,
)
from hadamard_kit.search import enumerate_balanced_rows, exhaustive_nonexistence, Status

from conftest import all_sign_tuples, balanced_tuples, brute_inner

V = SignVector.from_string


class TestPredicted:
    @pytest.mark.parametrize("n, k, g", [(4, 1, 0), (8, 3, 4), (6, 1, -2), (12, 3, 0)])
    def test_examples(self, n, k, g):
        assert predicted_orthogonal_number(n, k) == g

    @pytest.mark.parametrize("n, k", [(5, 1), (4, 3), (4, -1), (0, 0)])
    def test_domain(self, n, k):
        with pytest.raises(DomainError):
            predicted_orthogonal_number(n, k)

    @given(st.integers(1, 200).map(lambda h: 2 * h), st.data())
    def test_residue_mod_four(self, n, data):
        k = data.draw(st.integers(0, n // 2))
        g = predicted_orthogonal_number(n, k)
        assert g % 4 == (-n) % 4
        assert (g % 4 == 0) == (n % 4 == 0)


class TestTwiceOdd:
    def test_examples(self):
        assert twice_odd_orthogonal_number(1, 1) == -2
        assert twice_odd_orthogonal_number(2, 3) == 2

    def test_never_zero(self):
        for ell in range(0, 60):
            for k in range(0, 2 * ell + 2):
                g = twice_odd_orthogonal_number(ell, k)
                assert g % 4 == 2 and g != 0
                assert g == predicted_orthogonal_number(2 * (2 * ell + 1), k)

    def test_domain(self):
        with pytest.raises(DomainError):
            twice_odd_orthogonal_number(1, 4)
        with pytest.raises(DomainError):
            twice_odd_orthogonal_number(-1, 0)


class TestModel:
    def test_ell_only_for_two_mod_four(self):
        assert BalancedHalfModel(10, 2).ell == 2
        assert BalancedHalfModel(8, 2).ell is None
        assert BalancedHalfModel(6, 1).orthogonal_number == -2

    def test_invalid(self):
        with pytest.raises(DomainError):
            BalancedHalfModel(6, 4)


class TestClassify:
    @pytest.mark.parametrize(
        "n, kind, verdict",
        [
            (1, OrderKind.ODD, Verdict.EXISTS_TRIVIALLY),
            (2, OrderKind.TWICE_ODD, Verdict.EXISTS_TRIVIALLY),
            (7, OrderKind.ODD, Verdict.IMPOSSIBLE),
            (6, OrderKind.TWICE_ODD, Verdict.IMPOSSIBLE),
            (12, OrderKind.DIVISIBLE_BY_FOUR, Verdict.POSSIBLE_CANDIDATE),
            (4, OrderKind.DIVISIBLE_BY_FOUR, Verdict.POSSIBLE_CANDIDATE),
        ],
    )
    def test_examples(self, n, kind, verdict):
        c = classify_order(n)
        assert (c.kind, c.verdict) == (kind, verdict)

    def test_str(self):
        assert str(classify_order(6)) == "TwiceOdd / Impossible"

    def test_rejects_zero(self):
        with pytest.raises(DomainError):
            classify_order(0)

    @pytest.mark.parametrize("n", range(1, 11))
    def test_agrees_with_search(self, n):
        found = exhaustive_nonexistence(n).status is Status.FOUND
        verdict = classify_order(n).verdict
        if verdict is Verdict.IMPOSSIBLE:
            assert not found
        else:
            # every candidate order up to 10 is realized
            assert found


class TestOverlapFormula:
    def test_examples(self):
        c = check_overlap_formula(V("++--"), V("+-+-"))
        assert (c.k, c.g_actual, c.g_predicted, c.agrees) == (1, 0, 0, True)
        c = check_overlap_formula(V("+++---"), V("+-+-+-"))
        assert (c.k, c.g_actual, c.g_predicted, c.agrees) == (2, 2, 2, True)

    def test_rejects_unbalanced(self):
        with pytest.raises(PreconditionError, match="second row"):
            check_overlap_formula(V("++--"), V("+++-"))
        with pytest.raises(PreconditionError, match="first row"):
            check_overlap_formula(V("+-+"), V("+--"))

    def test_rejects_length_mismatch(self):
        with pytest.raises(DimensionError):
            check_overlap_formula(V("+-"), V("++--"))

    @pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12])
    def test_exhaustive_law(self, n):
        rows = enumerate_balanced_rows(n)
        for u in rows:
            for v in rows:
                assert inner_product(u, v) == 4 * overlap(u, v) - n

    def test_oracle_on_tuples(self):
        # exhaustive over C(8,4)^2 pairs against the direct-summation oracle
        tuples = balanced_tuples(8)
        assert len(tuples) == 70
        for a in tuples:
            for b in tuples:
                k = sum(x == y == 1 for x, y in zip(a, b))
                c = check_overlap_formula(SignVector.from_entries(a), SignVector.from_entries(b))
                assert c.agrees and c.g_actual == brute_inner(a, b) == 4 * k - 8


class TestObstructions:
    @pytest.mark.parametrize("n", [6, 10])
    def test_no_balanced_orthogonal_pair(self, n):
        rows = enumerate_balanced_rows(n)
        assert all(inner_product(u, v) != 0 for u in rows for v in rows)

    @pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
    def test_odd_exhaustive(self, n):
        vecs = all_sign_tuples(n)
        assert all(brute_inner(a, b) != 0 for a in vecs for b in vecs)

    def test_odd_eleven_random(self):
        rng = random.Random(11)
        full = (1 << 11) - 1
        for _ in range(100_000):
            u = SignVector(11, rng.randint(0, full))
            v = SignVector(11, rng.randint(0, full))
            assert inner_product(u, v) != 0
