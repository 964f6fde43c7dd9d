"""Unit tests for the integer group ring and signed sets."""

import numpy as np
import pytest

from signed_difference_sets.core.groupring import (
    GroupRingElement,
    SignedSet,
    convolve,
    difference_function,
    involution,
    negate,
    ring_sum,
    to_ring,
)
from signed_difference_sets.core.groups import group_make
from signed_difference_sets.utils.errors import GroupError, StrictnessError, SupportOverlapError


def _naive_product(A: GroupRingElement, B: GroupRingElement) -> np.ndarray:
    G = A.group
    out = np.zeros(G.v, dtype=np.int64)
    for h in range(G.v):
        for k in range(G.v):
            g = G.index(G.add(G.element(h), G.element(k)))
            out[g] += A.coefficient(h) * B.coefficient(k)
    return out


class TestSignedSet:
    """Tests for SignedSet construction."""

    def test_to_ring(self) -> None:
        """+1 on P, -1 on N."""
        G = group_make([5])
        D = SignedSet(G, frozenset({1}), frozenset({0, 2, 3, 4}))
        assert to_ring(D).coeffs.tolist() == [-1, 1, -1, -1, -1]
        assert D.k == 5
        assert D.imbalance == -3

    def test_overlap_rejected(self) -> None:
        """P and N must be disjoint."""
        with pytest.raises(SupportOverlapError):
            SignedSet(group_make([5]), frozenset({1, 2}), frozenset({2}))

    def test_out_of_range_rejected(self) -> None:
        """Indices must lie in [0, v)."""
        with pytest.raises(GroupError):
            SignedSet(group_make([5]), frozenset({5}))

    def test_from_ring(self) -> None:
        """{-1, 0, 1} elements convert back; larger coefficients do not."""
        G = group_make([4])
        assert SignedSet.from_ring(GroupRingElement(G, [1, 0, -1, 1])) == SignedSet(G, frozenset({0, 3}), frozenset({2}))
        with pytest.raises(StrictnessError):
            SignedSet.from_ring(GroupRingElement(G, [2, 0, 0, 0]))

    def test_negate(self, paley13: SignedSet) -> None:
        """-D swaps P and N."""
        assert negate(paley13).positive == paley13.negative
        assert to_ring(negate(paley13)) == -to_ring(paley13)


class TestRingOperations:
    """Tests for sums, involution and convolution."""

    def test_ring_sum_allows_large_coefficients(self) -> None:
        """Sums are coefficientwise with no magnitude bound."""
        G = group_make([3])
        A = GroupRingElement(G, [1, 1, 0])
        assert ring_sum([A, A, A]).coeffs.tolist() == [3, 3, 0]

    def test_ring_sum_group_mismatch(self) -> None:
        """Summands must share the group."""
        with pytest.raises(GroupError):
            ring_sum([GroupRingElement.full(group_make([3])), GroupRingElement.full(group_make([4]))])
        with pytest.raises(GroupError):
            ring_sum([])

    def test_involution(self) -> None:
        """In Z_5, 1 maps to 4; in Z_3 x Z_3, (1, 2) maps to (2, 1)."""
        G = group_make([5])
        assert involution(GroupRingElement.indicator(G, [1])) == GroupRingElement.indicator(G, [4])
        H = group_make([3, 3])
        assert involution(GroupRingElement.indicator(H, [H.index((1, 2))])) == GroupRingElement.indicator(H, [H.index((2, 1))])

    def test_involution_is_an_involution(self) -> None:
        """(A^(-1))^(-1) = A."""
        G = group_make([2, 6])
        A = GroupRingElement(G, np.arange(G.v) - 5)
        assert involution(involution(A)) == A

    @pytest.mark.parametrize("exponents", [[7], [2, 6], [3, 3], [2, 2, 4]])
    def test_involution_distributes_over_products(self, exponents: list[int]) -> None:
        """(AB)^(-1) = A^(-1) B^(-1)."""
        G = group_make(exponents)
        rng = np.random.default_rng(G.v)
        for _ in range(5):
            A = GroupRingElement(G, rng.integers(-3, 4, size=G.v))
            B = GroupRingElement(G, rng.integers(-3, 4, size=G.v))
            assert involution(convolve(A, B)) == convolve(involution(A), involution(B))

    def test_convolution_matches_definition(self) -> None:
        """Rolled accumulation equals the double sum over pairs."""
        G = group_make([2, 3])
        rng = np.random.default_rng(11)
        A = GroupRingElement(G, rng.integers(-2, 3, size=G.v))
        B = GroupRingElement(G, rng.integers(-2, 3, size=G.v))
        assert convolve(A, B).coeffs.tolist() == _naive_product(A, B).tolist()
        assert convolve(A, B) == convolve(B, A)

    def test_identity_is_neutral(self) -> None:
        """0_G * A = A."""
        G = group_make([7])
        A = GroupRingElement(G, [0, 1, 2, 3, 4, 5, 6])
        assert GroupRingElement.identity(G) * A == A

    def test_scalar_multiplication(self) -> None:
        """Integers scale from either side."""
        G = group_make([3])
        A = GroupRingElement(G, [1, 0, -1])
        assert (2 * A).coeffs.tolist() == [2, 0, -2]
        assert (A * 3).coeffs.tolist() == [3, 0, -3]

    def test_difference_function_of_paley(self, paley13: SignedSet) -> None:
        """D D^(-1) = -G + 13 * 0_G for the quadratic residues of Z_13."""
        E = difference_function(to_ring(paley13)).coeffs
        assert E[0] == 12
        assert set(E[1:].tolist()) == {-1}

    def test_coefficients_are_read_only(self) -> None:
        """Elements are immutable."""
        A = GroupRingElement.full(group_make([3]))
        with pytest.raises(ValueError):
            A.coeffs[0] = 5

    def test_wrong_length(self) -> None:
        """Coefficient vectors must have length v."""
        with pytest.raises(GroupError):
            GroupRingElement(group_make([3]), [1, 2])

    def test_weight_and_augmentation(self) -> None:
        """Weight is the sum of squares, augmentation the plain sum."""
        A = GroupRingElement(group_make([4]), [2, -1, 0, 1])
        assert A.weight == 6
        assert A.augmentation == 2
        assert not A.is_signed()
        assert A.strictness_violations().tolist() == [0]
