"""Unit tests for abelian groups, characters and cyclotomic integers."""

import itertools

import numpy as np
import pytest
from sympy import cyclotomic_poly, factorint, totient
from sympy.utilities.iterables import partitions

from signed_difference_sets.core.cyclotomic_integer import (
    CyclotomicInteger,
    ci_add,
    ci_conj,
    ci_is_integer,
    ci_mul,
    cyclotomic_polynomial,
    norm_squared,
)
from signed_difference_sets.core.finite_field import field_make
from signed_difference_sets.core.groupring import GroupRingElement, convolve, involution
from signed_difference_sets.core.groups import (
    GroupElement,
    additive_group,
    all_char_sums,
    char_eval,
    char_sum,
    character,
    characters,
    coefficients_from_characters,
    group_make,
)
from signed_difference_sets.utils.errors import GroupError


class TestAbelianGroup:
    """Tests for group presentation and indexing."""

    def test_indexing_is_mixed_radix(self) -> None:
        """First coordinate is most significant."""
        G = group_make([3, 3])
        assert G.v == 9
        assert G.index((1, 2)) == 5
        assert G.element(5) == GroupElement((1, 2))

    def test_exponent_and_rank(self) -> None:
        """Z_2 x Z_4 has exponent 4 and rank 2."""
        G = group_make([2, 4])
        assert G.exponent == 4
        assert G.rank == 2
        assert not G.is_cyclic_presentation

    def test_neg_index(self) -> None:
        """-(1, 3) = (1, 1) in Z_2 x Z_4."""
        G = group_make([2, 4])
        assert G.neg_index[G.index((1, 3))] == G.index((1, 1))

    def test_add_and_sub(self) -> None:
        """Coordinatewise arithmetic mod the orders."""
        G = group_make([5])
        x, y = GroupElement((3,)), GroupElement((4,))
        assert G.add(x, y) == GroupElement((2,))
        assert G.sub(x, y) == GroupElement((4,))

    def test_invalid_orders(self) -> None:
        """Empty or nonpositive orders are rejected."""
        with pytest.raises(GroupError):
            group_make([])
        with pytest.raises(GroupError):
            group_make([3, 0])

    def test_out_of_range(self) -> None:
        """Coordinates outside the group raise GroupError."""
        G = group_make([3])
        with pytest.raises(GroupError):
            G.index((3,))
        with pytest.raises(GroupError):
            G.element(3)

    def test_additive_group(self) -> None:
        """(GF(3^2), +) is Z_3 x Z_3."""
        assert additive_group(field_make(3, 2)).orders == (3, 3)
        assert str(additive_group(field_make(3, 2))) == "Z_3 x Z_3"


class TestCyclotomicIntegers:
    """Tests for exact arithmetic in Z[zeta_m]."""

    def test_cyclotomic_polynomials(self) -> None:
        """Phi_1, Phi_6 and Phi_12 in ascending coefficients."""
        assert cyclotomic_polynomial(1) == (-1, 1)
        assert cyclotomic_polynomial(6) == (1, -1, 1)
        assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)

    def test_root_times_inverse_root(self) -> None:
        """zeta * zeta^(m-1) = 1."""
        for m in (3, 4, 5, 9, 12):
            product = ci_mul(CyclotomicInteger.root(m, 1), CyclotomicInteger.root(m, m - 1))
            assert product == CyclotomicInteger.integer(m, 1)

    def test_sum_of_nontrivial_cube_roots(self) -> None:
        """zeta_3 + zeta_3^2 = -1."""
        total = ci_add(CyclotomicInteger.root(3, 1), CyclotomicInteger.root(3, 2))
        assert ci_is_integer(total)
        assert total.as_integer() == -1

    def test_conjugation(self) -> None:
        """conj(zeta_5^2) = zeta_5^3."""
        assert ci_conj(CyclotomicInteger.root(5, 2)) == CyclotomicInteger.root(5, 3)

    def test_norm_squared_of_gauss_sum(self) -> None:
        """|sum of Legendre symbols times zeta_13^x|^2 = 13."""
        squares = {1, 3, 4, 9, 10, 12}
        buckets = np.array([0] + [1 if x in squares else -1 for x in range(1, 13)], dtype=np.int64)
        gauss = CyclotomicInteger.from_buckets(13, buckets)
        assert norm_squared(gauss).as_integer() == 13

    def test_order_mismatch(self) -> None:
        """Values of different orders cannot be combined."""
        with pytest.raises(GroupError):
            ci_add(CyclotomicInteger.integer(3, 1), CyclotomicInteger.integer(4, 1))

    def test_operators(self) -> None:
        """Operators agree with the module functions."""
        x = CyclotomicInteger.root(4, 1)
        y = CyclotomicInteger.integer(4, 2)
        assert x + y == ci_add(x, y)
        assert (x * x).as_integer() == -1
        assert (x - x).as_integer() == 0
        assert x.rotate(1) == x * x


class TestCharacters:
    """Tests for additive characters and character sums."""

    def test_char_eval(self) -> None:
        """chi_1 on Z_4 sends 3 to zeta_4^3."""
        G = group_make([4])
        assert char_eval(character(G, [1]), GroupElement((3,))) == CyclotomicInteger.root(4, 3)

    def test_principal_sum_is_augmentation(self) -> None:
        """chi_0(A) is the coefficient sum."""
        G = group_make([2, 3])
        A = GroupRingElement(G, [1, -2, 0, 3, 1, 1])
        assert char_sum(character(G, [0, 0]), A).as_integer() == 4

    def test_nonprincipal_sum_of_group_vanishes(self) -> None:
        """chi(G) = 0 for chi non-principal."""
        G = group_make([3, 3])
        whole = GroupRingElement.full(G)
        for chi in characters(G):
            if not chi.is_principal:
                assert char_sum(chi, whole).as_integer() == 0

    def test_all_char_sums_match_char_sum(self) -> None:
        """The blocked evaluation agrees with one-at-a-time sums."""
        G = group_make([2, 6])
        rng = np.random.default_rng(3)
        A = GroupRingElement(G, rng.integers(-3, 4, size=G.v))
        expected = [char_sum(chi, A) for chi in characters(G)]
        assert all_char_sums(A) == expected

    def test_group_mismatch(self) -> None:
        """Characters only evaluate elements of their own group."""
        with pytest.raises(GroupError):
            char_sum(character(group_make([3]), [1]), GroupRingElement.full(group_make([5])))

    def test_parameter_outside_group(self) -> None:
        """a must be an element of G."""
        with pytest.raises(GroupError):
            character(group_make([3]), [3])


class TestInverseFormula:
    """Tests for recovering coefficients from character sums."""

    @pytest.mark.parametrize("orders", [[5], [9], [2, 4], [3, 3], [12], [3, 3, 3, 3]])
    def test_round_trip(self, orders: list[int]) -> None:
        """Random integer elements are reconstructed exactly from all chi(A)."""
        G = group_make(orders)
        rng = np.random.default_rng(sum(orders))
        for _ in range(34):
            A = GroupRingElement(G, rng.integers(-5, 6, size=G.v))
            sums = dict(zip(characters(G), all_char_sums(A), strict=True))
            assert coefficients_from_characters(sums, G) == A

    def test_missing_character(self) -> None:
        """Every character sum is required."""
        G = group_make([3])
        A = GroupRingElement.full(G)
        sums = dict(zip(characters(G), all_char_sums(A), strict=True))
        sums.pop(character(G, [2]))
        with pytest.raises(GroupError, match="missing"):
            coefficients_from_characters(sums, G)


def _abelian_groups(v: int) -> list[list[int]]:
    """Every abelian group of order v, as cyclic factors of prime-power order."""
    per_prime = [
        [[p**k for k, count in part.items() for _ in range(count)] for part in partitions(e)]
        for p, e in factorint(v).items()
    ]
    return [list(itertools.chain.from_iterable(choice)) for choice in itertools.product(*per_prime)]


class TestCharacterIdentities:
    """Orthogonality and multiplicativity of the character calculus."""

    def test_group_enumeration(self) -> None:
        """Z_8, Z_2 x Z_4 and Z_2^3 are the groups of order 8."""
        assert sorted(sorted(orders) for orders in _abelian_groups(8)) == [[2, 2, 2], [2, 4], [8]]
        assert len(_abelian_groups(72)) == 6

    @pytest.mark.slow
    @pytest.mark.parametrize("v", range(2, 201))
    def test_orthogonality(self, v: int) -> None:
        """sum_chi chi(g) is |G| at g = 0 and 0 at every other g."""
        for orders in _abelian_groups(v):
            G = group_make(orders)
            exponents = np.array([chi.exponents() for chi in characters(G)], dtype=np.int64)
            for g in range(G.v):
                total = CyclotomicInteger.from_buckets(G.exponent, np.bincount(exponents[:, g], minlength=G.exponent))
                assert total.as_integer() == (G.v if g == 0 else 0), (orders, g)

    @pytest.mark.parametrize("orders", [[7], [2, 4], [3, 3], [12], [2, 3, 5], [3, 9]])
    def test_multiplicative(self, orders: list[int]) -> None:
        """chi(A B) = chi(A) chi(B) for every character."""
        G = group_make(orders)
        rng = np.random.default_rng(G.v)
        for _ in range(5):
            A = GroupRingElement(G, rng.integers(-3, 4, size=G.v))
            B = GroupRingElement(G, rng.integers(-3, 4, size=G.v))
            products = [a * b for a, b in zip(all_char_sums(A), all_char_sums(B), strict=True)]
            assert all_char_sums(convolve(A, B)) == products

    @pytest.mark.parametrize("orders", [[5], [2, 6], [3, 3, 3]])
    def test_involution_conjugates(self, orders: list[int]) -> None:
        """chi(A^(-1)) is the complex conjugate of chi(A)."""
        G = group_make(orders)
        A = GroupRingElement(G, np.random.default_rng(1).integers(-4, 5, size=G.v))
        assert all_char_sums(involution(A)) == [ci_conj(s) for s in all_char_sums(A)]


class TestCyclotomicPolynomialsAgainstSympy:
    """Phi_m agrees with sympy.cyclotomic_poly."""

    @pytest.mark.parametrize("m", [*range(1, 31), 36, 60, 105, 210, 243])
    def test_matches_sympy(self, m: int) -> None:
        """Same coefficients and degree phi(m)."""
        expected = tuple(int(c) for c in reversed(cyclotomic_poly(m, polys=True).all_coeffs()))
        assert cyclotomic_polynomial(m) == expected
        assert len(expected) - 1 == totient(m)
