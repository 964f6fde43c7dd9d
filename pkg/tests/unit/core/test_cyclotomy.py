"""Unit tests for fourth-order cyclotomy and the cyclotomic signed difference sets."""

import pytest

from signed_difference_sets.core.cyclotomy import (
    ONE_CLASS_AND_ZERO_NOTE,
    CyclotomicCase,
    QuarticParams,
    admissible_indices,
    cyclo_number_oracle,
    cyclo_number_table,
    cyclotomic_classes,
    cyclotomic_classify,
    cyclotomic_construct,
    cyclotomic_system,
    quartic_ds_test,
    quartic_params,
    schur_product,
    table_oracle_mismatches,
)
from signed_difference_sets.core.designs import SdsParams, verify_sds
from signed_difference_sets.core.finite_field import FiniteField, field_make
from signed_difference_sets.core.groupring import SignedSet
from signed_difference_sets.utils.errors import CyclotomyError, FieldError
from signed_difference_sets.utils.number_theory import prime_power


def _field(q: int) -> FiniteField:
    p, n = prime_power(q)  # type: ignore[misc]
    return field_make(p, n)


ORDERS_TO_200 = [q for q in range(5, 201, 4) if prime_power(q) is not None]


class TestCyclotomicSystem:
    """Tests for the classes C_0..C_3."""

    def test_gf13_classes(self, gf13: FiniteField) -> None:
        """w = 2 splits GF(13)* into four classes of three."""
        system = cyclotomic_system(gf13)
        assert system.f == 3
        assert system.classes == (
            frozenset({1, 3, 9}),
            frozenset({2, 5, 6}),
            frozenset({4, 10, 12}),
            frozenset({7, 8, 11}),
        )

    def test_class_of(self, gf13: FiniteField) -> None:
        """8 = 2^3 lies in C_3; zero lies in no class."""
        system = cyclotomic_system(gf13)
        assert system.class_of(8) == 3
        with pytest.raises(CyclotomyError):
            system.class_of(0)

    def test_union(self, gf13: FiniteField) -> None:
        """C_0 + C_2 are the squares."""
        assert cyclotomic_system(gf13).union(0, 2) == frozenset({1, 3, 4, 9, 10, 12})

    def test_classes_partition(self) -> None:
        """Classes are disjoint, of size f, and cover F*."""
        for q in (5, 9, 25, 29, 81):
            system = cyclotomic_system(_field(q))
            assert sum(len(c) for c in system.classes) == q - 1
            assert frozenset().union(*system.classes) == system.nonzero
            assert {len(c) for c in system.classes} == {system.f}

    def test_general_order(self, gf13: FiniteField) -> None:
        """Order-2 classes are the squares and the non-squares."""
        squares, others = cyclotomic_classes(gf13, 2)
        assert squares == frozenset({1, 3, 4, 9, 10, 12})
        assert len(others) == 6
        with pytest.raises(CyclotomyError):
            cyclotomic_classes(gf13, 5)

    def test_needs_q_1_mod_4(self) -> None:
        """GF(7) and GF(27) have no order-4 cyclotomy."""
        with pytest.raises(CyclotomyError):
            cyclotomic_system(field_make(7))
        with pytest.raises(CyclotomyError):
            cyclotomic_system(field_make(3, 3))

    def test_non_primitive_w(self, gf13: FiniteField) -> None:
        """3 has order 3 in GF(13)."""
        with pytest.raises((CyclotomyError, FieldError)):
            cyclotomic_system(gf13, 3)

    def test_w_changes_class_labels(self, gf13: FiniteField) -> None:
        """w = 11 = 2^7 swaps C_1 and C_3 but keeps C_0 and C_2."""
        base = cyclotomic_system(gf13)
        other = cyclotomic_system(gf13, 11)
        assert other.classes[0] == base.classes[0]
        assert other.classes[2] == base.classes[2]
        assert other.classes[1] == base.classes[3]


class TestCyclotomicNumbers:
    """Tests for the direct count and the closed form."""

    def test_oracle_gf13(self, gf13: FiniteField) -> None:
        """C_0 + 1 = {2, 4, 10} meets C_1 once and C_2 twice."""
        system = cyclotomic_system(gf13)
        assert [cyclo_number_oracle(system, 0, j) for j in range(4)] == [0, 1, 2, 0]
        assert cyclo_number_oracle(system, 4, 6) == cyclo_number_oracle(system, 0, 2)

    def test_oracle_gf17(self, gf17: FiniteField) -> None:
        """(0, 1) = 2 and (0, 0) = 0 in GF(17)."""
        system = cyclotomic_system(gf17)
        assert cyclo_number_oracle(system, 0, 1) == 2
        assert cyclo_number_oracle(system, 0, 0) == 0

    def test_row_sums(self) -> None:
        """Row i sums to f, less one when -1 lies in C_0 (f even)."""
        for q in (13, 17, 29, 37, 41):
            system = cyclotomic_system(_field(q))
            total = int(system.cyclotomic_numbers[0].sum())
            assert total == system.f - (1 if system.f % 2 == 0 else 0)

    def test_quartic_params(self, gf13: FiniteField, gf17: FiniteField) -> None:
        """(s, t) for several q; p = 3 mod 4 gives t = 0."""
        assert quartic_params(cyclotomic_system(gf13)) == QuarticParams(-3, -2)
        assert quartic_params(cyclotomic_system(gf17)) == QuarticParams(1, 4)
        assert quartic_params(cyclotomic_system(field_make(3, 2))) == QuarticParams(-3, 0)
        assert quartic_params(cyclotomic_system(field_make(3, 4))) == QuarticParams(9, 0)
        assert quartic_params(cyclotomic_system(field_make(5, 2))).s == -3
        assert quartic_params(cyclotomic_system(field_make(5, 3))).s == -11

    def test_params_satisfy_norm_equation(self) -> None:
        """q = s^2 + t^2 with s = 1 mod 4."""
        for q in ORDERS_TO_200:
            params = quartic_params(cyclotomic_system(_field(q)))
            assert params.s**2 + params.t**2 == q
            assert params.s % 4 == 1

    def test_table_values(self) -> None:
        """(0, 2) = 2 at q = 13 and (0, 1) = 2 at q = 17."""
        assert cyclo_number_table(QuarticParams(-3, -2), 13, 0, 2) == 2
        assert cyclo_number_table(QuarticParams(-3, -2), 13, 0, 0) == 0
        assert cyclo_number_table(QuarticParams(1, 4), 17, 0, 1) == 2

    def test_table_rejects_bad_inputs(self) -> None:
        """q = 3 mod 4 and non-integral entries are refused."""
        with pytest.raises(CyclotomyError):
            cyclo_number_table(QuarticParams(1, 0), 7, 0, 0)
        with pytest.raises(CyclotomyError):
            cyclo_number_table(QuarticParams(1, 2), 13, 0, 0)

    def test_table_agrees_with_count_to_200(self) -> None:
        """The closed form matches the direct count at every q <= 200."""
        for q in ORDERS_TO_200:
            assert table_oracle_mismatches(cyclotomic_system(_field(q))) == [], q

    def test_table_agrees_for_inverse_w(self, gf13: FiniteField) -> None:
        """Replacing w by w^-1 flips t and keeps the table consistent."""
        base = cyclotomic_system(gf13)
        inverse = cyclotomic_system(gf13, gf13.inv(gf13.w))
        assert quartic_params(inverse) == quartic_params(base).negated()
        assert table_oracle_mismatches(inverse) == []


class TestSchurProducts:
    """Tests for products of classes."""

    def test_mass(self) -> None:
        """Coefficients account for all f^2 products."""
        for q in (13, 17, 25):
            system = cyclotomic_system(_field(q))
            for i in range(4):
                for j in range(4):
                    product = schur_product(system, i, j)
                    assert sum(product.class_coeffs) * system.f + product.zero_coeff == system.f**2

    def test_zero_coefficient(self, gf13: FiniteField) -> None:
        """-1 lies in C_2 for q = 13, so C_0 C_2 hits 0 three times."""
        system = cyclotomic_system(gf13)
        assert schur_product(system, 0, 2).zero_coeff == 3
        assert schur_product(system, 0, 0).zero_coeff == 0


class TestQuarticDifferenceSets:
    """Tests for C_0 and C_0 + 0 as difference sets."""

    def test_q5(self) -> None:
        """C_0 = {1} is a trivial (5, 1, 0) difference set."""
        report = quartic_ds_test(cyclotomic_system(field_make(5)))
        assert report.c0_verified
        assert report.c0_params == SdsParams(5, 1, 0)
        assert not report.c0_zero_verified

    def test_q13(self, gf13: FiniteField) -> None:
        """C_0 + 0 is the (13, 4, 1) planar difference set."""
        report = quartic_ds_test(cyclotomic_system(gf13))
        assert report.c0_zero_verified
        assert report.c0_zero_params == SdsParams(13, 4, 1)
        assert not report.c0_verified

    def test_q37(self) -> None:
        """C_0 is a (37, 9, 2) difference set."""
        report = quartic_ds_test(cyclotomic_system(field_make(37)))
        assert report.c0_params == SdsParams(37, 9, 2)

    def test_q17(self, gf17: FiniteField) -> None:
        """Neither holds at 17."""
        report = quartic_ds_test(cyclotomic_system(gf17))
        assert not report.c0_verified
        assert not report.c0_zero_verified
        assert report.agrees


class TestCyclotomicConstruct:
    """Tests for building case candidates."""

    def test_three_class_case(self, gf13: FiniteField, w13_9: SignedSet) -> None:
        """Case 4 at i = 0, j = 2 is the (13, 9, 0) SDS."""
        candidate = cyclotomic_construct(cyclotomic_system(gf13), "4", 0, 2)
        assert candidate.signed_set == w13_9
        assert candidate.predicted == SdsParams(13, 9, 0)
        assert candidate.condition
        assert verify_sds(candidate.signed_set) == candidate.predicted

    def test_two_class_case(self, gf13: FiniteField, paley13: SignedSet) -> None:
        """Case 2b at i = 0, j = 2 is the quadratic residue SDS."""
        candidate = cyclotomic_construct(cyclotomic_system(gf13), CyclotomicCase.NONZERO_TWO_CLASSES, 0, 2)
        assert candidate.signed_set == paley13
        assert candidate.predicted == SdsParams(13, 12, -1)

    def test_never_exists(self, gf13: FiniteField) -> None:
        """Case 6a carries the lambda = -1/2 reason."""
        candidate = cyclotomic_construct(cyclotomic_system(gf13), "6a", 0, 1)
        assert not candidate.condition
        assert candidate.predicted is None
        assert candidate.reason == "never exists: lambda=-1/2"
        assert cyclotomic_construct(cyclotomic_system(gf13), "1c", 0, 1).reason.startswith("never exists")

    def test_condition_fails(self, gf13: FiniteField) -> None:
        """Case 4 with i - j = 1 fails at q = 13."""
        candidate = cyclotomic_construct(cyclotomic_system(gf13), "4", 1, 0)
        assert not candidate.condition
        assert candidate.reason == "condition fails"

    def test_unknown_case(self, gf13: FiniteField) -> None:
        """Case 7 does not exist."""
        with pytest.raises(CyclotomyError, match="unknown"):
            cyclotomic_construct(cyclotomic_system(gf13), "7")

    def test_bad_indices(self, gf13: FiniteField) -> None:
        """Indices must be in range and distinct where two are needed."""
        system = cyclotomic_system(gf13)
        with pytest.raises(CyclotomyError):
            cyclotomic_construct(system, "4", 0, 0)
        with pytest.raises(CyclotomyError):
            cyclotomic_construct(system, "1b", 5)
        with pytest.raises(CyclotomyError):
            cyclotomic_construct(system, "1b")

    def test_admissible_indices(self) -> None:
        """Counts per index convention."""
        assert admissible_indices(CyclotomicCase.WHOLE_MINUS_ZERO) == [(None, None)]
        assert len(admissible_indices(CyclotomicCase.WHOLE_ONE_CLASS)) == 4
        assert len(admissible_indices(CyclotomicCase.NONZERO_TWO_CLASSES)) == 6
        assert len(admissible_indices(CyclotomicCase.THREE_CLASSES)) == 12


class TestCyclotomicClassify:
    """Tests for the full classification at one q."""

    @staticmethod
    def _existing(report) -> set[str]:
        return {family.case.value for family in report.families if family.exists}

    def test_q13(self, gf13: FiniteField) -> None:
        """1a, 1b, 2b and 4 exist at 13, with the expected parameters."""
        report = cyclotomic_classify(gf13)
        assert report.consistent
        assert (report.s, report.t) == (-3, -2)
        assert self._existing(report) == {"1a", "1b", "2b", "4"}
        actual = {(row.case.value, row.actual) for row in report.existing()}
        assert ("1b", SdsParams(13, 13, 1)) in actual
        assert ("2b", SdsParams(13, 12, -1)) in actual
        assert ("4", SdsParams(13, 9, 0)) in actual
        four = [row for row in report.existing() if row.case is CyclotomicCase.THREE_CLASSES]
        assert len(four) == 8
        assert {row.root for row in four} == {3}

    def test_q5(self) -> None:
        """(5, 5, 1) from case 1d; case 3b exists."""
        report = cyclotomic_classify(field_make(5))
        assert report.consistent
        existing = self._existing(report)
        assert {"1d", "3b"} <= existing
        assert ("1d", SdsParams(5, 5, 1)) in {(row.case.value, row.actual) for row in report.existing()}

    def test_q29(self) -> None:
        """Case 5 gives (29, 8, 1) and records the k discrepancy."""
        report = cyclotomic_classify(field_make(29))
        assert report.consistent
        rows = [row for row in report.existing() if row.case is CyclotomicCase.ONE_CLASS_AND_ZERO]
        assert rows
        assert all(row.actual == SdsParams(29, 8, 1) for row in rows)
        assert all(row.note == ONE_CLASS_AND_ZERO_NOTE for row in rows)

    def test_q37(self) -> None:
        """Case 1d gives (37, 37, 9)."""
        report = cyclotomic_classify(field_make(37))
        assert ("1d", SdsParams(37, 37, 9)) in {(row.case.value, row.actual) for row in report.existing()}

    def test_q53(self) -> None:
        """Case 3c gives (53, 40, 27)."""
        report = cyclotomic_classify(field_make(53))
        assert report.consistent
        assert ("3c", SdsParams(53, 40, 27)) in {(row.case.value, row.actual) for row in report.existing()}

    def test_q9_two_classes_everywhere(self) -> None:
        """p = 3 mod 4 makes every pair in case 2b an SDS."""
        report = cyclotomic_classify(field_make(3, 2))
        rows = [row for row in report.rows if row.case is CyclotomicCase.NONZERO_TWO_CLASSES]
        assert len(rows) == 6
        assert all(row.verified and row.actual == SdsParams(9, 8, -1) for row in rows)

    def test_never_cases_absent(self, gf13: FiniteField) -> None:
        """1c, 2a, 6a and 6b never verify."""
        report = cyclotomic_classify(gf13)
        assert not self._existing(report) & {"1c", "2a", "6a", "6b"}

    @pytest.mark.slow
    def test_existence_independent_of_w(self) -> None:
        """Which families exist does not depend on the primitive element."""
        for q in [q for q in ORDERS_TO_200 if q <= 100]:
            F = _field(q)
            baseline = self._existing(cyclotomic_classify(F))
            for w in F.primitive_elements():
                report = cyclotomic_classify(F, w)
                assert report.consistent, (q, w.coords)
                assert self._existing(report) == baseline, (q, w.coords)
