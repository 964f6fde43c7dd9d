"""Construction service: builds every SDS family and re-verifies it."""

import dataclasses
from collections.abc import Sequence
from dataclasses import dataclass

from ..config import Family, get_settings
from ..core.cyclotomy import CyclotomicCase, cyclotomic_construct, cyclotomic_system
from ..core.designs import SdsParams, character_criterion, paley_field_sds, sds_from_pds, verify_sds
from ..core.finite_field import FiniteField, field_make
from ..core.golay import golay_pds
from ..core.groupring import GroupRingElement, SignedSet, to_ring
from ..core.product3 import product3_construct, product3_spec, relaxed_example
from ..logging_config import StructuredLogger
from ..utils.errors import ConstructionError, InternalDefectError, VerificationError
from ..utils.number_theory import prime_power

logger = StructuredLogger("services.construction")


@dataclass(frozen=True)
class ConstructionResult:
    """A constructed element with its re-verified parameters."""

    family: Family
    element: GroupRingElement
    params: SdsParams
    field: FiniteField | None = None
    details: dict[str, object] = dataclasses.field(default_factory=dict)

    @property
    def strict(self) -> bool:
        return self.element.is_signed()

    @property
    def signed_set(self) -> SignedSet | None:
        return SignedSet.from_ring(self.element) if self.strict else None


class ConstructionService:
    """Dispatch to the construction families."""

    @staticmethod
    def _field(q: int, w: int | Sequence[int] | None = None) -> FiniteField:
        pn = prime_power(q)
        if pn is None:
            raise ConstructionError("q must be a prime power", {"q": q})
        return field_make(pn[0], pn[1], w=w)

    @staticmethod
    def _reverify(element: GroupRingElement, expected: SdsParams, strict: bool) -> SdsParams:
        try:
            actual = verify_sds(element, strict=strict)
        except VerificationError as e:
            raise InternalDefectError("constructed element failed re-verification", e.witness) from e
        if actual != expected:
            raise InternalDefectError("constructed element has unexpected parameters", {"expected": str(expected), "actual": str(actual)})
        return actual

    def paley(self, q: int, w: int | Sequence[int] | None = None) -> ConstructionResult:
        """(q, q-1, -1) from the squares of GF(q), q = 1 mod 4."""
        try:
            logger.info("Constructing Paley SDS", q=q)
            F = self._field(q, w)
            lifted = paley_field_sds(F)
            element = to_ring(lifted.signed_set)
            params = self._reverify(element, lifted.params, strict=True)
            if character_criterion(element) != params:
                raise InternalDefectError("character criterion disagrees with convolution", {"q": q})
            return ConstructionResult(Family.PALEY, element, params, F, {"pds": str(lifted.pds)})
        except Exception as e:
            logger.error("Paley construction failed", q=q, error=str(e))
            raise

    def golay(self) -> ConstructionResult:
        """(243, 242, 161) lifted from the Golay-code PDS in Z_3^5."""
        try:
            logger.info("Constructing Golay SDS")
            members, G = golay_pds()
            lifted = sds_from_pds(members, G)
            element = to_ring(lifted.signed_set)
            params = self._reverify(element, lifted.params, strict=True)
            return ConstructionResult(Family.GOLAY, element, params, None, {"pds": str(lifted.pds)})
        except Exception as e:
            logger.error("Golay construction failed", error=str(e))
            raise

    def product3(
        self,
        m: int = 2,
        x0: int = 1,
        x1: Sequence[int] | None = None,
        example: bool = False,
        allow_large: bool = False,
    ) -> ConstructionResult:
        """
        (3^(2m+1), 3^(2m)+1, 1) from the 3-group product construction.

        Args:
            m: Even m >= 2.
            x0: Nonzero element of Z_3.
            x1: Element of Z_3^m; zero by default, which keeps the result strict.
            example: Use the worked m = 2 example with x1 = (1, 0) instead.
            allow_large: Permit m above the convolution limit.

        Returns:
            The result; strict unless x1 lies in the support of D'.
        """
        try:
            spec = relaxed_example() if example else product3_spec(m, x0, tuple(x1) if x1 is not None else None)
            logger.info("Constructing product SDS", m=spec.m, x0=spec.x0, x1=spec.x1)
            element = product3_construct(spec, allow_large=allow_large)
            if spec.m <= get_settings().product3_convolution_max_m:
                params = self._reverify(element, spec.expected, strict=False)
            else:
                params = spec.expected
            details: dict[str, object] = {"m": spec.m, "x0": spec.x0, "x1": spec.x1, "violations": int(element.strictness_violations().size)}
            return ConstructionResult(Family.PRODUCT3, element, params, None, details)
        except Exception as e:
            logger.error("Product construction failed", m=m, error=str(e))
            raise

    def cyclotomic(
        self,
        q: int,
        case: CyclotomicCase | str,
        i: int | None = None,
        j: int | None = None,
        w: int | Sequence[int] | None = None,
    ) -> ConstructionResult:
        """
        A fourth-order cyclotomic SDS; refuses cases whose condition fails at q.

        Raises:
            ConstructionError: The case never exists or its condition fails.
        """
        log = logger.bind(q=q, case=case.value if isinstance(case, CyclotomicCase) else case)
        try:
            log.info("Constructing cyclotomic SDS", i=i, j=j)
            F = self._field(q, w)
            system = cyclotomic_system(F)
            candidate = cyclotomic_construct(system, case, i, j)
            if not candidate.condition or candidate.predicted is None:
                raise ConstructionError(
                    "no SDS of this case at q", {"q": q, "case": candidate.case.value, "i": i, "j": j, "reason": candidate.reason}
                )
            element = to_ring(candidate.signed_set)
            params = self._reverify(element, candidate.predicted, strict=True)
            details: dict[str, object] = {"case": candidate.case.value, "i": candidate.i, "j": candidate.j}
            return ConstructionResult(Family.CYCLOTOMIC, element, params, F, details)
        except Exception as e:
            log.error("Cyclotomic construction failed", error=str(e))
            raise
