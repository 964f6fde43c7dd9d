"""Verification service: convolution, feasibility and character cross-check of one element."""

from dataclasses import dataclass

from ..core.designs import Feasibility, SdsParams, character_criterion, feasible, verify_sds
from ..core.groupring import GroupRingElement
from ..logging_config import StructuredLogger
from ..utils.errors import VerificationError

logger = StructuredLogger("services.verification")


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of verifying a document's element."""

    params: SdsParams
    strict: bool
    violations: int
    feasibility: Feasibility
    character_agrees: bool
    declared_agrees: bool | None = None

    def summary(self) -> str:
        kind = "SDS" if self.strict else "relaxed SDS"
        text = f"{kind} {self.params}"
        if self.strict:
            text += ", strict"
        else:
            text += f"; strictness violated at {self.violations} elements"
        if self.feasibility.root is not None:
            text += f", root {self.feasibility.root}"
        return text


class VerificationService:
    """Verify integer group ring elements as signed difference sets."""

    @staticmethod
    def verify(element: GroupRingElement, declared: SdsParams | None = None) -> VerificationReport:
        """
        Verify an element in relaxed mode and report strictness separately.

        Args:
            element: The element to check.
            declared: Parameters claimed by the document, compared when given.

        Returns:
            The report; character_agrees records whether the character
            criterion reproduced the convolution parameters.

        Raises:
            VerificationError: The element is not an SDS (with witness).
        """
        try:
            params = verify_sds(element, strict=False)
        except VerificationError as e:
            logger.warning("Element is not an SDS", reason=e.message, **{k: str(v) for k, v in e.witness.items()})
            raise

        violations = int(element.strictness_violations().size)
        strict = violations == 0
        if strict:
            positive = int((element.coeffs == 1).sum())
            negative = int((element.coeffs == -1).sum())
            certificate = feasible(params.v, params.k, params.lam, (positive, negative))
        else:
            certificate = feasible(params.v, params.k, params.lam)

        try:
            character_agrees = character_criterion(element) == params
        except VerificationError as e:
            logger.error("Character criterion rejects a verified SDS", error=str(e))
            character_agrees = False

        report = VerificationReport(
            params,
            strict,
            violations,
            certificate,
            character_agrees,
            declared_agrees=None if declared is None else declared == params,
        )
        logger.info("Element verified", summary=report.summary(), characters=character_agrees)
        return report
