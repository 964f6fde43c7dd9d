"""Classification service: cyclotomic classification reports for one q or a scan of q values."""

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

from ..config import get_settings
from ..core.cyclotomy import ClassificationReport, cyclotomic_classify
from ..core.finite_field import field_make
from ..logging_config import StructuredLogger
from ..utils.errors import CyclotomyError
from ..utils.number_theory import prime_power

logger = StructuredLogger("services.classification")


def classification_orders(max_q: int, min_q: int = 5) -> list[int]:
    """Prime powers q = 1 mod 4 in [min_q, max_q], ascending."""
    return [q for q in range(max(min_q, 5), max_q + 1) if q % 4 == 1 and prime_power(q) is not None]


class ClassificationService:
    """Run the cyclotomic classifier, in parallel for scans."""

    def __init__(self, threads: int | None = None) -> None:
        """
        Initialize classification service.

        Args:
            threads: Worker threads for scans. Defaults to SDS_THREADS.
        """
        self.threads = threads or get_settings().threads

    def classify(self, q: int, w: int | Sequence[int] | None = None) -> ClassificationReport:
        """Classification report for GF(q)."""
        log = logger.bind(q=q)
        pn = prime_power(q)
        if pn is None or q % 4 != 1:
            raise CyclotomyError("q must be a prime power = 1 mod 4", {"q": q})
        F = field_make(pn[0], pn[1], w=w)
        report = cyclotomic_classify(F)
        log.debug("Field classified", w=report.w, rows=len(report.rows), consistent=report.consistent)
        return report

    def scan(self, max_q: int, min_q: int = 5) -> list[ClassificationReport]:
        """
        Classify every admissible q up to max_q.

        Returns:
            Reports in ascending q regardless of completion order.
        """
        orders = classification_orders(max_q, min_q)
        logger.info("Starting classification scan", max_q=max_q, orders=len(orders), threads=self.threads)
        try:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                reports = list(pool.map(self.classify, orders))
        except Exception as e:
            logger.error("Classification scan failed", max_q=max_q, error=str(e))
            raise
        inconsistent = [r.q for r in reports if not r.consistent]
        logger.info("Classification scan complete", orders=len(reports), inconsistent=inconsistent)
        return reports
