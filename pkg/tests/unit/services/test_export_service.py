"""Unit tests for ExportService."""

import json

import pytest

from signed_difference_sets.config import OutputFormat
from signed_difference_sets.core.cyclotomy import ClassificationReport, CyclotomicCase, cyclotomic_classify
from signed_difference_sets.core.designs import feasible
from signed_difference_sets.core.finite_field import FiniteField
from signed_difference_sets.core.groupring import SignedSet, to_ring
from signed_difference_sets.core.sequences import sequence_from_sds, weighing_from_sds
from signed_difference_sets.services.export_service import ExportService
from signed_difference_sets.services.verification_service import VerificationService


@pytest.fixture
def report13(gf13: FiniteField) -> ClassificationReport:
    return cyclotomic_classify(gf13)


class TestClassificationExport:
    """Tests for classification renderings."""

    def test_row_record(self, report13: ClassificationReport) -> None:
        """One key=value line per candidate."""
        row = next(r for r in report13.rows if r.case is CyclotomicCase.THREE_CLASSES and (r.i, r.j) == (0, 2))
        assert ExportService.row_record(row) == (
            "q=13 case=4 i=0 j=2 predicted=(13,9,0) condition=yes verified=yes actual=(13,9,0) root=3 agree=yes"
        )

    def test_row_record_never(self, report13: ClassificationReport) -> None:
        """Never-existing cases print dashes."""
        row = next(r for r in report13.rows if r.case is CyclotomicCase.TWO_CLASSES)
        record = ExportService.row_record(row)
        assert "predicted=-" in record
        assert "verified=no" in record
        assert record.endswith("agree=yes")

    def test_records(self, report13: ClassificationReport) -> None:
        """Records format has one line per row."""
        text = ExportService.classification(report13, OutputFormat.RECORDS)
        assert len(text.splitlines()) == len(report13.rows)

    def test_text(self, report13: ClassificationReport) -> None:
        """Text lists the families and the existing rows."""
        text = ExportService.classification(report13, OutputFormat.TEXT)
        assert text.splitlines()[0] == "GF(13): s=-3 t=-2 w=[2]"
        assert "case 1b exists" in text
        assert "DISAGREEMENT" not in text

    def test_json(self, report13: ClassificationReport) -> None:
        """JSON carries the consistency flag and every row."""
        data = json.loads(ExportService.classification(report13, OutputFormat.JSON))
        assert data["consistent"] is True
        assert len(data["rows"]) == len(report13.rows)
        assert {f["case"] for f in data["families"] if f["exists"]} == {"1a", "1b", "2b", "4"}


class TestOtherExports:
    """Tests for verification, sequence, weighing and feasibility output."""

    def test_verification_records(self, paley13: SignedSet) -> None:
        """Records format for a strict SDS."""
        report = VerificationService.verify(to_ring(paley13))
        assert ExportService.verification(report, OutputFormat.RECORDS) == (
            "v=13 k=12 lambda=-1 strict=yes violations=0 feasible=yes root=0 characters=yes"
        )

    def test_verification_text(self, paley13: SignedSet) -> None:
        """Text starts with the summary line."""
        report = VerificationService.verify(to_ring(paley13))
        assert ExportService.verification(report).splitlines()[0] == "SDS (13,12,-1), strict, root 0"

    def test_verification_json(self, paley13: SignedSet) -> None:
        """JSON uses the key lambda."""
        report = VerificationService.verify(to_ring(paley13))
        data = json.loads(ExportService.verification(report, OutputFormat.JSON))
        assert data["params"] == {"v": 13, "k": 12, "lambda": -1}

    def test_sequence_with_acf(self, paley13: SignedSet) -> None:
        """Symbols line then 'tau value' lines."""
        lines = ExportService.sequence(sequence_from_sds(paley13), acf=True).splitlines()
        assert lines[0] == "0+-++----++-+"
        assert lines[1] == "0 12"
        assert lines[2] == "1 -1"
        assert len(lines) == 14

    def test_weighing(self, w13_9: SignedSet) -> None:
        """First-row format 'v k row'."""
        text = ExportService.weighing(weighing_from_sds(w13_9))
        assert text == "13 9 0 1 -1 1 0 -1 -1 -1 -1 1 0 -1 0"

    def test_weighing_dense(self, w13_9: SignedSet) -> None:
        """Dense output appends v rows."""
        assert len(ExportService.weighing(weighing_from_sds(w13_9), dense=True).splitlines()) == 14

    def test_feasibility(self) -> None:
        """Accept and reject lines."""
        assert ExportService.feasibility(13, 12, -1, feasible(13, 12, -1)).startswith("(13,12,-1): accept, root 0;")
        assert ExportService.feasibility(7, 6, 1, feasible(7, 6, 1)).startswith("(7,6,1): reject;")
