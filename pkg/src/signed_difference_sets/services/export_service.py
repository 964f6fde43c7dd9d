"""Export service: renders reports, sequences and weighing matrices as text, records or JSON."""

import json

from ..config import OutputFormat
from ..core.cyclotomy import ClassificationReport, ClassificationRow
from ..core.designs import Feasibility, SdsParams
from ..core.sequences import TernarySequence, WeighingMatrix, autocorrelations
from .verification_service import VerificationReport


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _index(i: int | None) -> str:
    return "-" if i is None else str(i)


def _params(params: SdsParams | None) -> str:
    return "-" if params is None else str(params)


class ExportService:
    """Line-oriented renderings; records are space-separated key=value pairs."""

    @staticmethod
    def row_record(row: ClassificationRow) -> str:
        fields = [
            f"q={row.q}",
            f"case={row.case.value}",
            f"i={_index(row.i)}",
            f"j={_index(row.j)}",
            f"predicted={_params(row.predicted)}",
            f"condition={_yes(row.condition)}",
            f"verified={_yes(row.verified)}",
            f"actual={_params(row.actual)}",
            f"root={'-' if row.root is None else row.root}",
            f"agree={_yes(row.agrees)}",
        ]
        return " ".join(fields)

    @staticmethod
    def classification(report: ClassificationReport, fmt: OutputFormat = OutputFormat.TEXT) -> str:
        """Render one q's classification."""
        if fmt is OutputFormat.RECORDS:
            lines = [ExportService.row_record(row) for row in report.rows]
            lines.extend(
                f"q={report.q} table-mismatch i={i} j={j} table={table} oracle={oracle}"
                for i, j, table, oracle in report.table_mismatches
            )
            return "\n".join(lines)
        if fmt is OutputFormat.JSON:
            return json.dumps(ExportService.classification_dict(report))

        lines = [f"GF({report.q}): s={report.s} t={report.t} w={list(report.w)}"]
        for family in report.families:
            verdict = "exists" if family.exists else "none"
            lines.append(
                f"  case {family.case.value:<2} {verdict:<6} predicted={_yes(family.predicted)} "
                f"some-primitive={_yes(family.predicted_some_primitive)}"
            )
        for row in report.existing():
            note = f" [{row.note}]" if row.note else ""
            lines.append(f"    {row.case.value} i={_index(row.i)} j={_index(row.j)} {row.actual} root {row.root}{note}")
        if report.quartic_ds is not None:
            ds = report.quartic_ds
            lines.append(f"  C_0 difference set: {_yes(ds.c0_verified)}; C_0+0 difference set: {_yes(ds.c0_zero_verified)}")
        for row in report.disagreements:
            lines.append(f"  DISAGREEMENT {ExportService.row_record(row)}")
        for i, j, table, oracle in report.table_mismatches:
            lines.append(f"  TABLE MISMATCH ({i},{j}): table={table} oracle={oracle}")
        return "\n".join(lines)

    @staticmethod
    def classification_dict(report: ClassificationReport) -> dict[str, object]:
        return {
            "q": report.q,
            "s": report.s,
            "t": report.t,
            "w": list(report.w),
            "consistent": report.consistent,
            "families": [
                {
                    "case": f.case.value,
                    "exists": f.exists,
                    "predicted": f.predicted,
                    "predicted_some_primitive": f.predicted_some_primitive,
                }
                for f in report.families
            ],
            "rows": [
                {
                    "case": r.case.value,
                    "i": r.i,
                    "j": r.j,
                    "predicted": str(r.predicted) if r.predicted else None,
                    "condition": r.condition,
                    "verified": r.verified,
                    "actual": str(r.actual) if r.actual else None,
                    "root": r.root,
                    "reason": r.reason,
                    "note": r.note or None,
                }
                for r in report.rows
            ],
            "table_mismatches": [list(m) for m in report.table_mismatches],
        }

    @staticmethod
    def verification(report: VerificationReport, fmt: OutputFormat = OutputFormat.TEXT) -> str:
        if fmt is OutputFormat.RECORDS:
            fields = [
                f"v={report.params.v}",
                f"k={report.params.k}",
                f"lambda={report.params.lam}",
                f"strict={_yes(report.strict)}",
                f"violations={report.violations}",
                f"feasible={_yes(report.feasibility.accepted)}",
                f"root={'-' if report.feasibility.root is None else report.feasibility.root}",
                f"characters={_yes(report.character_agrees)}",
            ]
            return " ".join(fields)
        if fmt is OutputFormat.JSON:
            return json.dumps(
                {
                    "params": {"v": report.params.v, "k": report.params.k, "lambda": report.params.lam},
                    "strict": report.strict,
                    "violations": report.violations,
                    "feasible": report.feasibility.accepted,
                    "root": report.feasibility.root,
                    "characters": report.character_agrees,
                    "declared_agrees": report.declared_agrees,
                }
            )
        lines = [report.summary(), f"feasibility: {report.feasibility.reason}"]
        lines.append(f"character check: {'agrees' if report.character_agrees else 'DISAGREES'}")
        if report.declared_agrees is False:
            lines.append("declared parameters differ from verified parameters")
        return "\n".join(lines)

    @staticmethod
    def sequence(S: TernarySequence, acf: bool = False) -> str:
        """Symbols on one line; with acf, one 'tau value' line per shift."""
        lines = [str(S)]
        if acf:
            lines.extend(f"{tau} {value}" for tau, value in enumerate(autocorrelations(S)))
        return "\n".join(lines)

    @staticmethod
    def weighing(W: WeighingMatrix, dense: bool = False) -> str:
        """First-row format 'v k row', optionally followed by the dense matrix."""
        lines = [f"{W.v} {W.k} {W.row_text()}"]
        if dense and W.matrix is not None:
            lines.extend(" ".join(f"{int(x):2d}" for x in row) for row in W.matrix)
        return "\n".join(lines)

    @staticmethod
    def feasibility(v: int, k: int, lam: int, certificate: Feasibility) -> str:
        verdict = "accept" if certificate.accepted else "reject"
        root = "" if certificate.root is None else f", root {certificate.root}"
        return f"({v},{k},{lam}): {verdict}{root}; {certificate.reason}"
