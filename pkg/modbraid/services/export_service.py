"""
Export Service - Writes verification reports and computation results as JSON, and
verification reports as a PDF summary table.
"""

import json
import logging
from typing import Any, Dict, Tuple

from reportlab.lib import colors
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import inch
from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

from modbraid.i18n.translations import TranslationService

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

FONT_NORMAL, FONT_BOLD = "Helvetica", "Helvetica-Bold"

# failing cases listed in the PDF before truncating
PDF_CASE_ROWS = 200


def _payload(result: Any) -> Dict:
    data = result.to_json() if hasattr(result, "to_json") else dict(result)
    return {"schema": SCHEMA_VERSION, **data}


class ExportService:
    """Handles report export; every method returns (success, message)."""

    @staticmethod
    def to_json_text(result: Any) -> str:
        """
        Deterministic JSON: sorted keys, two-space indent, trailing newline and a
        top-level "schema" field. Nothing time-dependent goes in.
        """
        return json.dumps(_payload(result), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    @staticmethod
    def value_text(value: Any) -> str:
        """A bare computed value as one line of sorted JSON."""
        return json.dumps(value, sort_keys=True) + "\n"

    @staticmethod
    def export_json(result: Any, output_path: str) -> Tuple[bool, str]:
        try:
            with open(output_path, "w", encoding="utf-8") as f:
                f.write(ExportService.to_json_text(result))
            logger.info(f"Wrote JSON report to {output_path}")
            return True, TranslationService.get("messages.json_success", "Report written to {path}",
                                                path=output_path)
        except (OSError, TypeError, ValueError) as e:
            logger.error(f"JSON export to {output_path} failed: {e}")
            return False, TranslationService.get("messages.json_error", "Error writing report: {error}",
                                                 error=str(e))

    @staticmethod
    def export_report_to_pdf(report, output_path: str) -> Tuple[bool, str]:
        """
        Summary page for a VerificationReport: header, counts, then the cases
        (failures first).
        """
        try:
            doc = SimpleDocTemplate(
                output_path,
                pagesize=A4,
                rightMargin=0.5 * inch,
                leftMargin=0.5 * inch,
                topMargin=0.75 * inch,
                bottomMargin=0.75 * inch,
            )

            styles = getSampleStyleSheet()
            normal_style = ParagraphStyle(
                "CustomNormal",
                parent=styles["Normal"],
                fontName=FONT_NORMAL,
                fontSize=10,
                textColor=colors.black,
            )
            title_style = ParagraphStyle(
                "CustomTitle",
                parent=styles["Heading1"],
                fontName=FONT_BOLD,
                fontSize=18,
                textColor=colors.HexColor("#2c3e50"),
                spaceAfter=12,
                alignment=1,
            )

            summary = report.summary
            title = TranslationService.get("report.title", "Verification report: {suite}", suite=report.suite)
            params = TranslationService.get("report.parameters", "n = {n}, t = {t}, version {version}",
                                            n=report.n, t=report.t if report.t is not None else "-",
                                            version=report.version)
            counts = TranslationService.get("report.summary", "{passed} of {total} cases passed",
                                            passed=summary["passed"], total=summary["total"])
            elements = [
                Paragraph(title, title_style),
                Paragraph(params, normal_style),
                Paragraph(counts, normal_style),
                Spacer(1, 0.3 * inch),
            ]

            if not report.cases:
                elements.append(Paragraph(TranslationService.get("report.no_cases", "No cases"), normal_style))
            else:
                headers = [
                    TranslationService.get("report.case", "Case"),
                    TranslationService.get("report.result", "Result"),
                ]
                ordered = sorted(report.cases, key=lambda case: case.passed)
                table_data = [headers]
                for case in ordered[:PDF_CASE_ROWS]:
                    verdict = (TranslationService.get("report.pass", "pass") if case.passed
                               else TranslationService.get("report.fail", "FAIL"))
                    table_data.append([case.id, verdict])

                table = Table(table_data, colWidths=[5.6 * inch, 1.2 * inch], repeatRows=1)
                table.setStyle(
                    TableStyle(
                        [
                            ("BACKGROUND", (0, 0), (-1, 0), colors.HexColor("#3498db")),
                            ("TEXTCOLOR", (0, 0), (-1, 0), colors.whitesmoke),
                            ("ALIGN", (1, 0), (1, -1), "CENTER"),
                            ("FONTNAME", (0, 0), (-1, 0), FONT_BOLD),
                            ("FONTSIZE", (0, 0), (-1, 0), 11),
                            ("BOTTOMPADDING", (0, 0), (-1, 0), 12),
                            ("FONTNAME", (0, 1), (-1, -1), FONT_NORMAL),
                            ("FONTSIZE", (0, 1), (-1, -1), 9),
                            ("GRID", (0, 0), (-1, -1), 0.6, colors.HexColor("#9aa0a6")),
                            ("ROWBACKGROUNDS", (0, 1), (-1, -1),
                             [colors.white, colors.HexColor("#f5f5f5")]),
                            ("VALIGN", (0, 0), (-1, -1), "MIDDLE"),
                        ]
                    )
                )
                elements.append(table)
                if len(ordered) > PDF_CASE_ROWS:
                    elements.append(Spacer(1, 0.2 * inch))
                    elements.append(Paragraph(
                        TranslationService.get("report.truncated", "{hidden} more cases omitted",
                                               hidden=len(ordered) - PDF_CASE_ROWS),
                        normal_style,
                    ))

            doc.build(elements)
            logger.info(f"Wrote PDF report to {output_path}")
            return True, TranslationService.get("messages.pdf_success", "PDF written to {path}", path=output_path)

        except Exception as e:
            logger.error(f"PDF export to {output_path} failed: {e}")
            return False, TranslationService.get("messages.pdf_error", "Error exporting PDF: {error}", error=str(e))
