"""
export_service 的单元测试
"""

import csv
import io
import json
from functools import lru_cache

from app.models.enums import OutputFormat
from app.schemas.report import CheckRecord, VerificationReport
from app.schemas.table import TableDocument
from app.services import export_service
from app.services.charsum_service import make_convention, sums_report
from app.services.chartable_service import build_table
from app.services.class_service import class_representatives
from app.services.cyclo_service import from_payload
from app.services.field_service import field_for_order


@lru_cache(maxsize=None)
def _table(q: int):
    return build_table(field_for_order(q))


class TestTableJson:
    def test_document_shape(self):
        data = json.loads(export_service.table_to_json(_table(3)))
        assert data["meta"]["q"] == 3
        assert data["meta"]["conductor"] == 12
        assert data["meta"]["lambda"] == "zeta_p^Tr(z)"
        assert data["meta"]["delta"] == -1
        assert len(data["classes"]) == 24
        assert len(data["characters"]) == 24
        assert len(data["values"]) == 24
        assert all(len(row) == 24 for row in data["values"])
        assert data["approx"][0][0] == [1.0, 0.0]
        assert data["characters"][0]["label"] == "triv"
        assert data["classes"][0]["label"] == "A(0)"

    def test_byte_identical(self):
        assert export_service.table_to_json(_table(3)) == export_service.table_to_json(build_table(field_for_order(3)))

    def test_values_read_back(self):
        table = _table(5)
        document = TableDocument.model_validate_json(export_service.table_to_json(table))
        cyclo = table.convention.cyclo
        for row, payload_row in zip(table.values, document.values):
            for value, payload in zip(row, payload_row):
                assert from_payload(cyclo, payload) == value

    def test_extension_field_metadata(self):
        data = json.loads(export_service.table_to_json(_table(9)))
        assert data["meta"]["p"] == 3
        assert data["meta"]["f"] == 2
        assert len(data["meta"]["modulus"]) == 3
        assert len(data["classes"][0]["rep"]["z"]) == 2


class TestTableCsv:
    def test_layout(self):
        text = export_service.table_to_csv(_table(3))
        rows = list(csv.reader(io.StringIO(text)))
        assert len(rows) == 25
        assert rows[0][:3] == ["character", "A(0)", "A(1)"]
        assert rows[1][0] == "triv"
        assert set(rows[1][1:]) == {"1"}
        assert all(len(row) == 25 for row in rows)


class TestTableLatex:
    def test_three_parts(self):
        text = export_service.table_to_latex(_table(5))
        assert text.count("\\begin{tabular}") == 3
        assert text.count("\\end{tabular}") == 3
        assert "$\\mathcal{D}_{1}(0)$" in text
        assert "$\\mathcal{M}_{2}$" in text
        # 中心族只保留 z = 0 的列
        assert "$\\mathcal{C}(1)$" not in text
        assert "$\\mathcal{A}(4)$" in text

    def test_character_labels_are_escaped(self):
        text = export_service.table_to_latex(_table(3))
        assert "\\texttt{omega\\_psi[u=nu\\textasciicircum{}1]}" in text


class TestTableText:
    def test_contains_labels(self):
        text = export_service.table_to_text(_table(3))
        assert "triv" in text
        assert "omega[u=nu^1]" in text
        assert "\x1b[" not in text

    def test_dispatch(self):
        table = _table(3)
        assert export_service.render_table(table, OutputFormat.CSV) == export_service.table_to_csv(table)
        assert export_service.render_table(table, OutputFormat.TEXT) == export_service.table_to_text(table)


class TestClasses:
    def test_json(self):
        ctx = field_for_order(5)
        data = json.loads(export_service.render_classes(ctx, class_representatives(ctx), OutputFormat.JSON))
        assert len(data) == 50
        assert sum(c["size"] for c in data) == 15000
        assert data[5]["label"] == "B"
        assert data[5]["rep"]["w"] == [[1], [0]]

    def test_csv_and_latex(self):
        ctx = field_for_order(3)
        classes = class_representatives(ctx)
        rows = list(csv.reader(io.StringIO(export_service.render_classes(ctx, classes, OutputFormat.CSV))))
        assert rows[0] == ["family", "label", "size", "centralizer_order"]
        assert len(rows) == 25
        latex = export_service.render_classes(ctx, classes, OutputFormat.LATEX)
        assert "|G| = 648" in latex
        assert "$\\mathcal{B}$ & 24 & 27" in latex

    def test_text(self):
        ctx = field_for_order(3)
        text = export_service.render_classes(ctx, class_representatives(ctx), OutputFormat.TEXT)
        assert "L_1" in text
        assert "648" in text


class TestSumsAndReports:
    def test_sums(self):
        report = sums_report(make_convention(field_for_order(5)))
        data = json.loads(export_service.render_sums(report, OutputFormat.JSON))
        assert data["conductor"] == 60
        assert data["delta"] == 1
        assert "sqrt(delta q)" in export_service.render_sums(report, OutputFormat.TEXT)

    def test_reports(self):
        ok = VerificationReport(suite="gauss_sums", q=3)
        ok.record(CheckRecord(identifier="fine", passed=True))
        bad = VerificationReport(suite="degrees", q=3)
        bad.record(CheckRecord(identifier="sum of squared degrees", passed=False, expected="648", got="647"))
        text = export_service.render_reports([ok, bad], OutputFormat.TEXT)
        assert "PASS" in text
        assert "FAIL degrees: sum of squared degrees expected=648 got=647" in text
        data = json.loads(export_service.render_reports([ok, bad], OutputFormat.JSON))
        assert [r["passed"] for r in data] == [True, False]
