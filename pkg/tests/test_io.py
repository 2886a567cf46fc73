"""CSV parsing and the barcode/report JSON formats."""

import json
import math

import pytest

from sumrips import Bar, Barcode, GradedBarcode, compare_product, hamming_cube
from sumrips.io import (
    FormatError,
    barcode_document,
    dumps_document,
    parse_barcode_document,
    read_barcode_json,
    read_barcode_json_with_field,
    read_metric_csv,
    report_document,
    write_barcode_json,
    write_complex_dump,
)
from sumrips.kunneth import DimensionComparison
from sumrips.metric import ValidationError

INF = math.inf


# ------------------------------------------------------------------------ CSV

def test_read_csv_plain(tmp_path):
    path = tmp_path / "m.csv"
    path.write_text("0,1\n1,0\n")
    space = read_metric_csv(path)
    assert len(space) == 2 and space.labels == ("0", "1")
    assert space.distance(0, 1) == 1.0


def test_read_csv_with_header_and_whitespace(tmp_path):
    path = tmp_path / "m.csv"
    path.write_text("a, b, c\n0, 3, 4\n\n3, 0, 5\n4, 5, 0\n")
    space = read_metric_csv(path)
    assert space.labels == ("a", "b", "c")
    assert space.distance(1, 2) == 5.0


def test_read_csv_reports_line_and_column(tmp_path):
    path = tmp_path / "m.csv"
    path.write_text("a,b\n0,oops\n1,0\n")
    with pytest.raises(FormatError, match="line 2, column 2.*'oops'"):
        read_metric_csv(path)


def test_read_csv_shape_errors(tmp_path):
    path = tmp_path / "m.csv"
    path.write_text("0,1\n")
    with pytest.raises(FormatError, match="expected 2 data rows"):
        read_metric_csv(path)
    path.write_text("0,1\n1,0,3\n")
    with pytest.raises(FormatError, match="line 2 has 3 values"):
        read_metric_csv(path)
    path.write_text("")
    with pytest.raises(FormatError, match="no data"):
        read_metric_csv(path)


def test_read_csv_applies_metric_validation(tmp_path):
    path = tmp_path / "m.csv"
    path.write_text("0,1\n2,0\n")
    with pytest.raises(ValidationError, match="not symmetric"):
        read_metric_csv(path)


# -------------------------------------------------------------- barcode JSON

def _sample_code():
    return GradedBarcode({0: Barcode([Bar(0, 1), Bar(0, INF)]), 1: Barcode()})


def test_barcode_document_structure():
    doc = barcode_document(_sample_code(), field=2)
    assert doc["format"] == "sumrips-barcode"
    assert doc["field"] == 2
    assert doc["convention"] == "half-open"
    assert list(doc["dims"]) == ["0", "1"]
    assert doc["dims"]["0"] == [[0.0, 1.0], [0.0, "inf"]]
    assert doc["dims"]["1"] == []


def test_barcode_roundtrip(tmp_path):
    path = tmp_path / "code.json"
    code = _sample_code()
    write_barcode_json(code, path, field=3)
    back, field = read_barcode_json_with_field(path)
    assert back == code and field == 3
    assert back.dims() == code.dims()  # explicit empty dim survives
    assert read_barcode_json(path) == code


def test_serialization_is_canonical():
    # same multiset, different construction order: identical bytes
    a = GradedBarcode({1: Barcode([Bar(1, 2)]), 0: Barcode([Bar(0, INF), Bar(0, 1)])})
    b = GradedBarcode({0: Barcode([Bar(0, 1), Bar(0, INF)]), 1: Barcode([Bar(1, 2)])})
    assert dumps_document(barcode_document(a, 2)) == dumps_document(barcode_document(b, 2))
    text = dumps_document(barcode_document(a, 2))
    assert '"inf"' in text and text.endswith("\n")
    assert "Infinity" not in text


def test_parse_rejects_malformed_documents(tmp_path):
    good = barcode_document(_sample_code(), field=2)

    def reject(mutate, match):
        doc = json.loads(json.dumps(good))
        mutate(doc)
        with pytest.raises(FormatError, match=match):
            parse_barcode_document(doc)

    reject(lambda d: d.update(format="other"), "format")
    reject(lambda d: d.update(convention="closed"), "convention")
    reject(lambda d: d.update(field="two"), "field")
    reject(lambda d: d.update(field=True), "field")
    reject(lambda d: d.update(field=1), "field")
    reject(lambda d: d.pop("dims"), "dims")
    reject(lambda d: d.update(dims=[]), "dims")
    reject(lambda d: d["dims"].update({"-1": []}), "dimension key")
    reject(lambda d: d["dims"].update({"x": []}), "dimension key")
    reject(lambda d: d["dims"].update({"2": [[0.0]]}), r"\[birth, death\]")
    reject(lambda d: d["dims"].update({"2": [[0.0, "infinity"]]}), "endpoint")
    reject(lambda d: d["dims"].update({"2": [[2.0, 1.0]]}), "birth < death")
    reject(lambda d: d["dims"].update({"2": [[1.0, 1.0]]}), "birth < death")
    with pytest.raises(FormatError, match="JSON object"):
        parse_barcode_document([1, 2])

    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(FormatError, match="invalid JSON"):
        read_barcode_json(path)


# ------------------------------------------------------------------- reports

def test_report_document_structure():
    report = compare_product(hamming_cube(1), hamming_cube(2), 3)
    doc = report_document(report)
    assert doc["ok"] is True
    assert doc["diameter_bound"] == 1.0
    assert [d["verdict"] for d in doc["dims"]] == ["equal", "equal", "dominated", "violated"]
    assert doc["dims"][2]["predicted"] == [[2.0, 3.0]]
    assert doc["dims"][2]["bottleneck"] == 0.5
    dumps_document(doc)  # must be valid strict JSON


def test_report_document_stringifies_infinite_bottleneck():
    entry = DimensionComparison(
        n=0, predicted=Barcode([Bar(0, INF)]), actual=Barcode(),
        verdict="violated", asserted=True, verdict_ok=False,
        bottleneck=INF, diameter_bound=1.0)
    from sumrips.kunneth import ComparisonReport
    doc = report_document(ComparisonReport(field=2, diameter_bound=1.0, dims=(entry,)))
    assert doc["dims"][0]["bottleneck"] == "inf"
    assert doc["ok"] is False
    dumps_document(doc)


def test_write_complex_dump(tmp_path):
    from sumrips import vietoris_rips
    cx = vietoris_rips(hamming_cube(1), 1)
    path = tmp_path / "complex.txt"
    write_complex_dump(cx, path)
    assert path.read_text() == "0 0 0.0 - 0\n1 0 0.0 - 1\n2 1 1.0 0:-1,1:1 0,1\n"
