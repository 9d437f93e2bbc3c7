import pytest
import json
from pathlib import Path
import pandas as pd

from src.data.output_generator import SCHEMA, OutputGenerator
from src.models.errors import PreconditionError
from src.models.lattice import DivisorClass, SurfaceModel
from src.search.enumerator import enumerate_low_genus
from src.search.verifier import verify_no_p4_embedding
from src.theory.cohomology import bounded_cohomology_case, cohomology_bounds
from src.theory.positivity import positivity_verdict
from src.theory.riemann_roch import genus_report


@pytest.fixture
def output_generator():
    """Create an OutputGenerator instance."""
    return OutputGenerator()


@pytest.fixture(scope="module")
def certificate():
    """An odd certificate with the smallest allowed box."""
    return verify_no_p4_embedding(SurfaceModel.odd(), 100)


def test_document_envelope(output_generator):
    """Test that every document carries the schema and kind."""
    doc = output_generator.document("cones", {"model": "even"})
    assert doc == {"schema": SCHEMA, "kind": "cones", "model": "even"}
    assert SCHEMA == "fq-divisors/1"


def test_classify_document(output_generator, even_model):
    """Test the classify document for K on the even model."""
    k = DivisorClass(2, 2)
    doc = output_generator.classify_document(
        even_model, k, positivity_verdict(even_model, k), genus_report(even_model, k),
        cohomology_bounds(even_model, k), bounded_cohomology_case(even_model, k))
    assert doc["kind"] == "classify"
    assert doc["class"] == {"x": 2, "y": 2, "label": "2H+2F"}
    assert doc["positivity"]["ample"] is True
    assert doc["genus"]["p_a"] == 9
    assert doc["genus"]["chi"] == 1
    assert doc["bounded_cohomology"]["case_tag"] == "ChiPositive"


def test_classify_document_without_case(output_generator, odd_model):
    """Test that a non-admissible class has no bounded cohomology entry."""
    d = DivisorClass(0, 1)
    doc = output_generator.classify_document(
        odd_model, d, positivity_verdict(odd_model, d), genus_report(odd_model, d),
        cohomology_bounds(odd_model, d), None, {"note": "x"})
    assert doc["bounded_cohomology"] is None
    assert doc["note"] == "x"


def test_to_json_is_canonical(output_generator):
    """Test sorted keys, indentation and trailing newline."""
    text = output_generator.to_json({"b": 1, "a": [1, 2]})
    assert text == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
    assert json.loads(text) == {"a": [1, 2], "b": 1}


def test_digest_is_stable(output_generator, certificate):
    """Test that equal documents share a SHA-256 digest and different ones do not."""
    doc = output_generator.certificate_document(certificate)
    assert output_generator.digest(doc) == output_generator.digest(json.loads(output_generator.to_json(doc)))
    assert len(output_generator.digest(doc)) == 64
    changed = {**doc, "conclusion": "inconclusive"}
    assert output_generator.digest(changed) != output_generator.digest(doc)


def test_render_text(output_generator):
    """Test the one-fact-per-line text rendering."""
    text = output_generator.render_text({"kind": "chi", "class": {"x": 1, "y": -1}, "lists": [], "value": 0})
    assert text.splitlines() == [
        'class.x: 1',
        'class.y: -1',
        'kind: "chi"',
        'lists: []',
        'value: 0',
    ]


def test_certificate_table(output_generator, certificate):
    """Test the certificate table rows."""
    df = output_generator.certificate_table(certificate)
    assert list(df["Section"].unique()) == ["finite region", "edge case", "exceptional"]
    assert (df["Section"] == "finite region").sum() == 14
    edges = df[df["Section"] == "edge case"]
    assert list(edges["Discriminant"]) == [281, 109, 1124]
    assert df.iloc[-1]["Residual"] == -60


def test_class_list_table(output_generator, even_model):
    """Test the class list table marks excluded classes."""
    df = output_generator.class_list_table(enumerate_low_genus(even_model, 4, simply_connected=True))
    assert set(df.columns) == {"Genus", "Class", "x", "y", "Excluded", "Annotations"}
    excluded = df[df["Excluded"]]
    assert sorted(excluded["Class"]) == ["F", "H", "H+F"]
    kept = df[~df["Excluded"]]
    assert all(kept["Annotations"] == "h0_at_most_1")


def test_class_list_table_empty(output_generator):
    """Test the empty table keeps its columns."""
    df = output_generator.class_list_table([])
    assert df.empty
    assert "Genus" in df.columns


def test_generate_csv(output_generator, certificate, tmp_path: Path):
    """Test writing the certificate table as CSV."""
    output_path = tmp_path / "certificate.csv"
    output_generator.generate_file(output_generator.certificate_table(certificate), output_path)
    assert output_path.exists()
    df = pd.read_csv(output_path)
    assert len(df) == 14 + 3 + 1


def test_generate_excel(output_generator, even_model, tmp_path: Path):
    """Test writing class lists as Excel."""
    output_path = tmp_path / "classes.xlsx"
    df = output_generator.class_list_table(enumerate_low_genus(even_model, 5))
    output_generator.generate_file(df, output_path)
    assert output_path.exists()
    assert len(pd.read_excel(output_path)) == len(df)


def test_unsupported_format(output_generator, tmp_path: Path):
    """Test that unknown table suffixes are rejected."""
    with pytest.raises(PreconditionError):
        output_generator.generate_file(pd.DataFrame(), tmp_path / "table.txt")
