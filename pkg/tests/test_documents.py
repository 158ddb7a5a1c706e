import json

import pytest

import finlink as fl
from finlink.documents import Document, dumps, loads
from finlink.errors import ParseError, ResolveError

from conftest import CORPUS


def test_groupoid_document_round_trip(z2):
    doc = loads(dumps(z2, metadata={"name": "test"}))
    assert doc.kind == "groupoid"
    assert doc.payload == z2
    assert doc.metadata == {"name": "test"}
    assert dumps(doc) == dumps(Document("groupoid", z2, {"name": "test"}))


def test_link_document_round_trip(pair2):
    link = fl.to_link(pair2)
    doc = loads(dumps(link))
    assert doc.payload == link


def test_magma_document_round_trip(z2z2_system):
    doc = loads(dumps(z2z2_system))
    assert doc.payload == z2z2_system


def test_serialization_is_deterministic(s3):
    assert dumps(s3) == dumps(s3)


def test_minimal_discrete_document_parses():
    text = dumps(fl.discrete(["a"]))
    doc = loads(text)
    assert fl.validate(doc.payload).ok


def test_malformed_json_reports_position():
    with pytest.raises(ParseError) as err:
        loads("{not json")
    assert "line 1" in str(err.value)


def test_unknown_kind_rejected():
    with pytest.raises(ParseError):
        loads(json.dumps({"kind": "mystery", "sets": {}}))


def test_omitted_table_entry_is_parse_error(z2):
    raw = json.loads(dumps(z2))
    del raw["maps"]["d"]["table"]["1"]
    with pytest.raises(ParseError) as err:
        loads(json.dumps(raw))
    assert "omits" in str(err.value)


def test_dangling_set_reference_is_resolve_error(z2):
    raw = json.loads(dumps(z2))
    raw["maps"]["d"]["cod"] = "c9"
    with pytest.raises(ResolveError):
        loads(json.dumps(raw))


def test_unknown_image_is_resolve_error(z2):
    raw = json.loads(dumps(z2))
    raw["maps"]["d"]["table"]["1"] = "ghost"
    with pytest.raises(ResolveError):
        loads(json.dumps(raw))


def test_duplicate_labels_rejected(z2):
    raw = json.loads(dumps(z2))
    raw["sets"]["c1"] = ["0", "0"]
    with pytest.raises(ParseError):
        loads(json.dumps(raw))


def test_link_of_groupoid_survives_file_round_trip(z3):
    link = fl.to_link(z3)
    doc = loads(dumps(link))
    assert doc.payload == link
    assert fl.check_unital(doc.payload).ok


def test_magma_nested_table_omission_detected(z2z2_system):
    raw = json.loads(dumps(z2z2_system))
    del raw["f"]["0"]["0"]["1"]
    with pytest.raises(ParseError):
        loads(json.dumps(raw))


def test_corpus_files_parse_and_match_kind():
    kinds = {
        "z2.groupoid.json": "groupoid",
        "z2.link.json": "link",
        "z2z2.magma.json": "magma-system",
        "steiner3.magma.json": "magma-system",
    }
    for name, kind in kinds.items():
        doc = loads((CORPUS / name).read_text())
        assert doc.kind == kind
