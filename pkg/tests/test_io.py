import json

import numpy as np
import pytest
from hypothesis import given

from conftest import FIXTURE_DIR, lsas, mat, seeds
from lsab.bialgebra import BialgebraPair
from lsab.fixtures import A2, D_DUAL, DUAL_NUMBERS, E1, HEIS3, HEIS4, HESS2, LIE_AFF, LSA_FIXTURES, N2, NOT_LS2, OMEGA_AFF, OMEGA_HEIS4
from lsab.io import (
    DocObject,
    ParseError,
    algebra_object,
    document_of,
    emit_document,
    form_object,
    parse_document,
    read_document,
    tensor_object,
)
from lsab.randgen import make_rng, tensor2

NAMED = LSA_FIXTURES + (HESS2, NOT_LS2, DUAL_NUMBERS, LIE_AFF, HEIS3, HEIS4)


def doc_text(*objs, version=1):
    return json.dumps({"version": version, "objects": list(objs)}, indent=1)


def alg(name="A", dim=1, entries=(), kind="left-symmetric"):
    return {"name": name, "type": "algebra", "dim": dim, "kind": kind, "entries": list(entries)}


def entry(i, j, k, c):
    return {"i": i, "j": j, "k": k, "c": c}


@pytest.mark.parametrize("path", sorted(FIXTURE_DIR.glob("*.lsab")), ids=lambda p: p.name)
def test_fixture_files_round_trip(path):
    doc = read_document(path, lenient=True)
    again = parse_document(emit_document(doc))
    assert again == doc
    assert emit_document(again) == emit_document(doc)


@pytest.mark.parametrize("A", NAMED, ids=lambda A: A.name)
def test_named_algebras_round_trip(A):
    doc = document_of(algebra_object(A))
    back = parse_document(emit_document(doc)).get(A.name, "algebra")
    assert np.array_equal(back.c, A.c) and back.kind == A.kind


def test_tensors_and_forms_round_trip():
    objs = [form_object("wA", OMEGA_AFF), form_object("wH", OMEGA_HEIS4), tensor_object("D", D_DUAL), tensor_object("r", mat([["-1/3", 0], [2, "7/5"]]))]
    doc = document_of(*objs)
    again = parse_document(emit_document(doc))
    assert again == doc
    assert np.array_equal(again.get("r", "tensor2"), mat([["-1/3", 0], [2, "7/5"]]))


def test_reference_types_round_trip():
    text = doc_text(
        alg("A2", 2, [entry(0, 1, 1, "1")]),
        alg("N2", 2, [entry(0, 1, 0, "1"), entry(1, 1, 1, "1")], "novikov"),
        {"name": "P", "type": "pair", "algebra": "A2", "dual": "N2"},
        {"name": "rho", "type": "rep", "algebra": "A2", "dim": 2, "entries": [entry(0, 1, 1, "1")]},
        {"name": "bm", "type": "bimodule", "algebra": "A2", "dim": 1, "left": [], "right": []},
        {"name": "T", "type": "ooperator", "algebra": "A2", "rep": "rho", "entries": [{"i": 0, "j": 0, "c": "1"}, {"i": 1, "j": 1, "c": "1"}]},
    )
    doc = parse_document(text)
    p = doc.get("P", "pair")
    assert isinstance(p, BialgebraPair) and np.array_equal(p.A.c, A2.c) and np.array_equal(p.Adual.c, N2.c)
    assert doc.names("algebra") == ["A2", "N2"]
    assert parse_document(emit_document(doc)) == doc


def test_fixture_values():
    e1 = read_document(FIXTURE_DIR / "e1.lsab")
    assert np.array_equal(e1.get("E1", "algebra").c, E1.c)
    assert np.array_equal(e1.get("rEE", "tensor2"), mat([[1]]))
    a2 = read_document(FIXTURE_DIR / "a2.lsab")
    assert np.array_equal(a2.get("A2", "algebra").c, A2.c)
    with pytest.raises(KeyError):
        e1.get("rEE", "form")
    with pytest.raises(KeyError):
        e1.get("missing")


def test_unreduced_rational_is_rejected_with_position():
    with pytest.raises(ParseError) as exc:
        read_document(FIXTURE_DIR / "e1_corrupt.lsab")
    assert exc.value.line == 5 and exc.value.column > 0
    assert exc.value.field == "c"


def test_lenient_mode_normalizes():
    doc = read_document(FIXTURE_DIR / "e1_corrupt.lsab", lenient=True)
    assert np.array_equal(doc.get("E1", "algebra").c, E1.c)
    doc = parse_document(doc_text(alg("A", 1, [entry(0, 0, 0, 3)])), lenient=True)
    assert doc.get("A").c[0, 0, 0] == 3


@pytest.mark.parametrize(
    "text",
    [
        "{",  # syntax
        doc_text(alg(), version=2),
        doc_text(alg(), alg()),  # duplicate names
        doc_text({"name": "x", "type": "matrix"}),  # unknown type
        doc_text({"name": "P", "type": "pair", "algebra": "A", "dual": "B"}, alg("A")),  # missing ref
        doc_text({"name": "P", "type": "pair", "algebra": "r", "dual": "r"}, {"name": "r", "type": "tensor2", "dims": [1, 1], "entries": []}),
        doc_text(alg("A", 1, [entry(0, 1, 0, "1")])),  # index out of range
        doc_text(alg("A", 1, [entry(0, 0, 0, "x")])),
        doc_text(alg("A", 1, [entry(0, 0, 0, 1)])),  # bare integer outside lenient mode
        doc_text(alg("A", 1, kind="weird")),
        doc_text({"type": "algebra", "dim": 1, "entries": []}),  # no name
        doc_text(alg("A", "2")),
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError) as exc:
        parse_document(text)
    assert str(exc.value)


def test_parse_error_reports_line_of_object():
    text = doc_text(alg("A"), {"name": "x", "type": "matrix"})
    with pytest.raises(ParseError) as exc:
        parse_document(text)
    lines = text.splitlines()
    assert '"matrix"' in "\n".join(lines[exc.value.line - 1 : exc.value.line + 3])


def test_doc_object_equality():
    a = DocObject("r", "tensor2", mat([[1]]))
    assert a == DocObject("r", "tensor2", mat([[1]]))
    assert a != DocObject("r", "tensor2", mat([[2]]))


@given(lsas(max_dim=3), seeds)
def test_random_documents_round_trip(A, seed):
    r = tensor2(make_rng(seed), A.dim)
    doc = document_of(algebra_object(A, "A"), tensor_object("r", r))
    again = parse_document(emit_document(doc))
    assert again == doc
    assert np.array_equal(again.get("A", "algebra").c, A.c)
    assert np.array_equal(again.get("r", "tensor2"), r)
