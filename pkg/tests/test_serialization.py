"""Tests for serialization -- structure documents and fingerprints."""

import json

import pytest

from core.errors import DocumentParseError, StructureLoadError
from linear.category import LinearCategory
from serialization.documents import dumps, kind_of, load, loads, parse, save, to_document
from serialization.hashing import fingerprint, fingerprint_of_text


class TestDocuments:
    def test_round_trip(self, codiscrete_c2):
        assert loads(dumps(codiscrete_c2)) == codiscrete_c2

    def test_linear_round_trip(self, free2_algebra):
        back = loads(dumps(free2_algebra))
        assert isinstance(back, LinearCategory)
        assert back == free2_algebra

    def test_undefined_composite_is_null(self, codiscrete_c2):
        data = json.loads(dumps(codiscrete_c2))
        assert data["compose"][1][1] is None
        assert data["kind"] == "whiskered-groupoid"
        assert data["format_version"] == 1

    def test_plain_category_has_no_whiskering(self, free2):
        data = json.loads(dumps(free2.base))
        assert data["kind"] == "category"
        assert "monoid" not in data and "inverses" not in data

    def test_save_reproduces_canonical_file(self, tmp_path, left_negation_bundle):
        path = tmp_path / "bundle.json"
        save(left_negation_bundle, path)
        text = path.read_text(encoding="utf-8")
        save(load(path), path)
        assert path.read_text(encoding="utf-8") == text
        assert text.endswith("}\n")

    def test_kinds(self, codiscrete_c2, free2, free2_algebra):
        assert kind_of(codiscrete_c2) == "whiskered-groupoid"
        assert kind_of(free2) == "whiskered-category"
        assert kind_of(free2_algebra) == "linear"
        assert kind_of(codiscrete_c2.base) == "groupoid"
        assert to_document(free2).inverses is None


class TestParseErrors:
    def test_bad_json(self):
        with pytest.raises(DocumentParseError) as exc:
            parse("{not json")
        assert exc.value.location.startswith("line 1, column")

    def test_unsupported_version(self, codiscrete_c2):
        data = json.loads(dumps(codiscrete_c2))
        data["format_version"] = 2
        with pytest.raises(DocumentParseError) as exc:
            parse(json.dumps(data))
        assert exc.value.location == "format_version"

    def test_groupoid_needs_inverses(self, codiscrete_c2):
        data = json.loads(dumps(codiscrete_c2))
        del data["inverses"]
        with pytest.raises(DocumentParseError, match="inverses"):
            parse(json.dumps(data))

    def test_whiskered_kind_needs_actions(self, codiscrete_c2):
        data = json.loads(dumps(codiscrete_c2))
        del data["left_action"]
        with pytest.raises(DocumentParseError, match="left_action"):
            parse(json.dumps(data))

    def test_invalid_structure_is_refused(self, codiscrete_c2):
        data = json.loads(dumps(codiscrete_c2))
        data["compose"][0][0] = None
        with pytest.raises(StructureLoadError) as exc:
            loads(json.dumps(data))
        assert "closure" in exc.value.report.laws()


class TestFingerprint:
    def test_ignores_whitespace(self, codiscrete_c2):
        text = dumps(codiscrete_c2)
        compact = json.dumps(json.loads(text), separators=(",", ":"))
        assert fingerprint_of_text(compact) == fingerprint_of_text(text)

    def test_format(self, codiscrete_c2):
        digest = fingerprint(to_document(codiscrete_c2))
        assert len(digest) == 64
        assert all(c in "0123456789abcdef" for c in digest)

    def test_distinguishes_structures(self, codiscrete_c2, group_c3):
        assert fingerprint(to_document(codiscrete_c2)) != fingerprint(to_document(group_c3))
