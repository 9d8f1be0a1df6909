"""Deterministic fingerprints of structure documents.

The fingerprint is the SHA-256 hex digest of the canonical document text, so
two files describing the same structure with different whitespace share it.
"""

import hashlib

from serialization.documents import StructureDocument, dumps, parse


def fingerprint_text(canonical: str) -> str:
    """Return the SHA-256 hex digest of canonical document text."""
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def fingerprint(document: StructureDocument) -> str:
    return fingerprint_text(dumps(document))


def fingerprint_of_text(text: str) -> str:
    """Fingerprint of arbitrary (possibly non-canonical) document text."""
    return fingerprint(parse(text))
