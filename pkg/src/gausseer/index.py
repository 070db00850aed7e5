"""Inverted index over GaussianRecords with snapshot persistence.

Postings are plain ascending id lists merged with two-pointer walks.
``search`` must stay contractually identical to the linear scan over
``query.matches``; every shortcut here is checked against that oracle.
"""

import hashlib
import json
import os
import struct
from dataclasses import dataclass

from .errors import DuplicateId, FormatError, NotFound
from .gparse import GaussianRecord, record_from_dict, record_to_dict
from .query import Connective, ElementMode, Query, tokens_for
from .taxonomy import Taxonomy, default_taxonomy, load_taxonomy

POSTING_FIELDS = (
    "element",
    "method_token",
    "job_token",
    "basis_token",
    "method_cat",
    "job_cat",
    "basis_cat",
)

_TOKEN_FIELD = {"method": "method_token", "job_type": "job_token", "basis_set": "basis_token"}
_CAT_FIELD = {"method": "method_cat", "job_type": "job_cat", "basis_set": "basis_cat"}

MAGIC = b"GXSI"
VERSION = 1
_HEADER = struct.Struct(">IQ")  # version, payload length
_DIGEST_SIZE = hashlib.sha256().digest_size


@dataclass(frozen=True)
class FacetCount:
    field: str
    value: str
    count: int


class IndexSnapshot:
    """Immutable after build: docs, postings, and the element signatures."""

    def __init__(self, docs, postings, element_signature, taxonomy):
        self.docs = docs
        self.postings = postings
        self.element_signature = element_signature
        self.taxonomy = taxonomy
        self.doc_count = len(docs)


def signature_key(elements) -> str:
    return "|".join(sorted(elements))


def build_index(records, taxonomy: Taxonomy | None = None) -> IndexSnapshot:
    tax = taxonomy if taxonomy is not None else default_taxonomy()
    docs: dict[int, GaussianRecord] = {}
    for record in records:
        if record.id in docs:
            raise DuplicateId(f"duplicate document id {record.id}")
        docs[record.id] = record

    postings: dict[str, dict[str, list[int]]] = {f: {} for f in POSTING_FIELDS}
    element_signature: dict[str, list[int]] = {}

    def post(field: str, term: str, doc_id: int) -> None:
        lst = postings[field].setdefault(term, [])
        # two tokens of one doc may share a category; keep ids unique
        if not lst or lst[-1] != doc_id:
            lst.append(doc_id)

    for doc_id in sorted(docs):
        record = docs[doc_id]
        for sym in record.elements:
            post("element", sym, doc_id)
        for kind in ("method", "job_type", "basis_set"):
            for token in tokens_for(record, kind):
                post(_TOKEN_FIELD[kind], token, doc_id)
                post(_CAT_FIELD[kind], tax.categorize_token(kind, token), doc_id)
        element_signature.setdefault(signature_key(record.elements), []).append(doc_id)

    return IndexSnapshot(docs, postings, element_signature, tax)


def intersect(a: list[int], b: list[int]) -> list[int]:
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            out.append(a[i])
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return out


def union(a: list[int], b: list[int]) -> list[int]:
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            out.append(a[i])
            i += 1
            j += 1
        elif a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return out


def _clause_ids(snapshot, kind: str, clause: str, tax: Taxonomy) -> list[int]:
    # a clause matches when any record token hits any expanded term
    ids: list[int] = []
    for term in sorted(tax.expand(kind, clause)):
        ids = union(ids, snapshot.postings[_TOKEN_FIELD[kind]].get(term, []))
    return ids


def search(snapshot: IndexSnapshot, query: Query, taxonomy: Taxonomy | None = None) -> list[int]:
    """Ascending ids of documents matching the query.

    Posting-list evaluation of the same E ∧ A ∧ R formula the oracle
    computes per record; results are ranked by external id only.
    """
    tax = taxonomy if taxonomy is not None else snapshot.taxonomy

    if query.element_mode is ElementMode.EXACT:
        ids = list(snapshot.element_signature.get(signature_key(query.elements), []))
    else:
        ids = None
        for sym in sorted(query.elements):
            lst = snapshot.postings["element"].get(sym, [])
            ids = lst if ids is None else intersect(ids, lst)
            if not ids:
                return []
        ids = list(ids) if ids is not None else []

    clause_pairs = [
        (kind, clause)
        for kind, clause in (
            ("method", query.method_clause),
            ("job_type", query.job_clause),
            ("basis_set", query.basis_clause),
        )
        if clause is not None
    ]
    if clause_pairs:
        per_clause = [_clause_ids(snapshot, k, c, tax) for k, c in clause_pairs]
        if query.connective is Connective.AND:
            for lst in per_clause:
                ids = intersect(ids, lst)
        else:
            combined: list[int] = []
            for lst in per_clause:
                combined = union(combined, lst)
            ids = intersect(ids, combined)

    for field, value in query.refinements:
        ids = intersect(ids, snapshot.postings[_CAT_FIELD[field]].get(value, []))

    return ids


def facet_counts(snapshot, result_ids, field: str, taxonomy: Taxonomy | None = None):
    """FacetCounts of ``field`` over a result set, count desc then value asc."""
    tax = taxonomy if taxonomy is not None else snapshot.taxonomy
    tally: dict[str, int] = {}
    for doc_id in result_ids:
        record = snapshot.docs[doc_id]
        values = {tax.categorize_token(field, t) for t in tokens_for(record, field)}
        for value in values:
            tally[value] = tally.get(value, 0) + 1
    ordered = sorted(tally.items(), key=lambda kv: (-kv[1], kv[0]))
    return [FacetCount(field, value, count) for value, count in ordered]


def get_document(snapshot: IndexSnapshot, doc_id: int) -> GaussianRecord:
    record = snapshot.docs.get(doc_id)
    if record is None:
        raise NotFound(f"no document with id {doc_id}")
    return record


def save_snapshot(snapshot: IndexSnapshot, path) -> None:
    """Write the versioned, checksummed snapshot file atomically."""
    payload = json.dumps(
        {
            "taxonomy": snapshot.taxonomy.source,
            "records": [record_to_dict(snapshot.docs[i]) for i in sorted(snapshot.docs)],
        },
        sort_keys=True,
        separators=(",", ":"),
    ).encode("utf-8")
    blob = MAGIC + _HEADER.pack(VERSION, len(payload)) + payload
    blob += hashlib.sha256(blob).digest()
    tmp = f"{path}.tmp"
    with open(tmp, "wb") as fh:
        fh.write(blob)
    os.replace(tmp, path)


def load_snapshot(path) -> IndexSnapshot:
    """Read a snapshot file; postings are rebuilt from the stored records.

    Raises FormatError for bad magic, version, length, or checksum, and
    lets I/O errors propagate.
    """
    with open(path, "rb") as fh:
        data = fh.read()
    frame = len(MAGIC) + _HEADER.size
    if len(data) < frame + _DIGEST_SIZE or data[: len(MAGIC)] != MAGIC:
        raise FormatError("not a snapshot file (bad magic)")
    version, length = _HEADER.unpack(data[len(MAGIC) : frame])
    if version != VERSION:
        raise FormatError(f"unsupported snapshot version {version}")
    if len(data) != frame + length + _DIGEST_SIZE:
        raise FormatError("snapshot length mismatch (truncated or padded)")
    body = data[: frame + length]
    if hashlib.sha256(body).digest() != data[frame + length :]:
        raise FormatError("snapshot checksum mismatch")
    try:
        obj = json.loads(body[frame:].decode("utf-8"))
        records = [record_from_dict(d) for d in obj["records"]]
        taxonomy = load_taxonomy(obj["taxonomy"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"snapshot payload unreadable: {exc}") from exc
    return build_index(records, taxonomy)
