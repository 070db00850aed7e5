"""Corpus pipeline: scan a directory of logs, parse, emit XML records,
build and persist the index snapshot."""

from dataclasses import dataclass, replace
from pathlib import Path
from xml.sax.saxutils import escape

from .errors import ParseError
from .gparse import GaussianRecord, parse_document
from .index import build_index, save_snapshot
from .taxonomy import Taxonomy, default_taxonomy


@dataclass
class IngestReport:
    total_files: int
    indexed: int
    failed: list  # (path, error kind) in scan order
    missing_attribute_tally: dict


def emit_xml_record(record: GaussianRecord) -> str:
    """Bit-exact XML ingestion record for one document.

    One ``<field name="K">V</field>`` line per value; multivalued
    fields repeat the element in sorted value order; absent optional
    scalars are omitted entirely.
    """
    pairs: list[tuple[str, str]] = [
        ("id", str(record.id)),
        ("title", record.title),
        ("file_path", record.file_path),
    ]
    pairs += [("element", v) for v in sorted(record.elements)]
    pairs += [("method", v) for v in sorted(record.methods)]
    pairs += [("basis_set", v) for v in sorted(record.basis_sets)]
    pairs += [("job_type", v) for v in sorted(record.job_types)]
    for key in ("charge", "multiplicity"):
        value = getattr(record, key)
        if value is not None:
            pairs.append((key, str(value)))
    if record.energy is not None:
        pairs.append(("energy", repr(record.energy)))
    if record.degrees_of_freedom is not None:
        pairs.append(("degrees_of_freedom", str(record.degrees_of_freedom)))
    pairs += [("flag", v) for v in sorted(record.flags)]

    lines = ["<doc>"]
    lines += [f'  <field name="{k}">{escape(v)}</field>' for k, v in pairs]
    lines.append("</doc>")
    return "\n".join(lines) + "\n"


def ingest_corpus(
    root_dir,
    taxonomy: Taxonomy | None = None,
    index_path=None,
    xml_dir=None,
    extensions=("log", "out"),
) -> IngestReport:
    """Parse every matching file under ``root_dir`` and persist the index.

    Files are visited in lexicographic path order; external IDs are
    assigned 1..N over the successfully parsed files in that order, so
    reruns on an unchanged tree reproduce IDs exactly.  Parse failures
    are recorded in the report, never fatal.
    """
    if index_path is None:
        raise ValueError("index_path is required")
    tax = taxonomy if taxonomy is not None else default_taxonomy()
    root = Path(root_dir)
    wanted = {e.lower().lstrip(".") for e in extensions}
    files = sorted(
        (p for p in root.rglob("*") if p.is_file() and p.suffix.lstrip(".").lower() in wanted),
        key=str,
    )

    records: list[GaussianRecord] = []
    failed: list[tuple[str, str]] = []
    for path in files:
        text = path.read_text(encoding="utf-8", errors="replace")
        try:
            record = parse_document(text, str(path.resolve()), tax)
        except ParseError as exc:
            failed.append((str(path), exc.code))
            continue
        records.append(replace(record, id=len(records) + 1))

    index_path = Path(index_path)
    out_dir = Path(xml_dir) if xml_dir is not None else index_path.parent / "xml"
    out_dir.mkdir(parents=True, exist_ok=True)
    index_path.parent.mkdir(parents=True, exist_ok=True)
    for record in records:
        target = out_dir / f"{record.id:05d}.xml"
        target.write_text(emit_xml_record(record), encoding="utf-8")

    tally: dict[str, int] = {}
    for record in records:
        for name in record.missing:
            tally[name] = tally.get(name, 0) + 1

    snapshot = build_index(records, tax)
    save_snapshot(snapshot, index_path)
    return IngestReport(
        total_files=len(files),
        indexed=len(records),
        failed=failed,
        missing_attribute_tally=tally,
    )


def format_report(report: IngestReport) -> str:
    """Deterministic plain-text rendering (no timestamps, stable order)."""
    lines = [
        f"total files: {report.total_files}",
        f"indexed:     {report.indexed}",
        f"failed:      {len(report.failed)}",
    ]
    for path, kind in report.failed:
        lines.append(f"  {path}: {kind}")
    lines.append("missing attributes:")
    if report.missing_attribute_tally:
        for name in sorted(report.missing_attribute_tally):
            lines.append(f"  {name}: {report.missing_attribute_tally[name]}")
    else:
        lines.append("  none")
    return "\n".join(lines) + "\n"
