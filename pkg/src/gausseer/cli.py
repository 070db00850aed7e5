"""Command-line entry points: ingest, search, serve.

Thin wrappers over the core package; exit codes are 0 for success,
1 for fatal I/O or unreadable snapshot files, 2 for bad arguments.
"""

import argparse
import sys
from pathlib import Path

from .errors import BadPage, ConfigError, FormatError, NotFound, QueryError
from .gparse import canonical_json
from .index import facet_counts, get_document, load_snapshot, search
from .ingest import format_report, ingest_corpus
from .query import FIELDS, build_query
from .service import PAGE_SIZE, SearchEngine, create_app, summarize
from .taxonomy import default_taxonomy, load_taxonomy


def _load_taxonomy_arg(path: str | None):
    if path is None:
        return default_taxonomy()
    return load_taxonomy(Path(path).read_text(encoding="utf-8"))


def _cmd_ingest(args) -> int:
    taxonomy = _load_taxonomy_arg(args.taxonomy)
    extensions = tuple(e.strip() for e in args.ext.split(",") if e.strip())
    report = ingest_corpus(
        args.dir,
        taxonomy,
        index_path=args.index,
        xml_dir=args.xml_out,
        extensions=extensions,
    )
    print(format_report(report), end="")
    return 0


def _cmd_search(args) -> int:
    snapshot = load_snapshot(args.index)
    if args.doc is not None:
        record = get_document(snapshot, args.doc)
        print(canonical_json(record), end="")
        return 0
    if args.elements is None:
        raise QueryError("--elements is required unless --doc is given")
    if args.page < 1:
        raise BadPage(f"page must be >= 1, got {args.page}")
    query = build_query(
        args.elements.split(","),
        mode=args.mode,
        method=args.method,
        jobtype=args.jobtype,
        basis=args.basis,
        op=args.op,
    )
    ids = search(snapshot, query, snapshot.taxonomy)
    print(f"total: {len(ids)}")
    window = ids[(args.page - 1) * PAGE_SIZE : args.page * PAGE_SIZE]
    for doc_id in window:
        record = snapshot.docs[doc_id]
        print(f"{doc_id}\t{record.title}\t{summarize(record, snapshot.taxonomy)}")
    print("facets:")
    for field in FIELDS:
        for fc in facet_counts(snapshot, ids, field, snapshot.taxonomy):
            print(f"  {field}\t{fc.value}\t{fc.count}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    engine = SearchEngine.from_file(args.index)
    app = create_app(engine, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gausseer")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="index a directory of Gaussian logs")
    p_ingest.add_argument("dir")
    p_ingest.add_argument("--index", required=True, help="snapshot file to write")
    p_ingest.add_argument("--taxonomy", default=None, help="override the bundled taxonomy config")
    p_ingest.add_argument("--xml-out", default=None, help="directory for per-file XML records")
    p_ingest.add_argument("--ext", default="log,out", help="comma-separated file extensions")
    p_ingest.set_defaults(func=_cmd_ingest)

    p_search = sub.add_parser("search", help="query a snapshot from the command line")
    p_search.add_argument("--index", required=True)
    p_search.add_argument("--elements", default=None, help="comma-separated element symbols")
    p_search.add_argument("--mode", default="contains", help="exact or contains")
    p_search.add_argument("--method", default=None)
    p_search.add_argument("--jobtype", default=None)
    p_search.add_argument("--basis", default=None)
    p_search.add_argument("--op", default="and", help="connective for the attribute clauses")
    p_search.add_argument("--page", type=int, default=1)
    p_search.add_argument("--doc", type=int, default=None, help="print one record as JSON instead")
    p_search.set_defaults(func=_cmd_search)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--index", required=True)
    p_serve.add_argument("--port", type=int, required=True)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--static", default=None, help="directory of UI files to serve at /")
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, FormatError, NotFound) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (QueryError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
