"""HTTP/JSON façade over the index: search, document detail, meta.

Handlers are read-only against whatever snapshot the engine currently
holds; re-ingestion swaps the snapshot reference atomically, so
in-flight requests keep the one they started with.
"""

from urllib.parse import urlencode

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .errors import BadPage, GausseerError, InvalidField, NotFound
from .gparse import GaussianRecord
from .index import (
    IndexSnapshot,
    facet_counts,
    get_document,
    load_snapshot,
    search,
)
from .query import FIELDS, build_query, tokens_for
from .taxonomy import ANY

PAGE_SIZE = 10


class SearchHit(BaseModel):
    id: int
    title: str
    summary: str


class FacetEntry(BaseModel):
    value: str
    count: int


class SearchResponse(BaseModel):
    total: int
    page: int
    page_size: int = PAGE_SIZE
    results: list[SearchHit]
    facets: dict[str, list[FacetEntry]]
    applied_refinements: list[tuple[str, str]]
    all_results_link: str


class DocumentDetail(BaseModel):
    id: int
    title: str
    file_path: str
    elements: list[str]
    atom_sites: list[tuple[str, float, float, float]]
    methods: list[str]
    basis_sets: list[str]
    job_types: list[str]
    charge: int | None
    multiplicity: int | None
    energy: float | None
    degrees_of_freedom: int | None
    flags: list[str]
    missing: list[str]


class MetaResponse(BaseModel):
    doc_count: int
    snapshot_version: int
    options: dict[str, list[str]]


class SearchEngine:
    """Mutable holder of the immutable active snapshot."""

    def __init__(self, snapshot: IndexSnapshot):
        self.snapshot = snapshot
        self.version = 1

    @classmethod
    def from_file(cls, path) -> "SearchEngine":
        return cls(load_snapshot(path))

    def reload(self, path) -> None:
        snapshot = load_snapshot(path)  # build fully before the swap
        self.snapshot = snapshot
        self.version += 1


def summarize(record: GaussianRecord, taxonomy) -> str:
    """One line per hit: elements, then categorized attribute values."""
    segments = [", ".join(sorted(record.elements))]
    for kind in ("method", "job_type", "basis_set"):
        values = sorted({taxonomy.categorize_token(kind, t) for t in tokens_for(record, kind)})
        if values:
            segments.append(", ".join(values))
    return " | ".join(s for s in segments if s)


def _parse_page(raw: str | None) -> int:
    if raw is None:
        return 1
    try:
        page = int(raw)
    except ValueError:
        raise BadPage(f"page must be a positive integer, got {raw!r}") from None
    if page < 1:
        raise BadPage(f"page must be >= 1, got {page}")
    return page


def _parse_refinements(raw_pairs) -> tuple[tuple[str, str], ...]:
    out = []
    for raw in raw_pairs:
        field, sep, value = raw.partition(":")
        if not sep or field not in FIELDS or not value:
            raise InvalidField(f"refine must be one of field:value with field in {FIELDS}, got {raw!r}")
        out.append((field, value))
    return tuple(out)


def _base_link(params) -> str:
    """The original query minus refinements, back on page 1."""
    kept = [
        (k, v)
        for k, v in params.multi_items()
        if k in ("elements", "mode", "method", "jobtype", "basis", "op")
    ]
    return "/api/search?" + urlencode(kept)


def create_app(engine: SearchEngine, static_dir=None) -> FastAPI:
    app = FastAPI(title="gausseer")

    @app.exception_handler(GausseerError)
    async def domain_error(request: Request, exc: GausseerError):
        status = 404 if isinstance(exc, NotFound) else 400
        return JSONResponse(status_code=status, content={"code": exc.code, "message": str(exc)})

    @app.get("/api/search", response_model=SearchResponse)
    async def api_search(request: Request) -> SearchResponse:
        params = request.query_params
        snapshot = engine.snapshot
        taxonomy = snapshot.taxonomy
        elements_raw = params.get("elements") or ""
        query = build_query(
            elements_raw.split(","),
            mode=params.get("mode") or "contains",
            method=params.get("method"),
            jobtype=params.get("jobtype"),
            basis=params.get("basis"),
            op=params.get("op") or "and",
            refinements=_parse_refinements(params.getlist("refine")),
        )
        page = _parse_page(params.get("page"))

        ids = search(snapshot, query, taxonomy)
        window = ids[(page - 1) * PAGE_SIZE : page * PAGE_SIZE]
        results = [
            SearchHit(
                id=i,
                title=snapshot.docs[i].title,
                summary=summarize(snapshot.docs[i], taxonomy),
            )
            for i in window
        ]
        facets = {
            field: [
                FacetEntry(value=fc.value, count=fc.count)
                for fc in facet_counts(snapshot, ids, field, taxonomy)
            ]
            for field in FIELDS
        }
        return SearchResponse(
            total=len(ids),
            page=page,
            results=results,
            facets=facets,
            applied_refinements=list(query.refinements),
            all_results_link=_base_link(params),
        )

    @app.get("/api/doc/{doc_id}", response_model=DocumentDetail)
    async def api_doc(doc_id: int) -> DocumentDetail:
        record = get_document(engine.snapshot, doc_id)
        return DocumentDetail(
            id=record.id,
            title=record.title,
            file_path=record.file_path,
            elements=sorted(record.elements),
            atom_sites=list(record.atom_sites),
            methods=sorted(record.methods),
            basis_sets=sorted(record.basis_sets),
            job_types=sorted(record.job_types),
            charge=record.charge,
            multiplicity=record.multiplicity,
            energy=record.energy,
            degrees_of_freedom=record.degrees_of_freedom,
            flags=sorted(record.flags),
            missing=sorted(record.missing),
        )

    @app.get("/api/meta", response_model=MetaResponse)
    async def api_meta() -> MetaResponse:
        snapshot = engine.snapshot
        options = {
            kind: [ANY] + snapshot.taxonomy.categories(kind)
            for kind in ("job_type", "method", "basis_set")
        }
        return MetaResponse(
            doc_count=snapshot.doc_count,
            snapshot_version=engine.version,
            options=options,
        )

    @app.get("/healthz")
    async def healthz() -> PlainTextResponse:
        return PlainTextResponse("ok")

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="static")

    return app
