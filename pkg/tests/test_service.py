import random
from collections import Counter

import pytest
from fastapi.testclient import TestClient

from gausseer.index import save_snapshot, search
from gausseer.service import PAGE_SIZE, SearchEngine, create_app, summarize
from helpers import oracle_search, random_query


@pytest.fixture(scope="module")
def client(snapshot):
    return TestClient(create_app(SearchEngine(snapshot)))


def params_for(query):
    params = [
        ("elements", ",".join(sorted(query.elements))),
        ("mode", query.element_mode.value),
        ("op", query.connective.value),
    ]
    if query.method_clause is not None:
        params.append(("method", query.method_clause))
    if query.job_clause is not None:
        params.append(("jobtype", query.job_clause))
    if query.basis_clause is not None:
        params.append(("basis", query.basis_clause))
    for field, value in query.refinements:
        params.append(("refine", f"{field}:{value}"))
    return params


def test_search_totals_match_oracle(client, taxonomy, corpus_records):
    rng = random.Random(83)
    for _ in range(60):
        q = random_query(rng, corpus_records, taxonomy)
        resp = client.get("/api/search", params=params_for(q))
        assert resp.status_code == 200
        body = resp.json()
        expected = oracle_search(q, corpus_records, taxonomy)
        assert body["total"] == len(expected)
        assert [hit["id"] for hit in body["results"]] == expected[:PAGE_SIZE]


def test_search_response_shape(client, snapshot, taxonomy):
    resp = client.get("/api/search", params={"elements": "H", "jobtype": "Opt"})
    body = resp.json()
    assert set(body) == {
        "total", "page", "page_size", "results", "facets",
        "applied_refinements", "all_results_link",
    }
    assert body["page"] == 1
    assert body["page_size"] == PAGE_SIZE
    assert set(body["facets"]) == {"job_type", "method", "basis_set"}
    for hit in body["results"]:
        record = snapshot.docs[hit["id"]]
        assert hit["title"] == record.title
        assert hit["summary"] == summarize(record, taxonomy)


def test_op_defaults_to_and(client):
    params = {"elements": "H", "method": "DFT Methods", "jobtype": "Opt"}
    default = client.get("/api/search", params=params).json()
    explicit = client.get("/api/search", params={**params, "op": "and"}).json()
    assert default["total"] == explicit["total"]
    ored = client.get("/api/search", params={**params, "op": "or"}).json()
    assert ored["total"] >= default["total"]


def test_pagination_partitions_results(client, snapshot, corpus_records):
    symbol, _ = Counter(
        s for record in corpus_records for s in record.elements
    ).most_common(1)[0]
    first = client.get("/api/search", params={"elements": symbol}).json()
    total = first["total"]
    assert total > 25  # enough mass for a real multi-page walk

    seen = []
    page = 1
    while True:
        body = client.get("/api/search", params={"elements": symbol, "page": page}).json()
        assert body["total"] == total
        assert body["page"] == page
        if not body["results"]:
            break
        assert len(body["results"]) <= PAGE_SIZE
        if page * PAGE_SIZE < total:
            assert len(body["results"]) == PAGE_SIZE
        seen.extend(hit["id"] for hit in body["results"])
        page += 1
    assert len(seen) == total
    assert len(set(seen)) == total
    assert seen == sorted(seen)


def test_facet_counts_are_honest_over_http(client, taxonomy, corpus_records):
    rng = random.Random(89)
    checked = 0
    for _ in range(25):
        q = random_query(rng, corpus_records, taxonomy, with_refinements=False)
        body = client.get("/api/search", params=params_for(q)).json()
        if body["total"] == 0:
            continue
        for field, entries in body["facets"].items():
            for entry in entries[:3]:
                refined = client.get(
                    "/api/search",
                    params=params_for(q) + [("refine", f"{field}:{entry['value']}")],
                ).json()
                assert refined["total"] == entry["count"], (field, entry)
                checked += 1
    assert checked >= 30


def test_all_results_link_drops_refinements(client):
    base_params = {"elements": "H", "jobtype": "Opt"}
    base = client.get("/api/search", params=base_params).json()
    refined = client.get(
        "/api/search", params={**base_params, "refine": "method:DFT Methods"}
    ).json()
    assert refined["applied_refinements"] == [["method", "DFT Methods"]]
    link = refined["all_results_link"]
    assert link.startswith("/api/search?")
    assert "refine" not in link
    again = client.get(link).json()
    assert again["total"] == base["total"]
    assert again["applied_refinements"] == []


def test_doc_detail_matches_record(client, snapshot):
    rid = sorted(snapshot.docs)[0]
    record = snapshot.docs[rid]
    body = client.get(f"/api/doc/{rid}").json()
    assert body["id"] == record.id
    assert body["title"] == record.title
    assert body["file_path"] == record.file_path
    assert body["elements"] == sorted(record.elements)
    assert body["methods"] == sorted(record.methods)
    assert body["basis_sets"] == sorted(record.basis_sets)
    assert body["job_types"] == sorted(record.job_types)
    assert body["charge"] == record.charge
    assert body["multiplicity"] == record.multiplicity
    assert body["energy"] == record.energy
    assert body["degrees_of_freedom"] == record.degrees_of_freedom
    assert body["flags"] == sorted(record.flags)
    assert body["missing"] == sorted(record.missing)
    sites = [tuple(site) for site in body["atom_sites"]]
    assert sites == list(record.atom_sites)


@pytest.mark.parametrize(
    "params,code",
    [
        ({}, "EmptyElements"),
        ({"elements": " , "}, "EmptyElements"),
        ({"elements": "Xq"}, "UnknownElement"),
        ({"elements": "H", "mode": "fuzzy"}, "BadParameter"),
        ({"elements": "H", "op": "xor"}, "BadParameter"),
        ({"elements": "H", "page": "zero"}, "BadPage"),
        ({"elements": "H", "page": "0"}, "BadPage"),
        ({"elements": "H", "page": "-3"}, "BadPage"),
        ({"elements": "H", "refine": "nope"}, "InvalidField"),
        ({"elements": "H", "refine": "energy:low"}, "InvalidField"),
        ({"elements": "H", "refine": "method:"}, "InvalidField"),
    ],
)
def test_search_errors(client, params, code):
    resp = client.get("/api/search", params=params)
    assert resp.status_code == 400
    body = resp.json()
    assert body["code"] == code
    assert body["message"]


def test_doc_not_found(client):
    resp = client.get("/api/doc/98765432")
    assert resp.status_code == 404
    assert resp.json()["code"] == "NotFound"


def test_meta_options(client, snapshot, taxonomy):
    body = client.get("/api/meta").json()
    assert body["doc_count"] == snapshot.doc_count
    assert body["snapshot_version"] == 1
    options = body["options"]
    for kind in ("job_type", "method", "basis_set"):
        assert options[kind] == ["Any"] + taxonomy.categories(kind)
    assert len(options["job_type"]) == 14
    assert len(options["method"]) == 16
    assert options["basis_set"] == ["Any", "gen"]
    assert options["job_type"][1] == "Single Point"
    assert "Hartree-Fock" in options["method"]


def test_reload_bumps_version(snapshot, tmp_path):
    path = tmp_path / "snap.idx"
    save_snapshot(snapshot, path)
    engine = SearchEngine.from_file(path)
    local = TestClient(create_app(engine))
    assert local.get("/api/meta").json()["snapshot_version"] == 1
    engine.reload(path)
    body = local.get("/api/meta").json()
    assert body["snapshot_version"] == 2
    assert body["doc_count"] == snapshot.doc_count


def test_requests_do_not_leak_state(client):
    a1 = client.get("/api/search", params={"elements": "H", "jobtype": "Opt"})
    client.get("/api/search", params={"elements": "C,N", "op": "or", "mode": "exact"})
    client.get("/api/search", params={"elements": "H", "refine": "job_type:Freq"})
    a2 = client.get("/api/search", params={"elements": "H", "jobtype": "Opt"})
    assert a1.content == a2.content


def test_healthz(client):
    resp = client.get("/healthz")
    assert resp.status_code == 200
    assert resp.text == "ok"


def test_static_files_served_when_configured(snapshot, tmp_path):
    (tmp_path / "index.html").write_text("<h1>search console</h1>")
    local = TestClient(create_app(SearchEngine(snapshot), static_dir=tmp_path))
    page = local.get("/")
    assert page.status_code == 200
    assert "search console" in page.text
    assert local.get("/api/meta").status_code == 200
