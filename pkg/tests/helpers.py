"""Shared test utilities: the linear-scan oracle and a random query source."""

import random

from gausseer.query import Query, build_query, matches, refine, tokens_for


def oracle_search(query: Query, records, taxonomy) -> list[int]:
    """Brute-force reference: evaluate matches() per record, sort by id."""
    return sorted(r.id for r in records if matches(query, r, taxonomy))


def element_pool(records) -> list[str]:
    return sorted({e for r in records for e in r.elements})


def corpus_facet_values(records, field, taxonomy) -> list[str]:
    return sorted(
        {taxonomy.categorize_token(field, t) for r in records for t in tokens_for(r, field)}
    )


def random_query(rng: random.Random, records, taxonomy, with_refinements=True) -> Query:
    """A query over vocabulary the corpus actually uses, plus misses.

    Biased toward contains mode and small element sets so a useful share
    of queries return non-empty results.
    """
    pool = element_pool(records) or ["H", "O"]
    k = rng.choice((1, 1, 1, 2, 2, 3))
    elements = rng.sample(pool, min(k, len(pool)))
    mode = "contains" if rng.random() < 0.7 else "exact"

    def clause(kind):
        roll = rng.random()
        if roll < 0.45:
            return None
        if roll < 0.55:
            return "Any"
        if roll < 0.8:
            return rng.choice(taxonomy.categories(kind))
        vocab = sorted(taxonomy.vocabulary(kind))
        free = ["6-31g(d)", "sto-3g", "gen", "b97d3", "opt(ts,calcfc)", "zz-none"]
        return rng.choice(vocab + free)

    query = build_query(
        elements,
        mode=mode,
        method=clause("method"),
        jobtype=clause("job_type"),
        basis=clause("basis_set"),
        op=rng.choice(("and", "or")),
    )
    if with_refinements:
        for _ in range(rng.randint(0, 2)):
            field = rng.choice(("job_type", "method", "basis_set"))
            values = corpus_facet_values(records, field, taxonomy)
            if values:
                query = refine(query, field, rng.choice(values))
    return query
