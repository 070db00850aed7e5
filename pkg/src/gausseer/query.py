"""Boolean queries over GaussianRecords and their record-level evaluator.

``matches`` is deliberately a plain linear predicate: besides backing
query semantics it is the brute-force oracle the inverted index is
checked against.
"""

from dataclasses import dataclass, replace
from enum import Enum

from .elements import canonical_symbol
from .errors import BadParameter, EmptyElements, InvalidField
from .gparse import GaussianRecord
from .taxonomy import Taxonomy

FIELDS = ("job_type", "method", "basis_set")

# record attribute and taxonomy kind per query field
_FIELD_TOKENS = {
    "job_type": "job_types",
    "method": "methods",
    "basis_set": "basis_sets",
}


class ElementMode(str, Enum):
    EXACT = "exact"
    CONTAINS = "contains"


class Connective(str, Enum):
    AND = "and"
    OR = "or"


@dataclass(frozen=True)
class Query:
    elements: frozenset[str]
    element_mode: ElementMode = ElementMode.CONTAINS
    method_clause: str | None = None
    job_clause: str | None = None
    basis_clause: str | None = None
    connective: Connective = Connective.AND
    refinements: tuple[tuple[str, str], ...] = ()


def tokens_for(record: GaussianRecord, field: str) -> frozenset[str]:
    if field not in _FIELD_TOKENS:
        raise InvalidField(field)
    return getattr(record, _FIELD_TOKENS[field])


def clauses_of(query: Query) -> list[tuple[str, str]]:
    """Present (field, clause) pairs, in method/job/basis order."""
    pairs = [
        ("method", query.method_clause),
        ("job_type", query.job_clause),
        ("basis_set", query.basis_clause),
    ]
    return [(f, c) for f, c in pairs if c is not None]


def matches(query: Query, record: GaussianRecord, taxonomy: Taxonomy) -> bool:
    """Evaluate E ∧ A ∧ R for one record.

    E: element equality (EXACT) or superset containment (CONTAINS).
    A: the present attribute clauses, combined by the connective,
       vacuously true when none are present; a clause holds when the
       record's tokens for that kind intersect the expanded clause.
    R: every refinement (field, value) has some record token whose
       category equals the value.
    """
    if query.element_mode is ElementMode.EXACT:
        if record.elements != query.elements:
            return False
    else:
        if not query.elements <= record.elements:
            return False

    predicates = [
        bool(tokens_for(record, field) & taxonomy.expand(field, clause))
        for field, clause in clauses_of(query)
    ]
    if predicates:
        combined = all(predicates) if query.connective is Connective.AND else any(predicates)
        if not combined:
            return False

    for field, value in query.refinements:
        tokens = tokens_for(record, field)
        if not any(taxonomy.categorize_token(field, t) == value for t in tokens):
            return False
    return True


def refine(query: Query, field: str, value: str) -> Query:
    """Append a facet refinement; duplicate pairs are a no-op."""
    if field not in FIELDS:
        raise InvalidField(field)
    pair = (field, value)
    if pair in query.refinements:
        return query
    return replace(query, refinements=query.refinements + (pair,))


def _clause_or_none(raw: str | None) -> str | None:
    if raw is None:
        return None
    stripped = raw.strip()
    if not stripped or stripped.lower() == "any":
        return None
    return stripped


def build_query(
    elements,
    mode: str = "contains",
    method: str | None = None,
    jobtype: str | None = None,
    basis: str | None = None,
    op: str = "and",
    refinements: tuple[tuple[str, str], ...] = (),
) -> Query:
    """Normalize raw UI/CLI/API input into a Query.

    Canonicalizes element symbols (rejecting unknown ones), maps empty
    or "Any" clause strings to absent clauses, and validates the mode
    and connective flags.
    """
    symbols = [canonical_symbol(e) for e in elements if e and e.strip()]
    if not symbols:
        raise EmptyElements("at least one element is required")
    try:
        element_mode = ElementMode(mode.strip().lower())
    except ValueError:
        raise BadParameter(f"mode must be exact or contains, got {mode!r}") from None
    try:
        connective = Connective(op.strip().lower())
    except ValueError:
        raise BadParameter(f"op must be and or or, got {op!r}") from None
    for field, _ in refinements:
        if field not in FIELDS:
            raise InvalidField(field)
    return Query(
        elements=frozenset(symbols),
        element_mode=element_mode,
        method_clause=_clause_or_none(method),
        job_clause=_clause_or_none(jobtype),
        basis_clause=_clause_or_none(basis),
        connective=connective,
        refinements=tuple(dict.fromkeys(refinements)),
    )
