"""Facet taxonomy: named categories that group the raw tokens of a field.

Each of the three faceted fields (job_type, method, basis_set) has a list of
categories, and each category owns a set of lowercase tokens.  A token may
belong to at most one category per kind.  Searching by a category matches any
record carrying one of its tokens; tokens outside every category still work
as singleton, pass-through values.
"""

from functools import lru_cache
from importlib import resources

from .errors import ConfigError, UnknownKind

KINDS = ("job_type", "method", "basis_set")

# Category name reserved for "no constraint" in query parameters and UIs.
ANY = "Any"


def normalize_token(raw: str) -> str:
    return raw.strip().lower()


class Taxonomy:
    """Immutable mapping of category names to token sets, per kind."""

    def __init__(self, groups: dict[str, dict[str, frozenset[str]]], source: str):
        self._groups = groups
        # token -> category and lowercased name -> category, per kind;
        # inverted once so lookups stay O(1)
        self._owner: dict[str, dict[str, str]] = {}
        self._by_lower: dict[str, dict[str, str]] = {}
        for kind, cats in groups.items():
            owner: dict[str, str] = {}
            by_lower: dict[str, str] = {}
            for cat, toks in cats.items():
                by_lower.setdefault(cat.lower(), cat)
                for tok in toks:
                    owner[tok] = cat
            self._owner[kind] = owner
            self._by_lower[kind] = by_lower
        self.source = source

    def _check_kind(self, kind: str) -> None:
        if kind not in KINDS:
            raise UnknownKind(f"unknown taxonomy kind: {kind!r}")

    def categories(self, kind: str) -> list[str]:
        """Category names for ``kind`` in configuration order (no Any)."""
        self._check_kind(kind)
        return list(self._groups[kind])

    def vocabulary(self, kind: str) -> frozenset[str]:
        """Every token claimed by some category of ``kind``."""
        self._check_kind(kind)
        return frozenset(self._owner[kind])

    def expand(self, kind: str, name: str) -> frozenset[str]:
        """Tokens selected by a facet value.

        A category name (matched case-insensitively) expands to its token
        set; the reserved name "Any" expands to the empty set, meaning
        unconstrained; anything else is treated as a literal token and
        returned as a singleton so typed-in values work.
        """
        self._check_kind(kind)
        lowered = name.strip().lower()
        if lowered == ANY.lower():
            return frozenset()
        canonical = self._by_lower[kind].get(lowered)
        if canonical is not None:
            return self._groups[kind][canonical]
        return frozenset((normalize_token(name),))

    def categorize_token(self, kind: str, token: str) -> str:
        """Facet value a record token files under: its category, else itself."""
        self._check_kind(kind)
        token = normalize_token(token)
        return self._owner[kind].get(token, token)


def load_taxonomy(config_text: str) -> Taxonomy:
    """Parse tab-separated taxonomy configuration.

    Line format: ``kind<TAB>Category Name<TAB>token[,token...]``.  Blank
    lines and "#" comments are skipped.  Repeated lines for one category
    merge their tokens.  Raises ConfigError (with a line number) for a
    malformed line, an unknown kind, a reserved category name, or a token
    claimed twice within one kind.
    """
    groups: dict[str, dict[str, set[str]]] = {k: {} for k in KINDS}
    claimed: dict[str, dict[str, int]] = {k: {} for k in KINDS}
    for lineno, line in enumerate(config_text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ConfigError("expected 3 tab-separated fields", lineno)
        kind, category, token_field = (p.strip() for p in parts)
        if kind not in KINDS:
            raise ConfigError(f"unknown kind {kind!r}", lineno)
        if not category:
            raise ConfigError("empty category name", lineno)
        if category.lower() == ANY.lower():
            raise ConfigError('"Any" is reserved and cannot be configured', lineno)
        tokens = [normalize_token(t) for t in token_field.split(",")]
        if not token_field.strip() or any(not t for t in tokens):
            raise ConfigError("empty token", lineno)
        bucket = groups[kind].setdefault(category, set())
        for tok in tokens:
            owner_line = claimed[kind].get(tok)
            if owner_line is not None and tok not in bucket:
                raise ConfigError(
                    f"token {tok!r} already claimed on line {owner_line}", lineno
                )
            claimed[kind].setdefault(tok, lineno)
            bucket.add(tok)
    frozen = {
        kind: {cat: frozenset(toks) for cat, toks in cats.items()}
        for kind, cats in groups.items()
    }
    return Taxonomy(frozen, config_text)


@lru_cache(maxsize=1)
def default_taxonomy() -> Taxonomy:
    text = resources.files("gausseer.data").joinpath("taxonomy.tsv").read_text("utf-8")
    return load_taxonomy(text)
