"""gausseer: faceted search over Gaussian-style quantum chemistry logs."""

from .gparse import GaussianRecord, parse_document
from .index import IndexSnapshot, build_index, load_snapshot, save_snapshot, search
from .query import Query, build_query, matches, refine
from .taxonomy import Taxonomy, default_taxonomy, load_taxonomy

__version__ = "0.1.0"

__all__ = [
    "GaussianRecord",
    "parse_document",
    "IndexSnapshot",
    "build_index",
    "search",
    "save_snapshot",
    "load_snapshot",
    "Query",
    "build_query",
    "matches",
    "refine",
    "Taxonomy",
    "load_taxonomy",
    "default_taxonomy",
    "__version__",
]
