"""Duplicate logging code smell detection for Java sources."""

import json

from ._core import (
    ScanError,
    __version__,
    block_similarity,
    porter_stem,
    score_counts,
    split_words,
)
from ._core import scan as _scan_json
from ._core import scan_sources as _scan_sources_json


def scan(root, **options):
    """Scan ``root`` and return the report as a dict."""
    return json.loads(_scan_json(str(root), **options))


def scan_sources(sources, **options):
    """Scan ``{relative_path: source_text}`` and return the report as a dict."""
    return json.loads(_scan_sources_json(dict(sources), **options))


__all__ = [
    "ScanError",
    "__version__",
    "block_similarity",
    "porter_stem",
    "scan",
    "scan_sources",
    "score_counts",
    "split_words",
]
