"""Estimate the number of clusters in a time-series dataset.

Thin wrapper over the C++ library. ``select_k`` returns the sweep report as
a dict with the same layout as the CLI's JSON output.
"""

import json

from ._spfk import (
    ConfigError,
    Error,
    IngestError,
    adjusted_rand_index,
    bow_matrix,
    breakpoints,
    fixture_csv,
    generate_synthetic,
    load_ucr,
    paa,
    sax_document,
    sax_word,
    select_k_json,
    silhouette,
    spf_cluster,
    tfidf_matrix,
    verdict,
    znormalize,
)

__all__ = [
    "ConfigError",
    "Error",
    "IngestError",
    "adjusted_rand_index",
    "bow_matrix",
    "breakpoints",
    "fixture_csv",
    "generate_synthetic",
    "load_ucr",
    "paa",
    "sax_document",
    "sax_word",
    "select_k",
    "select_k_json",
    "silhouette",
    "spf_cluster",
    "tfidf_matrix",
    "verdict",
    "znormalize",
]


def select_k(series, labels=None, **kwargs):
    """Run the silhouette sweep and return the parsed report."""
    return json.loads(select_k_json(series, labels, **kwargs))
