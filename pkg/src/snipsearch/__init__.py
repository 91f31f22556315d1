"""snipsearch: a self-contained sparse-retrieval engine for large text corpora.

Ingests documents from files or streams, segments them into snippets of at
most 256 words, builds sharded BM25 inverted indices, and serves redacted
relevance search over HTTP.
"""

from snipsearch.documents import CorpusSource, RawDocument, ShardPlan, Snippet
from snipsearch.analysis import (
    AnalyzerConfig,
    build_analyzer,
    default_stopwords,
    load_subword_model,
)
from snipsearch.segment import segment
from snipsearch.index import (
    IndexSegment,
    build_offline,
    build_streaming,
    merge_segments,
    open_segment,
)
from snipsearch.search import ScoredHit, batch_search, score_bm25
from snipsearch.redact import redact, redact_hits
from snipsearch.dedup import CaptionCluster, clusters_to_documents, dedup_captions

__all__ = [
    "AnalyzerConfig",
    "CaptionCluster",
    "CorpusSource",
    "IndexSegment",
    "RawDocument",
    "ScoredHit",
    "ShardPlan",
    "Snippet",
    "batch_search",
    "build_analyzer",
    "build_offline",
    "build_streaming",
    "clusters_to_documents",
    "dedup_captions",
    "default_stopwords",
    "load_subword_model",
    "merge_segments",
    "open_segment",
    "redact",
    "redact_hits",
    "score_bm25",
    "segment",
]

__version__ = "0.1.0"
