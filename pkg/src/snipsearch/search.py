"""BM25 top-k retrieval over an IndexSegment.

score(q, s) = sum over distinct query terms t of
    idf(t) * tf * (k1 + 1) / (tf + k1 * (1 - b + b * len(s) / avgdl))
with idf(t) = ln(1 + (N - df + 0.5) / (df + 0.5)), which is positive for
every df in [1, N]. Ties are broken by ascending snippet id so rankings are
invariant under shard and merge reorderings of the underlying store.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from snipsearch.documents import SnipsearchError
from snipsearch.index import IndexSegment


class SearchError(SnipsearchError):
    pass


@dataclass
class Query:
    raw: str
    terms: list[str]
    k: int = 10
    analyzer_digest: str | None = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")


def make_query(segment: IndexSegment, raw: str, k: int = 10) -> Query:
    return Query(
        raw=raw,
        terms=segment.analyzer.analyze(raw),
        k=k,
        analyzer_digest=segment.analyzer_digest,
    )


@dataclass
class ScoredHit:
    id: str
    score: float
    rank: int
    matched_terms: list[str]
    text: str = ""
    meta: dict[str, str] = field(default_factory=dict)
    ordinal: int = -1


def idf(n_snippets: int, df: int) -> float:
    return math.log(1.0 + (n_snippets - df + 0.5) / (df + 0.5))


def score_bm25(segment: IndexSegment, query: Query | str, k: int | None = None) -> list[ScoredHit]:
    """Top-k hits by (score desc, snippet id asc); snippets with no matching
    term are never returned."""
    if isinstance(query, str):
        query = make_query(segment, query, k or 10)
    if k is not None and k != query.k:
        query = Query(query.raw, query.terms, k, query.analyzer_digest)
    if query.analyzer_digest is not None and query.analyzer_digest != segment.analyzer_digest:
        raise SearchError(
            "query was analyzed with a different analyzer than the index "
            f"({query.analyzer_digest[:12]} != {segment.analyzer_digest[:12]})"
        )

    n = segment.snippet_count
    k1, b = segment.k1, segment.b
    scores = np.zeros(n)
    matched = np.zeros(n, dtype=bool)
    term_postings: dict[str, np.ndarray] = {}
    for term in dict.fromkeys(query.terms):
        ords, tfs = segment.postings(term)
        if ords.size == 0:
            continue
        term_postings[term] = ords
        w = idf(n, ords.size)
        dl = segment.lengths[ords]
        tf = tfs.astype(np.float64)
        scores[ords] += w * tf * (k1 + 1.0) / (tf + k1 * (1.0 - b + b * dl / segment.avgdl))
        matched[ords] = True

    cand = np.nonzero(matched)[0]
    if cand.size == 0:
        return []
    cscores = scores[cand]
    order = np.lexsort((cand, -cscores))
    budget = min(query.k, cand.size)
    # expand past k to cover the tie group at the boundary, then break ties by id
    cutoff = cscores[order[budget - 1]]
    take = order[:budget].tolist()
    for i in order[budget:].tolist():
        if cscores[i] == cutoff:
            take.append(i)
        else:
            break

    picked = []
    for i in take:
        ordinal = int(cand[i])
        snip = segment.snippet(ordinal)
        picked.append((float(cscores[i]), snip["id"], ordinal, snip))
    picked.sort(key=lambda p: (-p[0], p[1]))
    picked = picked[: query.k]

    hits = []
    for rank, (score, sid, ordinal, snip) in enumerate(picked, start=1):
        terms_here = [
            t for t, ords in term_postings.items()
            if ords[np.searchsorted(ords, ordinal) % ords.size] == ordinal
        ]
        hits.append(
            ScoredHit(
                id=sid,
                score=score,
                rank=rank,
                matched_terms=terms_here,
                text=snip["text"],
                meta=snip.get("meta", {}),
                ordinal=ordinal,
            )
        )
    return hits


def batch_search(segment: IndexSegment, queries: list[Query]) -> list[list[ScoredHit]]:
    """Element-wise score_bm25; output order matches input order."""
    return [score_bm25(segment, q) for q in queries]
