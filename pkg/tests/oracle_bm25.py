"""Independent exhaustive BM25 scorer used to check the engine.

Works on pre-analyzed term lists and plain Python math only; shares no code
with the index or searcher.
"""

import math
from collections import Counter


def brute_force_topk(corpus, query_terms, k, k1=0.9, b=0.4):
    """corpus: list of (snippet_id, term list). Returns [(id, score)] ranked
    by score desc then id asc; snippets matching no query term are excluded."""
    n = len(corpus)
    lengths = {sid: len(terms) for sid, terms in corpus}
    avgdl = sum(lengths.values()) / n
    df = Counter()
    tfs = {}
    for sid, terms in corpus:
        counts = Counter(terms)
        tfs[sid] = counts
        for t in counts:
            df[t] += 1

    results = []
    for sid, _ in corpus:
        score = 0.0
        matched = False
        for t in set(query_terms):
            tf = tfs[sid].get(t, 0)
            if tf == 0:
                continue
            matched = True
            idf = math.log(1.0 + (n - df[t] + 0.5) / (df[t] + 0.5))
            score += idf * tf * (k1 + 1.0) / (tf + k1 * (1.0 - b + b * lengths[sid] / avgdl))
        if matched:
            results.append((sid, score))
    results.sort(key=lambda r: (-r[1], r[0]))
    return results[:k]
