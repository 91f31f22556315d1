"""Walkthrough: BM25 ranking, streaming builds, and PII redaction.

Run with:  python3 demos/03_search_and_redaction.py
"""

import tempfile
from pathlib import Path

from snipsearch import AnalyzerConfig
from snipsearch.documents import RawDocument
from snipsearch.index import build_streaming, merge_segments
from snipsearch.redact import redact, redact_hits
from snipsearch.search import score_bm25

work = Path(tempfile.mkdtemp(prefix="snipsearch-demo-"))

# ---------------------------------------------------------------------------
# 1. Streaming build: documents arrive one at a time; whenever the RAM budget
#    fills, a part segment spills to disk. Merging the parts afterwards gives
#    exactly the same index an offline build would have produced.
# ---------------------------------------------------------------------------
def arriving_documents():
    yield RawDocument(id="d1", text="a cat sat on the mat")
    yield RawDocument(id="d2", text="a dog sat on the log")
    yield RawDocument(id="d3", text="cat cat cat")
    yield RawDocument(id="d4", text="call me at 415 555 2671 or bob@example.com")

config = AnalyzerConfig(kind="simple", stopwords=frozenset({"a", "the", "on"}))
parts = build_streaming(arriving_documents(), config, ram_budget_docs=2,
                        out_dir=work / "parts")
print(f"spilled {len(parts)} part segments")
segment = merge_segments(parts, work / "index")

# ---------------------------------------------------------------------------
# 2. BM25 top-k. Scores use k1=0.9, b=0.4 by default. Note how d3 wins on
#    "cat" (high tf, short snippet) and how ties break deterministically by
#    snippet id, so rankings are reproducible across build pipelines.
# ---------------------------------------------------------------------------
for query in ["cat", "sat", "cat dog"]:
    hits = score_bm25(segment, query, k=3)
    print(f"\nquery {query!r}:")
    for h in hits:
        print(f"  #{h.rank} {h.id:6s} score={h.score:.4f} "
              f"matched={h.matched_terms} text={h.text!r}")

# ---------------------------------------------------------------------------
# 3. Backend redaction: applied to outgoing text (and metadata), never to the
#    index itself, so ranking is unaffected. Redaction is idempotent.
# ---------------------------------------------------------------------------
hits = redact_hits(score_bm25(segment, "call", k=1))
print("\nredacted hit:", hits[0].text)

text = "mail root@h.example from 10.0.0.1 (fe80::1), id 4111111111111111"
once, count = redact(text)
print(f"redact() made {count} replacements -> {once!r}")
print("second pass changes nothing:", redact(once) == (once, 0))
