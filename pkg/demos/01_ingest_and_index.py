"""Walkthrough: from raw documents to a searchable BM25 segment.

Run with:  python3 demos/01_ingest_and_index.py
"""

import json
import tempfile
from pathlib import Path

from snipsearch import AnalyzerConfig, CorpusSource, default_stopwords
from snipsearch.documents import ShardPlan
from snipsearch.index import build_offline, merge_segments, open_segment

work = Path(tempfile.mkdtemp(prefix="snipsearch-demo-"))

# ---------------------------------------------------------------------------
# 1. A tiny corpus: JSONL with "id" and "contents" fields.
# ---------------------------------------------------------------------------
docs = [
    {"id": "d1", "contents": "a cat sat"},
    {"id": "d2", "contents": "a dog sat"},
    {"id": "d3", "contents": "cat cat cat"},
    {"id": "d4", "contents": "the quick brown fox jumps over the lazy dog",
     "meta": {"source": "pangram"}},
]
corpus = work / "docs.jsonl"
corpus.write_text("\n".join(json.dumps(d) for d in docs) + "\n")

# ---------------------------------------------------------------------------
# 2. Build a sharded index. Each shard is an independent segment directory;
#    documents are assigned round-robin.
# ---------------------------------------------------------------------------
config = AnalyzerConfig(kind="simple", stopwords=default_stopwords())
shards = build_offline(CorpusSource(path=str(corpus)), config,
                       plan=ShardPlan(shard_count=2), out_dir=work / "shards")
for seg in shards:
    print(f"shard {seg.dir.name}: {seg.snippet_count} snippets, "
          f"{len(list(seg.terms()))} terms")

# ---------------------------------------------------------------------------
# 3. Merge the shards into one segment. Merging re-deltas the postings with
#    global ordinals; statistics (df, cf, avgdl) are recomputed exactly.
# ---------------------------------------------------------------------------
merged = merge_segments(shards, work / "merged")
print(f"\nmerged: {merged.snippet_count} snippets, avgdl={merged.avgdl:.3f}")
print("df/cf for 'cat':", merged.term_stats("cat"))

# ---------------------------------------------------------------------------
# 4. Segments are plain directories — reopen from disk any time. The manifest
#    carries a checksum and the full analyzer, so a reopened segment verifies
#    itself and reconstructs the exact analyzer used at build time.
# ---------------------------------------------------------------------------
reopened = open_segment(work / "merged")
ordinals, tfs = reopened.postings("cat")
print("postings for 'cat': ordinals", ordinals.tolist(), "tfs", tfs.tolist())
print("first stored snippet:", reopened.snippet(0))
