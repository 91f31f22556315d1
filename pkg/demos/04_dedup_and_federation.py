"""Walkthrough: caption deduplication and the federation HTTP server.

Run with:  python3 demos/04_dedup_and_federation.py
"""

import json
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from snipsearch import AnalyzerConfig, default_stopwords
from snipsearch.dedup import clusters_to_documents, dedup_captions
from snipsearch.documents import RawDocument
from snipsearch.index import build_streaming, merge_segments
from snipsearch.server import FederationConfig, create_app

work = Path(tempfile.mkdtemp(prefix="snipsearch-demo-"))

# ---------------------------------------------------------------------------
# 1. Caption dedup: captions that are identical after whitespace
#    normalization are clustered; every URL survives, attached to its cluster.
#    Pass ram_pair_budget to force the external-sort spill path — the result
#    is identical either way.
# ---------------------------------------------------------------------------
pairs = [
    ("fluffy orange cat", "http://img/1"),
    ("fluffy  orange cat ", "http://img/2"),   # same after normalization
    ("gray wolf", "http://img/3"),
    ("fluffy orange cat", "http://img/4"),
]
clusters = dedup_captions(pairs, ram_pair_budget=2, tmp_dir=work / "spill")
for c in clusters:
    print(f"{len(c.urls)}x {c.caption!r} -> {c.urls}")

# Clusters become ordinary documents: caption as text, URLs in metadata.
caption_docs = list(clusters_to_documents(clusters))

# ---------------------------------------------------------------------------
# 2. Build two indices: the captions and a toy text corpus.
# ---------------------------------------------------------------------------
config = AnalyzerConfig(kind="simple", stopwords=default_stopwords())

captions_ix = merge_segments(
    build_streaming(iter(caption_docs), config, out_dir=work / "cap-parts"),
    work / "captions")

text_docs = [RawDocument(id="t1", text="the cat chased a laser pointer"),
             RawDocument(id="t2", text="wolves howl at the moon")]
text_ix = merge_segments(
    build_streaming(iter(text_docs), config, out_dir=work / "txt-parts"),
    work / "text")

# ---------------------------------------------------------------------------
# 3. Federate them. One /search call fans out to every index concurrently and
#    reports per-index latency. (TestClient here; `snipsearch serve` runs the
#    same app under uvicorn.)
# ---------------------------------------------------------------------------
app = create_app(FederationConfig(indices={"captions": str(captions_ix.dir),
                                           "text": str(text_ix.dir)}))
client = TestClient(app)

print("\n/indices:", json.dumps(client.get("/indices").json(), indent=2))

body = client.get("/search", params={"q": "cat", "k": 3}).json()
for name, hits in body["results"].items():
    print(f"\nindex {name!r} ({body['took_ms'][name]} ms):")
    for h in hits:
        print(f"  {h['id']:10s} {h['score']:.4f} {h['text']!r}")
