"""Walkthrough: the two text analyzers.

Run with:  python3 demos/02_analyzers.py
"""

import tempfile
from pathlib import Path

from snipsearch.analysis import AnalyzerConfig, analyze, analyzer_digest
from snipsearch.porter import stem

# ---------------------------------------------------------------------------
# 1. The simple analyzer: NFC normalize, lowercase, split on non-alphanumerics,
#    drop stopwords, optionally Porter-stem.
# ---------------------------------------------------------------------------
plain = AnalyzerConfig(kind="simple", stopwords=frozenset({"the", "a"}))
print(analyze(plain, "The CAT's nine lives — all 9 of them!"))

stemming = AnalyzerConfig(kind="simple", stopwords=frozenset({"the", "a"}),
                          stemming=True)
print(analyze(stemming, "relational generalizations were happily agreed"))

# A few stems worth staring at — the classic rules are not always intuitive:
for word in ["caresses", "ponies", "relational", "oscillators", "tied"]:
    print(f"  {word:14s} -> {stem(word)}")

# ---------------------------------------------------------------------------
# 2. The subword analyzer: greedy BPE inference over a vocab + ranked merges.
#    Lowest-rank adjacent pair merges first, repeatedly, per word.
# ---------------------------------------------------------------------------
work = Path(tempfile.mkdtemp(prefix="snipsearch-demo-"))
(work / "vocab.txt").write_text("l\no\nw\ne\nr\nlo\nlow\ner\nlower\n")
(work / "merges.txt").write_text("l o\nlo w\ne r\nlow er\n")

subword = AnalyzerConfig(kind="subword", vocab_path=str(work / "vocab.txt"),
                         merges_path=str(work / "merges.txt"))
for text in ["low", "lower", "lowest"]:
    print(f"  {text!r:10} -> {analyze(subword, text)}")

# Characters with no vocab entry follow the unknown policy: byte-fallback
# emits <0xNN> tokens when the vocab defines them; this toy vocab has none,
# so the 'z' simply vanishes.
print("  unknown:", analyze(subword, "lz"))

# ---------------------------------------------------------------------------
# 3. Every index records a digest of its analyzer. The digest hashes the
#    config with vocab/merges *contents* inlined, so it is path-independent:
#    copy the files anywhere and the digest — and thus index compatibility —
#    is unchanged. Queries are refused if digests disagree.
# ---------------------------------------------------------------------------
print("simple digest: ", analyzer_digest(plain)[:16], "...")
print("subword digest:", analyzer_digest(subword)[:16], "...")
