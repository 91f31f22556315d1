"""Immutable on-disk inverted index segments.

Segment directory layout (format_version 1):

    manifest.json   counts, analyzer serialization + digest, BM25 params, checksum
    lexicon.tsv     term <TAB> term_id <TAB> df <TAB> cf
    postings.bin    per term (in term_id order): delta-encoded varint ordinals
                    interleaved with varint term frequencies
    offsets.bin     u64-LE byte offset into postings.bin per term_id
    lengths.bin     varint analyzed-term count per snippet ordinal
    store.jsonl     one snippet per line: {"id", "text", "meta"}
    store.idx       u64-LE byte offset into store.jsonl per ordinal

Delta base is the previous ordinal; the first delta is the ordinal itself.
Segments are immutable once finalized and safe for any number of readers.
"""

from __future__ import annotations

import hashlib
import json
import os
import struct
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from snipsearch import varint
from snipsearch.analysis import (
    AnalyzerConfig,
    analyzer_digest,
    analyzer_from_manifest,
    config_to_manifest,
    digest_of_manifest,
)
from snipsearch.documents import CorpusSource, IndexError_, RawDocument, ShardPlan, Snippet
from snipsearch.ingest import open_source, partition
from snipsearch.segment import DEFAULT_MAX_WORDS, segment

FORMAT_VERSION = 1
DEFAULT_K1 = 0.9
DEFAULT_B = 0.4


def _canonical(manifest: dict) -> str:
    return json.dumps(manifest, sort_keys=True, ensure_ascii=False)


def _manifest_checksum(manifest: dict) -> str:
    body = {k: v for k, v in manifest.items() if k != "checksum"}
    return hashlib.sha256(_canonical(body).encode("utf-8")).hexdigest()


class SegmentWriter:
    """Accumulates analyzed snippets in RAM; finalize() writes one segment."""

    def __init__(self, analyzer_entry: dict, max_words: int,
                 k1: float = DEFAULT_K1, b: float = DEFAULT_B):
        self.analyzer_entry = analyzer_entry
        self.max_words = max_words
        self.k1 = k1
        self.b = b
        # term -> [encoded deltas+tfs, previous ordinal, df, cf]
        self._postings: dict[str, list] = {}
        self._lengths: list[int] = []
        self._store: list[tuple[str, str, dict]] = []

    @property
    def snippet_count(self) -> int:
        return len(self._lengths)

    def add(self, snippet: Snippet, terms: list[str]) -> None:
        ordinal = len(self._lengths)
        self._lengths.append(len(terms))
        self._store.append((snippet.snippet_id, snippet.text, snippet.meta))
        for term, tf in Counter(terms).items():
            entry = self._postings.get(term)
            if entry is None:
                entry = [bytearray(), 0, 0, 0]
                self._postings[term] = entry
            varint.encode(ordinal - entry[1], entry[0])
            varint.encode(tf, entry[0])
            entry[1] = ordinal
            entry[2] += 1
            entry[3] += tf

    def finalize(self, out_dir: str | Path) -> Path:
        if not self._lengths:
            raise IndexError_("nothing to index: segment would be empty")
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)

        terms = sorted(self._postings)
        offsets = bytearray()
        pos = 0
        with (out / "lexicon.tsv").open("w", encoding="utf-8") as lex, \
             (out / "postings.bin").open("wb") as post:
            for term_id, term in enumerate(terms):
                buf, _, df, cf = self._postings[term]
                lex.write(f"{term}\t{term_id}\t{df}\t{cf}\n")
                offsets += struct.pack("<Q", pos)
                post.write(buf)
                pos += len(buf)
        (out / "offsets.bin").write_bytes(bytes(offsets))

        lengths = bytearray()
        varint.encode_all(self._lengths, lengths)
        (out / "lengths.bin").write_bytes(bytes(lengths))

        idx = bytearray()
        byte_pos = 0
        with (out / "store.jsonl").open("wb") as store:
            for sid, text, meta in self._store:
                line = json.dumps({"id": sid, "text": text, "meta": meta},
                                  ensure_ascii=False).encode("utf-8") + b"\n"
                idx += struct.pack("<Q", byte_pos)
                store.write(line)
                byte_pos += len(line)
        (out / "store.idx").write_bytes(bytes(idx))

        total = sum(self._lengths)
        n = len(self._lengths)
        manifest = {
            "format_version": FORMAT_VERSION,
            "analyzer": self.analyzer_entry,
            "analyzer_digest": digest_of_manifest(self.analyzer_entry),
            "snippet_count": n,
            "total_term_occurrences": total,
            "avgdl": total / n,
            "max_words": self.max_words,
            "bm25": {"k1": self.k1, "b": self.b},
        }
        manifest["checksum"] = _manifest_checksum(manifest)
        (out / "manifest.json").write_text(_canonical(manifest) + "\n", "utf-8")
        return out


class IndexSegment:
    """Read-only handle on a finalized segment directory."""

    def __init__(self, directory: str | Path):
        self.dir = Path(directory)
        try:
            manifest = json.loads((self.dir / "manifest.json").read_text("utf-8"))
        except FileNotFoundError as exc:
            raise IndexError_(f"missing manifest.json in {self.dir}") from exc
        except ValueError as exc:
            raise IndexError_(f"corrupt manifest.json in {self.dir}: {exc}") from exc
        if manifest.get("format_version") != FORMAT_VERSION:
            raise IndexError_(
                f"{self.dir}: format_version {manifest.get('format_version')} "
                f"not supported (expected {FORMAT_VERSION})"
            )
        if manifest.get("checksum") != _manifest_checksum(manifest):
            raise IndexError_(f"{self.dir}: manifest checksum mismatch")
        self.manifest = manifest
        self.snippet_count: int = manifest["snippet_count"]
        self.avgdl: float = manifest["avgdl"]
        self.total_term_occurrences: int = manifest["total_term_occurrences"]
        self.max_words: int = manifest["max_words"]
        self.analyzer_digest: str = manifest["analyzer_digest"]
        self.k1: float = manifest["bm25"]["k1"]
        self.b: float = manifest["bm25"]["b"]

        self._lexicon: dict[str, tuple[int, int, int]] = {}
        try:
            with (self.dir / "lexicon.tsv").open("r", encoding="utf-8") as fh:
                for line in fh:
                    term, tid, df, cf = line.rstrip("\n").split("\t")
                    self._lexicon[term] = (int(tid), int(df), int(cf))
        except FileNotFoundError as exc:
            raise IndexError_(f"missing lexicon.tsv in {self.dir}") from exc

        for name in ("postings.bin", "offsets.bin", "lengths.bin", "store.jsonl", "store.idx"):
            if not (self.dir / name).exists():
                raise IndexError_(f"missing {name} in {self.dir}")

        self._offsets = np.fromfile(self.dir / "offsets.bin", dtype="<u8")
        self._postings_size = (self.dir / "postings.bin").stat().st_size
        self.lengths = varint.decode_stream((self.dir / "lengths.bin").read_bytes())
        if self.lengths.size != self.snippet_count:
            raise IndexError_(f"{self.dir}: lengths.bin count mismatch")
        self._store_offsets = np.fromfile(self.dir / "store.idx", dtype="<u8")
        self._store_file = (self.dir / "store.jsonl").open("rb")
        self._store_size = (self.dir / "store.jsonl").stat().st_size
        self._analyzer = None

    @property
    def analyzer(self):
        if self._analyzer is None:
            self._analyzer = analyzer_from_manifest(self.manifest["analyzer"], self.dir)
        return self._analyzer

    @property
    def lexicon_size(self) -> int:
        return len(self._lexicon)

    def term_stats(self, term: str) -> tuple[int, int]:
        """(df, cf); unknown term -> (0, 0)."""
        entry = self._lexicon.get(term)
        return (entry[1], entry[2]) if entry else (0, 0)

    def top_terms(self, k: int) -> list[tuple[str, int, int]]:
        """k highest-df (term, df, cf) entries; ties broken lexicographically."""
        ranked = sorted(self._lexicon.items(), key=lambda kv: (-kv[1][1], kv[0]))
        return [(t, e[1], e[2]) for t, e in ranked[:k]]

    def terms(self) -> Iterator[str]:
        return iter(self._lexicon)

    def postings(self, term: str) -> tuple[np.ndarray, np.ndarray]:
        """(ordinals, term frequencies) for a term; empty arrays if absent."""
        entry = self._lexicon.get(term)
        if entry is None:
            empty = np.empty(0, dtype=np.int64)
            return empty, empty
        tid = entry[0]
        start = int(self._offsets[tid])
        end = int(self._offsets[tid + 1]) if tid + 1 < self._offsets.size else self._postings_size
        with (self.dir / "postings.bin").open("rb") as fh:
            fh.seek(start)
            buf = fh.read(end - start)
        flat = varint.decode_stream(buf)
        ordinals = np.cumsum(flat[0::2])
        return ordinals, flat[1::2]

    def snippet(self, ordinal: int) -> dict:
        """{"id", "text", "meta"} for one ordinal."""
        if not 0 <= ordinal < self.snippet_count:
            raise IndexError_(f"ordinal {ordinal} out of range")
        start = int(self._store_offsets[ordinal])
        end = (int(self._store_offsets[ordinal + 1])
               if ordinal + 1 < self._store_offsets.size else self._store_size)
        # pread is positional, so concurrent readers never race on seek state
        return json.loads(os.pread(self._store_file.fileno(), end - start, start))

    def snippets(self) -> Iterator[dict]:
        with (self.dir / "store.jsonl").open("r", encoding="utf-8") as fh:
            for line in fh:
                yield json.loads(line)

    def close(self) -> None:
        self._store_file.close()


def open_segment(directory: str | Path) -> IndexSegment:
    return IndexSegment(directory)


def build_offline(
    source: CorpusSource,
    analyzer_config: AnalyzerConfig,
    max_words: int = DEFAULT_MAX_WORDS,
    plan: ShardPlan | None = None,
    out_dir: str | Path = "index",
    strict: bool = False,
    k1: float = DEFAULT_K1,
    b: float = DEFAULT_B,
    jobs: int | None = None,
) -> list[IndexSegment]:
    """Segment, analyze, and invert a corpus into one segment per shard.

    Shards that receive no documents are skipped; an entirely empty corpus
    is an error.
    """
    from snipsearch.analysis import build_analyzer

    plan = plan or ShardPlan()
    analyzer = build_analyzer(analyzer_config)
    entry = config_to_manifest(analyzer_config)
    writers = [SegmentWriter(entry, max_words, k1, b) for _ in range(plan.shard_count)]
    seen_ids: set[str] = set()
    for shard, doc in partition(open_source(source, strict=strict), plan):
        if doc.id in seen_ids:
            raise IndexError_(f"duplicate document id {doc.id!r}")
        seen_ids.add(doc.id)
        for snip in segment(doc, max_words):
            writers[shard].add(snip, analyzer.analyze(snip.text))
    if all(w.snippet_count == 0 for w in writers):
        raise IndexError_("nothing to index: corpus yielded no snippets")
    out = Path(out_dir)
    occupied = [(i, w) for i, w in enumerate(writers) if w.snippet_count]
    with ThreadPoolExecutor(max_workers=jobs or os.cpu_count() or 1) as pool:
        dirs = list(pool.map(
            lambda iw: iw[1].finalize(out / f"shard-{iw[0]:04d}"), occupied
        ))
    return [IndexSegment(d) for d in dirs]


def build_streaming(
    documents: Iterable[RawDocument],
    analyzer_config: AnalyzerConfig,
    max_words: int = DEFAULT_MAX_WORDS,
    ram_budget_docs: int = 100_000,
    out_dir: str | Path = "index",
    k1: float = DEFAULT_K1,
    b: float = DEFAULT_B,
) -> list[IndexSegment]:
    """One pass over a document stream; spills a finalized sub-segment
    whenever ram_budget_docs snippets are buffered. Never re-reads the stream."""
    from snipsearch.analysis import build_analyzer

    if ram_budget_docs < 1:
        raise ValueError("ram_budget_docs must be >= 1")
    analyzer = build_analyzer(analyzer_config)
    entry = config_to_manifest(analyzer_config)
    out = Path(out_dir)
    seen_ids: set[str] = set()
    segments: list[IndexSegment] = []
    writer = SegmentWriter(entry, max_words, k1, b)
    part = 0

    def spill():
        nonlocal writer, part
        segments.append(IndexSegment(writer.finalize(out / f"part-{part:04d}")))
        part += 1
        writer = SegmentWriter(entry, max_words, k1, b)

    for doc in documents:
        if doc.id in seen_ids:
            raise IndexError_(f"duplicate document id {doc.id!r}")
        seen_ids.add(doc.id)
        for snip in segment(doc, max_words):
            writer.add(snip, analyzer.analyze(snip.text))
            if writer.snippet_count >= ram_budget_docs:
                spill()
    if writer.snippet_count:
        spill()
    if not segments:
        raise IndexError_("nothing to index: stream yielded no snippets")
    return segments


def merge_segments(
    segments: list[IndexSegment | str | Path], out_dir: str | Path
) -> IndexSegment:
    """Consolidate segments into one, remapping ordinals by segment order.

    All inputs must share the analyzer digest, max_words, and BM25 params.
    """
    handles = [s if isinstance(s, IndexSegment) else IndexSegment(s) for s in segments]
    if not handles:
        raise IndexError_("no segments to merge")
    first = handles[0]
    for h in handles[1:]:
        if h.analyzer_digest != first.analyzer_digest:
            raise IndexError_(
                f"analyzer digest mismatch: {h.dir} differs from {first.dir}"
            )
        if h.max_words != first.max_words:
            raise IndexError_(f"max_words mismatch: {h.dir} differs from {first.dir}")
        if (h.k1, h.b) != (first.k1, first.b):
            raise IndexError_(f"BM25 parameter mismatch: {h.dir} differs from {first.dir}")

    seen: set[str] = set()
    for h in handles:
        for snip in h.snippets():
            if snip["id"] in seen:
                raise IndexError_(f"overlapping snippet id {snip['id']!r}")
            seen.add(snip["id"])

    bases = []
    total_n = 0
    for h in handles:
        bases.append(total_n)
        total_n += h.snippet_count

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    all_terms = sorted(set().union(*(set(h.terms()) for h in handles)))
    offsets = bytearray()
    pos = 0
    with (out / "lexicon.tsv").open("w", encoding="utf-8") as lex, \
         (out / "postings.bin").open("wb") as post:
        for term_id, term in enumerate(all_terms):
            df = cf = 0
            buf = bytearray()
            prev = 0
            for h, base in zip(handles, bases):
                ords, tfs = h.postings(term)
                if ords.size == 0:
                    continue
                df += ords.size
                cf += int(tfs.sum())
                for o, tf in zip(ords.tolist(), tfs.tolist()):
                    varint.encode(o + base - prev, buf)
                    varint.encode(tf, buf)
                    prev = o + base
            lex.write(f"{term}\t{term_id}\t{df}\t{cf}\n")
            offsets += struct.pack("<Q", pos)
            post.write(buf)
            pos += len(buf)
    (out / "offsets.bin").write_bytes(bytes(offsets))

    lengths = bytearray()
    for h in handles:
        varint.encode_all(h.lengths.tolist(), lengths)
    (out / "lengths.bin").write_bytes(bytes(lengths))

    idx = bytearray()
    byte_pos = 0
    with (out / "store.jsonl").open("wb") as store:
        for h in handles:
            data = (h.dir / "store.jsonl").read_bytes()
            store.write(data)
            local = np.fromfile(h.dir / "store.idx", dtype="<u8")
            for off in local.tolist():
                idx += struct.pack("<Q", byte_pos + off)
            byte_pos += len(data)
    (out / "store.idx").write_bytes(bytes(idx))

    total = sum(h.total_term_occurrences for h in handles)
    manifest = {
        "format_version": FORMAT_VERSION,
        "analyzer": first.manifest["analyzer"],
        "analyzer_digest": first.analyzer_digest,
        "snippet_count": total_n,
        "total_term_occurrences": total,
        "avgdl": total / total_n,
        "max_words": first.max_words,
        "bm25": {"k1": first.k1, "b": first.b},
    }
    manifest["checksum"] = _manifest_checksum(manifest)
    (out / "manifest.json").write_text(_canonical(manifest) + "\n", "utf-8")
    return IndexSegment(out)
