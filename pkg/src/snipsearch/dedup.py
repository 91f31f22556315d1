"""Collapse caption-URL pairs into unique-caption clusters.

Captions are normalized (whitespace runs collapsed, ends trimmed, case
preserved) and grouped by exact match. Cluster order is first appearance;
URL order within a cluster is appearance order. Inputs larger than the RAM
pair budget are handled by an external sort-merge over spilled runs.
"""

from __future__ import annotations

import heapq
import json
import logging
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Iterator

from snipsearch.documents import RawDocument

log = logging.getLogger(__name__)


@dataclass
class CaptionCluster:
    caption: str
    urls: list[str] = field(default_factory=list)


def normalize_caption(caption: str) -> str:
    return " ".join(caption.split())


def dedup_captions(
    pairs: Iterable[tuple[str, str]],
    ram_pair_budget: int | None = None,
    tmp_dir: str | Path | None = None,
) -> list[CaptionCluster]:
    """Single pass over (caption, url) pairs; empty captions after
    normalization are skipped (count logged)."""
    if ram_pair_budget is None:
        return _dedup_in_ram(pairs)
    return _dedup_spilling(pairs, ram_pair_budget, tmp_dir)


def _dedup_in_ram(pairs: Iterable[tuple[str, str]]) -> list[CaptionCluster]:
    clusters: dict[str, CaptionCluster] = {}
    skipped = 0
    for caption, url in pairs:
        caption = normalize_caption(caption)
        if not caption:
            skipped += 1
            continue
        cluster = clusters.get(caption)
        if cluster is None:
            clusters[caption] = cluster = CaptionCluster(caption)
        cluster.urls.append(url)
    if skipped:
        log.warning("skipped %d pairs with empty captions", skipped)
    return list(clusters.values())  # dicts preserve first-seen order


def _dedup_spilling(
    pairs: Iterable[tuple[str, str]], budget: int, tmp_dir: str | Path | None
) -> list[CaptionCluster]:
    skipped = 0
    runs: list[IO[str]] = []
    buffer: list[tuple[str, int, str]] = []  # (caption, global seq, url)
    if tmp_dir is not None:
        Path(tmp_dir).mkdir(parents=True, exist_ok=True)

    def spill():
        buffer.sort()
        fh = tempfile.TemporaryFile("w+", encoding="utf-8", dir=tmp_dir)
        for row in buffer:
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")
        fh.seek(0)
        runs.append(fh)
        buffer.clear()

    for seq, (caption, url) in enumerate(pairs):
        caption = normalize_caption(caption)
        if not caption:
            skipped += 1
            continue
        buffer.append((caption, seq, url))
        if len(buffer) >= budget:
            spill()
    if buffer:
        spill()
    if skipped:
        log.warning("skipped %d pairs with empty captions", skipped)

    def read_run(fh: IO[str]) -> Iterator[tuple[str, int, str]]:
        for line in fh:
            caption, seq, url = json.loads(line)
            yield caption, seq, url

    clusters: list[tuple[int, CaptionCluster]] = []
    current: CaptionCluster | None = None
    first_seq = 0
    for caption, seq, url in heapq.merge(*(read_run(fh) for fh in runs)):
        if current is None or caption != current.caption:
            if current is not None:
                clusters.append((first_seq, current))
            current = CaptionCluster(caption)
            first_seq = seq
        current.urls.append(url)
    if current is not None:
        clusters.append((first_seq, current))
    for fh in runs:
        fh.close()
    clusters.sort(key=lambda pair: pair[0])
    return [c for _, c in clusters]


def clusters_to_documents(clusters: Iterable[CaptionCluster]) -> Iterator[RawDocument]:
    """One indexable document per cluster; URLs ride along in meta."""
    for ordinal, cluster in enumerate(clusters):
        yield RawDocument(
            id=f"laion-{ordinal}",
            text=cluster.caption,
            meta={"urls": json.dumps(cluster.urls)},
        )


def write_clusters_jsonl(clusters: Iterable[CaptionCluster], fh: IO[str]) -> int:
    n = 0
    for cluster in clusters:
        fh.write(json.dumps({"caption": cluster.caption, "urls": cluster.urls},
                            ensure_ascii=False) + "\n")
        n += 1
    return n
