"""Reading documents from disk files or unbounded streams.

Supported formats: JSONL (one object per line), JSON (top-level array),
CSV/TSV (first row is the header). A path of "-" reads standard input.
All input is UTF-8.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import IO, Iterable, Iterator

from snipsearch.documents import CorpusSource, IngestError, RawDocument, ShardPlan

log = logging.getLogger(__name__)


def open_source(
    source: CorpusSource,
    stream: IO[str] | IO[bytes] | None = None,
    strict: bool = False,
) -> Iterator[RawDocument]:
    """Yield RawDocuments lazily, in on-disk/stream order.

    Malformed records are skipped with a warning naming the record ordinal,
    or abort the run when ``strict`` is set.
    """
    if source.kind == "stream" or source.path == "-":
        text_stream = _as_text(stream if stream is not None else sys.stdin.buffer)
        yield from _parse(source, text_stream, source.path, strict)
        return

    path = Path(source.path)
    if source.kind == "directory":
        if not path.is_dir():
            raise IngestError(f"not a directory: {path}")
        suffix = "." + source.format
        files = sorted(p for p in path.iterdir() if p.suffix == suffix)
        for p in files:
            with p.open("r", encoding="utf-8") as fh:
                yield from _parse(source, fh, str(p), strict)
        return

    if not path.is_file():
        raise IngestError(f"not a readable file: {path}")
    with path.open("r", encoding="utf-8", newline="") as fh:
        yield from _parse(source, fh, str(path), strict)


def _as_text(stream: IO) -> IO[str]:
    if isinstance(stream, io.TextIOBase):
        return stream
    if hasattr(stream, "read") and isinstance(stream.read(0), bytes):
        return io.TextIOWrapper(stream, encoding="utf-8", newline="")
    return stream


def _parse(source: CorpusSource, fh: IO[str], name: str, strict: bool) -> Iterator[RawDocument]:
    if source.format == "jsonl":
        yield from _parse_jsonl(source, fh, name, strict)
    elif source.format == "json":
        yield from _parse_json(source, fh, name, strict)
    elif source.format in ("csv", "tsv"):
        yield from _parse_delimited(source, fh, name, strict)
    else:  # unreachable, CorpusSource validates
        raise IngestError(f"unknown format {source.format!r}")


def _record_to_doc(source: CorpusSource, record: dict, ordinal: int, name: str) -> RawDocument:
    if not isinstance(record, dict):
        raise ValueError(f"record {ordinal} in {name}: expected an object, got {type(record).__name__}")
    if source.id_field not in record:
        raise ValueError(f"record {ordinal} in {name}: missing id field {source.id_field!r}")
    if source.text_field not in record:
        raise ValueError(f"record {ordinal} in {name}: missing text field {source.text_field!r}")
    meta = record.get("meta")
    if not isinstance(meta, dict):
        meta = {
            k: v if isinstance(v, str) else json.dumps(v, ensure_ascii=False)
            for k, v in record.items()
            if k not in (source.id_field, source.text_field, "meta")
        }
    doc = RawDocument(
        id=str(record[source.id_field]),
        text=str(record[source.text_field]),
        meta={str(k): str(v) for k, v in meta.items()},
    )
    doc.validate_text()
    return doc


def _handle_bad_record(exc: Exception, ordinal: int, name: str, strict: bool) -> None:
    if strict:
        raise IngestError(f"malformed record {ordinal} in {name}: {exc}") from exc
    log.warning("skipping malformed record %d in %s: %s", ordinal, name, exc)


def _parse_jsonl(source, fh, name, strict):
    for ordinal, line in enumerate(fh):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
            yield _record_to_doc(source, record, ordinal, name)
        except (ValueError, TypeError) as exc:
            _handle_bad_record(exc, ordinal, name, strict)


def _parse_json(source, fh, name, strict):
    try:
        records = json.load(fh)
    except ValueError as exc:
        raise IngestError(f"invalid JSON in {name}: {exc}") from exc
    if not isinstance(records, list):
        raise IngestError(f"{name}: top-level JSON value must be an array")
    for ordinal, record in enumerate(records):
        try:
            yield _record_to_doc(source, record, ordinal, name)
        except (ValueError, TypeError) as exc:
            _handle_bad_record(exc, ordinal, name, strict)


def _parse_delimited(source, fh, name, strict):
    if source.format == "csv":
        # csv supports embedded delimiters and newlines inside quoted fields
        reader = csv.reader(fh)
        rows: Iterable[list[str]] = reader
    else:
        # TSV: quoted fields allowed, but records never span lines
        rows = (next(csv.reader([line.rstrip("\r\n")], delimiter="\t")) for line in fh if line.strip())
    header = next(iter(rows), None)
    if header is None:
        return
    for ordinal, row in enumerate(rows):
        if not row:
            continue
        try:
            if len(row) != len(header):
                raise ValueError(f"expected {len(header)} columns, got {len(row)}")
            yield _record_to_doc(source, dict(zip(header, row)), ordinal, name)
        except (ValueError, TypeError) as exc:
            _handle_bad_record(exc, ordinal, name, strict)


def partition(
    documents: Iterable[RawDocument], plan: ShardPlan
) -> Iterator[tuple[int, RawDocument]]:
    """Tag each document with its shard index: ordinal mod shard_count."""
    for ordinal, doc in enumerate(documents):
        yield ordinal % plan.shard_count, doc


def write_jsonl(documents: Iterable[RawDocument], fh: IO[str], text_field: str = "contents") -> int:
    """Write documents as JSONL; returns the number written. Round-trips with open_source."""
    n = 0
    for doc in documents:
        fh.write(
            json.dumps({"id": doc.id, text_field: doc.text, "meta": doc.meta}, ensure_ascii=False)
            + "\n"
        )
        n += 1
    return n
