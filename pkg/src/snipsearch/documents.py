"""Core record types shared across the pipeline."""

from __future__ import annotations

from dataclasses import dataclass, field


class SnipsearchError(Exception):
    """Base class for all errors raised by this package."""


class IngestError(SnipsearchError):
    """Unreadable source, unknown format, or (in strict mode) a malformed record."""


class IndexError_(SnipsearchError):
    """Index build, merge, or open failure."""


@dataclass
class RawDocument:
    """One corpus record as read from disk or a stream."""

    id: str
    text: str
    meta: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not self.id:
            raise ValueError("document id must be non-empty")

    def validate_text(self) -> None:
        """Reject unpaired surrogate code points left over from decoding."""
        try:
            self.text.encode("utf-8")
        except UnicodeEncodeError as exc:
            raise ValueError(f"document {self.id!r}: unpaired surrogate in text") from exc


FORMATS = ("jsonl", "json", "csv", "tsv")
KINDS = ("file", "directory", "stream")


@dataclass
class CorpusSource:
    """Where documents come from and how to read them.

    ``path`` is a filesystem path for kind=file/directory; "-" or a supplied
    ``stream`` means standard input / an arbitrary readable text stream.
    Fields of a record other than the id/text fields are carried into meta.
    """

    path: str = "-"
    kind: str = "file"
    format: str = "jsonl"
    id_field: str = "id"
    text_field: str = "contents"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown source kind {self.kind!r}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}; expected one of {FORMATS}")


@dataclass
class ShardPlan:
    """How many shards to build and how many documents to hold in RAM."""

    shard_count: int = 1
    max_docs_in_ram: int = 100_000

    def __post_init__(self):
        if self.shard_count < 1:
            raise ValueError("shard_count must be >= 1")
        if self.max_docs_in_ram < 1:
            raise ValueError("max_docs_in_ram must be >= 1")


@dataclass
class Snippet:
    """A contiguous chunk of a document; the unit of indexing and display."""

    doc_id: str
    seq: int
    text: str
    word_count: int
    meta: dict[str, str] = field(default_factory=dict)

    @property
    def snippet_id(self) -> str:
        return f"{self.doc_id}#{self.seq}"
