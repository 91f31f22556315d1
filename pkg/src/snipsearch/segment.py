"""Chunking documents into snippets of at most N words.

A "word" is a maximal run of non-whitespace code points. Snippets are
consecutive and non-overlapping; inter-word whitespace is normalized to a
single space so that space-joining the snippets reproduces the normalized
document text.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from snipsearch.documents import RawDocument, Snippet

DEFAULT_MAX_WORDS = 256


def segment(doc: RawDocument, max_words: int = DEFAULT_MAX_WORDS) -> list[Snippet]:
    if max_words < 1:
        raise ValueError("max_words must be >= 1")
    words = doc.text.split()
    snippets = []
    for seq, start in enumerate(range(0, len(words), max_words)):
        chunk = words[start : start + max_words]
        snippets.append(
            Snippet(
                doc_id=doc.id,
                seq=seq,
                text=" ".join(chunk),
                word_count=len(chunk),
                meta=dict(doc.meta),
            )
        )
    return snippets


def segment_all(
    docs: Iterable[RawDocument], max_words: int = DEFAULT_MAX_WORDS
) -> Iterator[Snippet]:
    for doc in docs:
        yield from segment(doc, max_words)
